#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "machh/error.hpp"

namespace machh {

/// Vertices are 0-based inside the library; all file and CLI I/O is 1-based.
using Vertex = int;

/// Upper bound on the ground set so that a subset fits one 32-bit word.
inline constexpr int kMaxGroundSize = 30;

using Mask = std::uint32_t;

inline constexpr Mask full_mask(int m) {
  return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1;
}

inline constexpr Mask vertex_bit(Vertex v) { return Mask{1} << v; }

inline constexpr int cardinality(Mask s) { return std::popcount(s); }

inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Lexicographic order on sorted vertex lists (so {1,2} < {1,2,3} < {1,3}).
inline constexpr bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  const Mask above = ~((low << 1) - 1);
  if (a & low) {
    // a has the smaller element at the first difference unless b ended there
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

/// Number of elements of `set` strictly smaller than vertex `v`.
inline constexpr int count_below(Mask set, Vertex v) {
  return std::popcount(set & (vertex_bit(v) - 1));
}

/// Packs the bits of `s` selected by `support` into the low |support| bits,
/// preserving order. This is the order-preserving relabeling I -> [|I|].
inline constexpr Mask compress(Mask s, Mask support) {
  Mask out = 0;
  int k = 0;
  for (Mask rest = support; rest != 0; rest &= rest - 1, ++k) {
    if (s & rest & (~rest + 1)) out |= Mask{1} << k;
  }
  return out;
}

/// Inverse of compress: spreads the low bits of `s` onto the positions of
/// `support`.
inline constexpr Mask expand(Mask s, Mask support) {
  Mask out = 0;
  int k = 0;
  for (Mask rest = support; rest != 0; rest &= rest - 1, ++k) {
    if (s & (Mask{1} << k)) out |= rest & (~rest + 1);
  }
  return out;
}

/// All masks on [m] with exactly `size` elements, in lexicographic order.
std::vector<Mask> subsets_of_size(int m, int size);

/// Sorted 0-based vertex list of a mask.
std::vector<Vertex> vertices_of(Mask s);

/// A subset I of the ground set [m].
class SubsetMask {
 public:
  SubsetMask() = default;
  SubsetMask(Mask bits, int m) : bits_(bits), m_(m) {
    if (m < 0 || m > kMaxGroundSize || (bits & ~full_mask(m)) != 0) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "mask has bits outside the ground set of size " +
                      std::to_string(m));
    }
  }

  /// Builds a mask from 1-based vertex labels.
  static SubsetMask from_one_based(const std::vector<int>& vertices, int m);

  Mask bits() const { return bits_; }
  int ground_size() const { return m_; }
  int size() const { return cardinality(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  bool is_subset_of(const SubsetMask& other) const {
    return is_subset(bits_, other.bits_);
  }

  std::vector<Vertex> vertices() const { return vertices_of(bits_); }
  std::vector<int> one_based() const;

  /// "{1,3}" style rendering with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.bits_ == b.bits_ && a.m_ == b.m_;
  }
  friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
    return lex_less(a.bits_, b.bits_);
  }

 private:
  Mask bits_ = 0;
  int m_ = 0;
};

}  // namespace machh
