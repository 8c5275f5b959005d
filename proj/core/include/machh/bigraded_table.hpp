#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace machh {

/// Bidegree (-k, 2l): l = |I| and k = l - p - 1 for a class of H̃^p(K_I).
struct Bidegree {
  int k = 0;
  int l = 0;

  int total_degree() const { return -k + 2 * l; }
  int row() const { return l - k - 1; }

  /// The literal "(-k,2l)" key, e.g. "(-1,4)" or "(0,0)".
  std::string key() const;

  static Bidegree from_row(int p, int l) { return {l - p - 1, l}; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  /// Ordered by l, then k.
  friend bool operator<(const Bidegree& a, const Bidegree& b) {
    return a.l != b.l ? a.l < b.l : a.k < b.k;
  }
};

/// Nonnegative ranks indexed by bidegree; absent entries are zero.
class BigradedRankTable {
 public:
  using Rank = std::int64_t;

  BigradedRankTable() = default;

  /// Adds `rank` at the bidegree; zero ranks leave the table unchanged.
  void add(Bidegree at, Rank rank);

  Rank at(Bidegree b) const;
  const std::map<Bidegree, Rank>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Rank total() const;

  /// Σ (-1)^k · rank, i.e. (-1)^{total degree} weighting.
  Rank euler_characteristic() const;

  std::map<int, Rank> by_total_degree() const;

  /// Per-row totals keyed by p = l - k - 1; rows with zero rank are absent.
  std::map<int, Rank> by_row() const;

  /// Bidegree-additive convolution, the table of a tensor product.
  BigradedRankTable convolve(const BigradedRankTable& other) const;

  friend bool operator==(const BigradedRankTable&, const BigradedRankTable&) = default;

 private:
  std::map<Bidegree, Rank> entries_;
};

/// Σ (-1)^k · rank over the table.
inline BigradedRankTable::Rank euler_characteristic_hh(const BigradedRankTable& t) {
  return t.euler_characteristic();
}

}  // namespace machh
