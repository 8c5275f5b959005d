#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "machh/simplicial_complex.hpp"

namespace machh {

/// One nonzero coboundary coefficient: row index in degree q+1 and its sign.
struct CoboundaryEntry {
  std::uint32_t row;
  std::int8_t sign;
};

/// Augmented simplicial cochain complex of a full subcomplex K_I.
///
/// Degree q has the q-simplices (faces with q+1 vertices) as basis, ordered
/// lexicographically; degree -1 holds the empty simplex. Simplices keep the
/// vertex masks of the ambient complex. The coefficient of T* in δ(S*) is
/// (-1)^{#{i ∈ S : i < j}} where T = S ∪ {j}.
class AugmentedCochainComplex {
 public:
  AugmentedCochainComplex() = default;

  Mask support() const { return support_; }

  /// Highest degree with a nonzero cochain group.
  int top_degree() const { return static_cast<int>(simplices_.size()) - 2; }

  std::size_t dim(int q) const {
    return in_range(q) ? simplices_[q + 1].size() : 0;
  }

  /// Basis of degree q in lexicographic order.
  std::span<const Mask> simplices(int q) const {
    return in_range(q) ? std::span<const Mask>(simplices_[q + 1])
                       : std::span<const Mask>();
  }

  /// Position of `simplex` in the degree-q basis, or -1 if absent.
  std::int64_t index_of(int q, Mask simplex) const;

  /// Column `col` of δ_q: the coefficients of δ(S*) for the col-th q-simplex.
  std::span<const CoboundaryEntry> coboundary_column(int q, std::size_t col) const {
    return coboundary_[q + 1][col];
  }

  /// True when δ_{q+1} ∘ δ_q = 0 in every degree (checked over the integers).
  bool squares_to_zero() const;

  friend AugmentedCochainComplex build_cochain_complex(
      const SimplicialComplex& k, Mask support);

 private:
  bool in_range(int q) const {
    return q >= -1 && q + 1 < static_cast<int>(simplices_.size());
  }

  Mask support_ = 0;
  std::vector<std::vector<Mask>> simplices_;
  std::vector<std::vector<std::vector<CoboundaryEntry>>> coboundary_;
};

/// Cochain complex of the full subcomplex K_I, with simplices named by their
/// masks in K.
AugmentedCochainComplex build_cochain_complex(const SimplicialComplex& k,
                                              Mask support);

/// Cochain complex of the whole complex L.
AugmentedCochainComplex build_cochain_complex(const SimplicialComplex& l);

/// True if K_I is a simplex or a cone, so all of its reduced cohomology
/// vanishes. Always false for I = ∅.
bool is_acyclic_shortcut(const SimplicialComplex& k, Mask support);

}  // namespace machh
