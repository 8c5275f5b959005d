#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "machh/cochain_complex.hpp"
#include "machh/linalg.hpp"

namespace machh {

/// Basis of H̃^p of one full subcomplex, with explicit representative
/// cocycles and the elimination data needed to reduce any cocycle to its
/// class coordinates.
template <typename Field>
class CohomologyBasis {
 public:
  using Scalar = typename Field::Scalar;
  using Vector = std::vector<Scalar>;

  CohomologyBasis() = default;

  int degree() const { return degree_; }
  std::size_t rank() const { return representatives_.size(); }

  /// The p-simplex basis the cochain vectors are written in.
  const std::vector<Mask>& simplices() const { return simplices_; }
  const std::vector<Vector>& representatives() const { return representatives_; }

  /// Coordinates c with `cocycle` = Σ c_j · representative_j + coboundary.
  /// Throws InternalInconsistency if `cocycle` is not a cocycle.
  Vector express(const Field& field, Vector cocycle) const;

  /// Coordinate lookup of a p-simplex mask, -1 if absent.
  std::int64_t simplex_index(Mask simplex) const;

  template <typename F>
  friend CohomologyBasis<F> reduced_cohomology(const F& field,
                                               const AugmentedCochainComplex& c,
                                               int p);

 private:
  int degree_ = -1;
  std::vector<Mask> simplices_;
  std::vector<Vector> representatives_;
  // Rows span the cocycle space: first the coboundaries, then one row per
  // representative. row_class_[r] holds that row's class coordinates.
  EchelonBasis<Field> cocycles_;
  std::vector<Vector> row_class_;
};

/// Kernel basis of δ_p: one vector per free column of the reduced
/// row echelon form, in increasing column order.
template <typename Field>
std::vector<std::vector<typename Field::Scalar>> coboundary_kernel(
    const Field& field, const AugmentedCochainComplex& c, int p) {
  using Scalar = typename Field::Scalar;
  const std::size_t n = c.dim(p);
  const std::size_t rows = c.dim(p + 1);
  std::vector<std::vector<Scalar>> kernel;
  if (rows == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> e(n, field.zero());
      e[j] = field.one();
      kernel.push_back(std::move(e));
    }
    return kernel;
  }
  Matrix<Field> delta(rows, n, field.zero());
  for (std::size_t col = 0; col < n; ++col) {
    for (const CoboundaryEntry& e : c.coboundary_column(p, col)) {
      delta(e.row, col) = field.from_int(e.sign);
    }
  }
  const std::vector<std::size_t> pivots = row_echelon(field, delta);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col : pivots) is_pivot[col] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!field.is_zero(delta(r, free))) v[pivots[r]] = field.neg(delta(r, free));
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

/// H̃^p of the cochain complex. Degrees outside [-1, top] give rank 0.
///
/// Coboundaries δ(S*) of the (p-1)-simplices enter the echelon basis first,
/// in basis order; the kernel vectors of δ_p follow, and each one that is
/// independent modulo what came before becomes a representative.
template <typename Field>
CohomologyBasis<Field> reduced_cohomology(const Field& field,
                                          const AugmentedCochainComplex& c,
                                          int p) {
  using Scalar = typename Field::Scalar;
  CohomologyBasis<Field> basis;
  basis.degree_ = p;
  const std::size_t n = c.dim(p);
  if (n == 0) return basis;
  const auto simplices = c.simplices(p);
  basis.simplices_.assign(simplices.begin(), simplices.end());
  basis.cocycles_ = EchelonBasis<Field>(n);

  std::vector<std::pair<std::size_t, Scalar>> used;
  for (std::size_t col = 0; col < c.dim(p - 1); ++col) {
    std::vector<Scalar> v(n, field.zero());
    for (const CoboundaryEntry& e : c.coboundary_column(p - 1, col)) {
      v[e.row] = field.from_int(e.sign);
    }
    const std::size_t lead = basis.cocycles_.reduce(field, v, nullptr);
    if (lead == n) continue;
    basis.cocycles_.add_reduced(field, std::move(v), lead, nullptr);
    basis.row_class_.emplace_back();
  }

  for (std::vector<Scalar>& z : coboundary_kernel(field, c, p)) {
    std::vector<Scalar> v = z;
    used.clear();
    const std::size_t lead = basis.cocycles_.reduce(field, v, &used);
    if (lead == n) continue;
    // v = z - Σ f · row, so its class is e_new - Σ f · class(row).
    const std::size_t index = basis.representatives_.size();
    std::vector<Scalar> cls(index + 1, field.zero());
    cls[index] = field.one();
    for (const auto& [row, f] : used) {
      const auto& rc = basis.row_class_[row];
      for (std::size_t j = 0; j < rc.size(); ++j) field.sub_mul(cls[j], f, rc[j]);
    }
    Scalar scale = field.one();
    basis.cocycles_.add_reduced(field, std::move(v), lead, &scale);
    const Scalar inv = field.div(field.one(), scale);
    for (auto& x : cls) x = field.mul(x, inv);
    basis.row_class_.push_back(std::move(cls));
    basis.representatives_.push_back(std::move(z));
  }
  for (auto& rc : basis.row_class_) rc.resize(basis.representatives_.size(), field.zero());
  return basis;
}

template <typename Field>
CohomologyBasis<Field> reduced_cohomology(const Field& field,
                                          const SimplicialComplex& l, int p) {
  return reduced_cohomology(field, build_cochain_complex(l), p);
}

template <typename Field>
std::vector<typename Field::Scalar> CohomologyBasis<Field>::express(
    const Field& field, Vector cocycle) const {
  Vector coords(rank(), field.zero());
  if (simplices_.empty()) return coords;
  std::vector<std::pair<std::size_t, Scalar>> used;
  const std::size_t lead = cocycles_.reduce(field, cocycle, &used);
  if (lead != cocycles_.dim()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "vector is not a cocycle in degree " + std::to_string(degree_));
  }
  for (const auto& [row, f] : used) {
    const auto& rc = row_class_[row];
    for (std::size_t j = 0; j < rc.size(); ++j) {
      coords[j] = field.add(coords[j], field.mul(f, rc[j]));
    }
  }
  return coords;
}

template <typename Field>
std::int64_t CohomologyBasis<Field>::simplex_index(Mask simplex) const {
  const auto it =
      std::lower_bound(simplices_.begin(), simplices_.end(), simplex, lex_less);
  if (it == simplices_.end() || *it != simplex) return -1;
  return it - simplices_.begin();
}

/// Matrix of ψ: H̃^p(K_I) → H̃^p(K_{I∖{i}}) induced by the inclusion, with
/// rows indexed by the target basis and columns by the source basis.
///
/// Each source representative is restricted to the simplices of K_{I∖{i}}
/// and reduced against the target's stored elimination.
template <typename Field>
Matrix<Field> induced_map_psi(const Field& field, Mask subset, Vertex removed,
                              const CohomologyBasis<Field>& source,
                              const CohomologyBasis<Field>& target) {
  if (!(subset & vertex_bit(removed))) {
    throw Error(ErrorCode::kNotInSubset, "removed vertex is not in the subset");
  }
  Matrix<Field> out(target.rank(), source.rank(), field.zero());
  if (target.rank() == 0 || source.rank() == 0) return out;
  std::vector<std::size_t> lookup;
  lookup.reserve(target.simplices().size());
  for (Mask t : target.simplices()) {
    const std::int64_t idx = source.simplex_index(t);
    if (idx < 0 || (t & vertex_bit(removed)) != 0) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "target simplex missing from the source complex");
    }
    lookup.push_back(static_cast<std::size_t>(idx));
  }
  for (std::size_t col = 0; col < source.rank(); ++col) {
    const auto& rep = source.representatives()[col];
    std::vector<typename Field::Scalar> restricted;
    restricted.reserve(lookup.size());
    for (std::size_t idx : lookup) restricted.push_back(rep[idx]);
    const auto coords = target.express(field, std::move(restricted));
    for (std::size_t row = 0; row < coords.size(); ++row) out(row, col) = coords[row];
  }
  return out;
}

/// Reduced cohomology of one full subcomplex in every degree.
template <typename Field>
struct SubsetCohomology {
  Mask subset = 0;
  // bases[p + 1] for p = -1 .. top degree; empty when everything vanishes.
  std::vector<CohomologyBasis<Field>> bases;

  std::size_t rank(int p) const {
    return (p + 1 >= 0 && p + 1 < static_cast<int>(bases.size())) ? bases[p + 1].rank()
                                                                   : 0;
  }
  const CohomologyBasis<Field>* basis(int p) const {
    return rank(p) > 0 ? &bases[p + 1] : nullptr;
  }
  std::size_t total_rank() const {
    std::size_t t = 0;
    for (const auto& b : bases) t += b.rank();
    return t;
  }
};

template <typename Field>
SubsetCohomology<Field> subset_cohomology(const Field& field,
                                          const SimplicialComplex& k, Mask subset) {
  SubsetCohomology<Field> out;
  out.subset = subset;
  if (is_acyclic_shortcut(k, subset)) return out;
  const AugmentedCochainComplex c = build_cochain_complex(k, subset);
  for (int p = -1; p <= c.top_degree(); ++p) {
    out.bases.push_back(reduced_cohomology(field, c, p));
  }
  return out;
}

/// Ranks of δ_q over the field, rank-only fast path for Betti numbers.
template <typename Field>
std::vector<std::size_t> reduced_betti_numbers(const Field& field,
                                               const AugmentedCochainComplex& c) {
  std::vector<std::size_t> delta_rank;
  for (int q = -1; q <= c.top_degree(); ++q) {
    std::vector<SparseColumn<Field>> cols(c.dim(q));
    for (std::size_t col = 0; col < c.dim(q); ++col) {
      for (const CoboundaryEntry& e : c.coboundary_column(q, col)) {
        cols[col].emplace_back(e.row, field.from_int(e.sign));
      }
    }
    delta_rank.push_back(sparse_rank(field, std::move(cols), c.dim(q + 1)));
  }
  std::vector<std::size_t> betti;
  for (int q = -1; q <= c.top_degree(); ++q) {
    const std::size_t in = q > -1 ? delta_rank[q] : 0;
    betti.push_back(c.dim(q) - delta_rank[q + 1] - in);
  }
  return betti;
}

}  // namespace machh
