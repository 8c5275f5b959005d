#include "machh/cochain_complex.hpp"

#include <algorithm>
#include <map>

namespace machh {

std::int64_t AugmentedCochainComplex::index_of(int q, Mask simplex) const {
  const auto basis = simplices(q);
  const auto it = std::lower_bound(basis.begin(), basis.end(), simplex, lex_less);
  if (it == basis.end() || *it != simplex) return -1;
  return it - basis.begin();
}

bool AugmentedCochainComplex::squares_to_zero() const {
  for (int q = -1; q + 1 < top_degree(); ++q) {
    for (std::size_t col = 0; col < dim(q); ++col) {
      std::map<std::uint32_t, int> acc;
      for (const CoboundaryEntry& e : coboundary_column(q, col)) {
        for (const CoboundaryEntry& f : coboundary_column(q + 1, e.row)) {
          acc[f.row] += e.sign * f.sign;
        }
      }
      for (const auto& [row, value] : acc) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

AugmentedCochainComplex build_cochain_complex(const SimplicialComplex& k,
                                              Mask support) {
  AugmentedCochainComplex c;
  c.support_ = support;
  for (Mask f : k.faces()) {
    if (!is_subset(f, support)) continue;
    const std::size_t slot = static_cast<std::size_t>(cardinality(f));
    if (c.simplices_.size() <= slot) c.simplices_.resize(slot + 1);
    c.simplices_[slot].push_back(f);
  }
  // k.faces() is already sorted by size and then lexicographically.
  c.coboundary_.resize(c.simplices_.size());
  for (std::size_t slot = 0; slot < c.simplices_.size(); ++slot) {
    c.coboundary_[slot].resize(c.simplices_[slot].size());
  }
  for (std::size_t slot = 1; slot < c.simplices_.size(); ++slot) {
    const int q = static_cast<int>(slot) - 1;
    const auto& cofaces = c.simplices_[slot];
    for (std::size_t row = 0; row < cofaces.size(); ++row) {
      const Mask t = cofaces[row];
      for (Mask rest = t; rest != 0; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        const Mask s = t & ~bit;
        const Vertex j = std::countr_zero(bit);
        const auto col = c.index_of(q - 1, s);
        const std::int8_t sign = (count_below(s, j) % 2 == 0) ? 1 : -1;
        c.coboundary_[slot - 1][static_cast<std::size_t>(col)].push_back(
            {static_cast<std::uint32_t>(row), sign});
      }
    }
  }
  return c;
}

AugmentedCochainComplex build_cochain_complex(const SimplicialComplex& l) {
  return build_cochain_complex(l, l.vertex_mask());
}

bool is_acyclic_shortcut(const SimplicialComplex& k, Mask support) {
  if (support == 0) return false;
  if (k.contains(support)) return true;
  // A cone point v of K_I satisfies S ∪ {v} ∈ K for every face S ⊆ I.
  Mask apexes = support;
  for (Mask f : k.faces()) {
    if (!is_subset(f, support)) continue;
    for (Mask rest = apexes & ~f; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      if (!k.contains(f | bit)) apexes &= ~bit;
    }
    if (apexes == 0) return false;
  }
  return true;
}

}  // namespace machh
