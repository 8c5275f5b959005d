#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "machh/bigraded_table.hpp"
#include "machh/cohomology.hpp"
#include "machh/field.hpp"
#include "machh/parallel.hpp"
#include "machh/simplicial_complex.hpp"

namespace machh {

struct EngineOptions {
  FieldSpec field;
  unsigned threads = 1;  // 0 = one per hardware thread
  int max_m = 22;
};

/// ε(j, I) = (-1)^{#{i ∈ I : i < j}}. Throws NotInSubset if j ∉ I.
int sign_epsilon(Vertex j, Mask subset);

/// Throws ResourceLimit if K is larger than the configured cap.
void check_resource_limit(const SimplicialComplex& k, const EngineOptions& options);

/// H^{-k,2l}(Z_K) = ⊕_{|I|=l} H̃^{l-k-1}(K_I), enumerating all 2^m subsets.
BigradedRankTable h_ranks(const SimplicialComplex& k, const EngineOptions& options = {});

/// Bigraded ranks of HH*(Z_K) = H(H*(Z_K), d').
BigradedRankTable hh_ranks(const SimplicialComplex& k, const EngineOptions& options = {});

/// Both tables from one pass over the subsets.
struct HochsterTables {
  BigradedRankTable h;
  BigradedRankTable hh;
};
HochsterTables hochster_tables(const SimplicialComplex& k,
                               const EngineOptions& options = {});

/// Rank of HH restricted to each row p = l - k - 1.
std::map<int, BigradedRankTable::Rank> row_rank_profile(
    const SimplicialComplex& k, const EngineOptions& options = {});

/// One summand H̃^p(K_I) of a row, placed at rows [offset, offset + rank) of
/// its cardinality level.
struct RowGroup {
  Mask subset = 0;
  std::size_t offset = 0;
  std::size_t rank = 0;
};

/// Row p of CH*(Z_K): the groups ⊕_{|I|=l} H̃^p(K_I) and the maps
/// D_{p,l} from level l to level l-1.
template <typename Field>
struct RowComplex {
  int degree = -1;
  std::vector<std::vector<RowGroup>> groups;  // indexed by l
  std::vector<Matrix<Field>> differentials;   // [l]: level l -> level l-1; [0] unused

  std::size_t level_dim(int l) const {
    std::size_t d = 0;
    for (const RowGroup& g : groups[l]) d += g.rank;
    return d;
  }
};

namespace detail {

/// Nonzero subset cohomologies of one cardinality level, in lexicographic
/// subset order.
template <typename Field>
struct Level {
  int size = 0;
  std::vector<SubsetCohomology<Field>> members;

  const SubsetCohomology<Field>* find(Mask subset) const {
    const auto it = std::lower_bound(
        members.begin(), members.end(), subset,
        [](const SubsetCohomology<Field>& m, Mask s) { return lex_less(m.subset, s); });
    return (it != members.end() && it->subset == subset) ? &*it : nullptr;
  }
};

template <typename Field>
Level<Field> compute_level(const Field& field, const SimplicialComplex& k, int size,
                           unsigned threads) {
  const std::vector<Mask> subsets = subsets_of_size(k.vertex_count(), size);
  std::vector<SubsetCohomology<Field>> all(subsets.size());
  parallel_for(subsets.size(), threads, [&](std::size_t i) {
    all[i] = subset_cohomology(field, k, subsets[i]);
  });
  Level<Field> level;
  level.size = size;
  for (auto& s : all) {
    if (s.total_rank() > 0) level.members.push_back(std::move(s));
  }
  return level;
}

/// Offsets of the degree-p groups of a level, keyed by subset.
template <typename Field>
std::vector<RowGroup> row_groups(const Level<Field>& level, int p) {
  std::vector<RowGroup> groups;
  std::size_t offset = 0;
  for (const auto& m : level.members) {
    const std::size_t r = m.rank(p);
    if (r == 0) continue;
    groups.push_back({m.subset, offset, r});
    offset += r;
  }
  return groups;
}

/// Sparse columns of D_{p,l}: source level l, target level l-1. The block
/// (I, I∖{i}) is (-1)^{p+1} ε(i, I) ψ_{p;i,I}.
template <typename Field>
std::vector<SparseColumn<Field>> differential_columns(const Field& field,
                                                      const Level<Field>& source,
                                                      const Level<Field>& target, int p,
                                                      unsigned threads) {
  const std::vector<RowGroup> src = row_groups(source, p);
  const std::vector<RowGroup> dst = row_groups(target, p);
  std::unordered_map<Mask, const RowGroup*> dst_index;
  for (const RowGroup& g : dst) dst_index.emplace(g.subset, &g);

  std::vector<std::vector<SparseColumn<Field>>> per_group(src.size());
  parallel_for(src.size(), threads, [&](std::size_t gi) {
    const RowGroup& g = src[gi];
    const auto* from = source.find(g.subset)->basis(p);
    std::vector<SparseColumn<Field>>& cols = per_group[gi];
    cols.resize(g.rank);
    const int parity = (p + 1) % 2 == 0 ? 1 : -1;
    for (Vertex i : vertices_of(g.subset)) {
      const Mask smaller = g.subset & ~vertex_bit(i);
      const auto hit = dst_index.find(smaller);
      if (hit == dst_index.end()) continue;
      const RowGroup& t = *hit->second;
      const auto* to = target.find(smaller)->basis(p);
      const Matrix<Field> psi = induced_map_psi(field, g.subset, i, *from, *to);
      const auto sign = field.from_int(parity * sign_epsilon(i, g.subset));
      for (std::size_t c = 0; c < psi.cols(); ++c) {
        for (std::size_t r = 0; r < psi.rows(); ++r) {
          if (field.is_zero(psi(r, c))) continue;
          cols[c].emplace_back(static_cast<std::uint32_t>(t.offset + r),
                               field.mul(sign, psi(r, c)));
        }
      }
    }
    for (auto& col : cols) {
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  });

  std::vector<SparseColumn<Field>> columns;
  for (auto& cols : per_group) {
    for (auto& c : cols) columns.push_back(std::move(c));
  }
  return columns;
}

template <typename Field>
std::size_t level_dim(const Level<Field>& level, int p) {
  std::size_t d = 0;
  for (const auto& m : level.members) d += m.rank(p);
  return d;
}

template <typename Field>
int level_top_degree(const Level<Field>& level) {
  int top = -2;
  for (const auto& m : level.members) {
    top = std::max(top, static_cast<int>(m.bases.size()) - 2);
  }
  return top;
}

}  // namespace detail

/// Both bigraded tables over a specific field.
///
/// Levels are processed in increasing cardinality and only two are kept in
/// memory at a time, since d' only links |I| to |I| - 1.
template <typename Field>
HochsterTables hochster_tables(const Field& field, const SimplicialComplex& k,
                               unsigned threads) {
  const int m = k.vertex_count();
  std::map<std::pair<int, int>, std::size_t> dims;   // (p, l) -> dim
  std::map<std::pair<int, int>, std::size_t> ranks;  // (p, l) -> rank D_{p,l}

  detail::Level<Field> prev;
  for (int l = 0; l <= m; ++l) {
    detail::Level<Field> cur = detail::compute_level(field, k, l, threads);
    const int top = detail::level_top_degree(cur);
    for (int p = -1; p <= top; ++p) {
      const std::size_t d = detail::level_dim(cur, p);
      if (d == 0) continue;
      dims[{p, l}] = d;
      if (l > 0 && detail::level_dim(prev, p) > 0) {
        auto cols = detail::differential_columns(field, cur, prev, p, threads);
        ranks[{p, l}] = sparse_rank(field, std::move(cols), detail::level_dim(prev, p));
      }
    }
    prev = std::move(cur);
  }

  HochsterTables out;
  auto rank_of = [&](int p, int l) -> std::size_t {
    const auto it = ranks.find({p, l});
    return it == ranks.end() ? 0 : it->second;
  };
  for (const auto& [pl, d] : dims) {
    const auto [p, l] = pl;
    const Bidegree at = Bidegree::from_row(p, l);
    out.h.add(at, static_cast<BigradedRankTable::Rank>(d));
    const std::size_t kernel = d - rank_of(p, l);
    out.hh.add(at, static_cast<BigradedRankTable::Rank>(kernel - rank_of(p, l + 1)));
  }
  return out;
}

/// Row p of CH*(Z_K) with dense block differentials, for inspection and
/// tests. Builds every level, so meant for small m.
template <typename Field>
RowComplex<Field> assemble_row(const Field& field, const SimplicialComplex& k, int p,
                               unsigned threads = 1) {
  const int m = k.vertex_count();
  RowComplex<Field> row;
  row.degree = p;
  std::vector<detail::Level<Field>> levels;
  for (int l = 0; l <= m; ++l) {
    levels.push_back(detail::compute_level(field, k, l, threads));
    row.groups.push_back(detail::row_groups(levels.back(), p));
  }
  row.differentials.resize(m + 1);
  for (int l = 1; l <= m; ++l) {
    const std::size_t rows = detail::level_dim(levels[l - 1], p);
    const std::size_t cols = detail::level_dim(levels[l], p);
    Matrix<Field> d(rows, cols, field.zero());
    if (rows > 0 && cols > 0) {
      const auto columns =
          detail::differential_columns(field, levels[l], levels[l - 1], p, threads);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [r, v] : columns[c]) d(r, c) = v;
      }
    }
    row.differentials[l] = std::move(d);
  }
  return row;
}

}  // namespace machh
