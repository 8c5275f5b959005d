#include "machh/double_complex.hpp"

namespace machh {

int sign_epsilon(Vertex j, Mask subset) {
  if (j < 0 || j >= 32 || !(subset & vertex_bit(j))) {
    throw Error(ErrorCode::kNotInSubset,
                "vertex " + std::to_string(j + 1) + " is not in the subset");
  }
  return count_below(subset, j) % 2 == 0 ? 1 : -1;
}

void check_resource_limit(const SimplicialComplex& k, const EngineOptions& options) {
  const int cap = std::min(options.max_m, kMaxGroundSize);
  if (k.vertex_count() > cap) {
    throw Error(ErrorCode::kResourceLimit,
                "complex has " + std::to_string(k.vertex_count()) +
                    " vertices, cap is " + std::to_string(cap));
  }
}

namespace {

template <typename Field>
BigradedRankTable h_ranks_impl(const Field& field, const SimplicialComplex& k,
                               unsigned threads) {
  BigradedRankTable table;
  for (int l = 0; l <= k.vertex_count(); ++l) {
    const std::vector<Mask> subsets = subsets_of_size(k.vertex_count(), l);
    std::vector<std::vector<std::size_t>> betti(subsets.size());
    parallel_for(subsets.size(), threads, [&](std::size_t i) {
      if (is_acyclic_shortcut(k, subsets[i])) return;
      betti[i] = reduced_betti_numbers(field, build_cochain_complex(k, subsets[i]));
    });
    for (const auto& b : betti) {
      for (std::size_t slot = 0; slot < b.size(); ++slot) {
        const int p = static_cast<int>(slot) - 1;
        table.add(Bidegree::from_row(p, l), static_cast<BigradedRankTable::Rank>(b[slot]));
      }
    }
  }
  return table;
}

}  // namespace

BigradedRankTable h_ranks(const SimplicialComplex& k, const EngineOptions& options) {
  check_resource_limit(k, options);
  return with_field(options.field, [&](const auto& field) {
    return h_ranks_impl(field, k, options.threads);
  });
}

HochsterTables hochster_tables(const SimplicialComplex& k, const EngineOptions& options) {
  check_resource_limit(k, options);
  return with_field(options.field, [&](const auto& field) {
    return hochster_tables(field, k, options.threads);
  });
}

BigradedRankTable hh_ranks(const SimplicialComplex& k, const EngineOptions& options) {
  return hochster_tables(k, options).hh;
}

std::map<int, BigradedRankTable::Rank> row_rank_profile(const SimplicialComplex& k,
                                                        const EngineOptions& options) {
  return hh_ranks(k, options).by_row();
}

}  // namespace machh
