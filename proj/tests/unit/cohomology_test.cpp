#include <gtest/gtest.h>

#include "machh/cohomology.hpp"
#include "machh/constructions.hpp"
#include "machh/error.hpp"
#include "machh/field.hpp"
#include "machh/oracle.hpp"
#include "support/random_complexes.hpp"

namespace machh {
namespace {

const RationalField kQ;

std::vector<std::size_t> ranks_of(const SimplicialComplex& k, Mask subset) {
  const auto c = build_cochain_complex(k, subset);
  std::vector<std::size_t> out;
  for (int p = -1; p <= c.top_degree(); ++p) {
    out.push_back(reduced_cohomology(kQ, c, p).rank());
  }
  return out;
}

TEST(CochainComplex, SimplexBoundaryShape) {
  const auto c = build_cochain_complex(simplex_boundary(2));
  EXPECT_EQ(c.top_degree(), 1);
  EXPECT_EQ(c.dim(-1), 1u);
  EXPECT_EQ(c.dim(0), 3u);
  EXPECT_EQ(c.dim(1), 3u);
  EXPECT_EQ(c.dim(2), 0u);
  EXPECT_EQ(c.index_of(1, 0b101), 1);
  EXPECT_EQ(c.index_of(1, 0b111), -1);
  EXPECT_TRUE(c.squares_to_zero());
  // δ({2}*) = {1,2}* - {2,3}*: the sign counts vertices of S below the new one.
  const auto col = c.coboundary_column(0, 1);
  ASSERT_EQ(col.size(), 2u);
  EXPECT_EQ(col[0].row, 0u);
  EXPECT_EQ(col[0].sign, 1);
  EXPECT_EQ(col[1].row, 2u);
  EXPECT_EQ(col[1].sign, -1);
}

TEST(CochainComplex, SquaresToZeroOnRandomComplexes) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto k = testing::random_complex(rng, 1, 8, 5);
    const Mask subset = static_cast<Mask>(rng()) & k.vertex_mask();
    EXPECT_TRUE(build_cochain_complex(k, subset).squares_to_zero());
  }
}

TEST(Cohomology, SmallExamples) {
  EXPECT_EQ(ranks_of(simplex_boundary(2), 0b111), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(ranks_of(simplex(2), 0b111), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(ranks_of(cycle(4), 0), (std::vector<std::size_t>{1}));
  EXPECT_EQ(ranks_of(discrete_points(3), 0b111), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(ranks_of(cycle(4), 0b0101), (std::vector<std::size_t>{0, 1}));
}

TEST(Cohomology, AcyclicShortcut) {
  EXPECT_TRUE(is_acyclic_shortcut(simplex(3), 0b1111));
  EXPECT_TRUE(is_acyclic_shortcut(cycle(4), 0b0111));  // path 1-2-3 is a cone on 2
  EXPECT_FALSE(is_acyclic_shortcut(cycle(4), 0b1111));
  EXPECT_FALSE(is_acyclic_shortcut(cycle(4), 0));
  EXPECT_EQ(subset_cohomology(kQ, cycle(4), 0b0111).total_rank(), 0u);
}

TEST(Cohomology, RepresentativesHaveUnitCoordinates) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto k = testing::random_complex(rng, 2, 7, 4);
    const auto c = build_cochain_complex(k, k.vertex_mask());
    for (int p = -1; p <= c.top_degree(); ++p) {
      const auto b = reduced_cohomology(kQ, c, p);
      for (std::size_t j = 0; j < b.rank(); ++j) {
        const auto coords = b.express(kQ, b.representatives()[j]);
        for (std::size_t i = 0; i < coords.size(); ++i) {
          EXPECT_EQ(coords[i], i == j ? 1 : 0);
        }
      }
    }
  }
}

TEST(Cohomology, ExpressRejectsNonCocycles) {
  const auto c = build_cochain_complex(cycle(4), 0b1111);
  const auto b = reduced_cohomology(kQ, c, 0);
  std::vector<mpq_class> v(c.dim(0), 0);
  v[0] = 1;  // δ(1*) ≠ 0
  EXPECT_THROW((void)b.express(kQ, v), Error);
}

TEST(Cohomology, BettiFastPathMatchesBases) {
  std::mt19937_64 rng(21);
  const PrimeField gf;
  for (int t = 0; t < 80; ++t) {
    const auto k = testing::random_complex(rng, 1, 8, 5);
    const auto c = build_cochain_complex(k, k.vertex_mask());
    const auto betti = reduced_betti_numbers(kQ, c);
    EXPECT_EQ(betti, reduced_betti_numbers(gf, c));
    for (int p = -1; p <= c.top_degree(); ++p) {
      EXPECT_EQ(betti[p + 1], reduced_cohomology(kQ, c, p).rank());
      EXPECT_EQ(static_cast<std::int64_t>(betti[p + 1]), oracle::reduced_betti(k, p));
    }
  }
}

TEST(InducedMap, ThreePointsDroppingOne) {
  const auto k = discrete_points(3);
  const auto src = subset_cohomology(kQ, k, 0b111);
  const auto dst = subset_cohomology(kQ, k, 0b011);
  const auto psi = induced_map_psi(kQ, 0b111, 2, *src.basis(0), *dst.basis(0));
  EXPECT_EQ(psi.rows(), 1u);
  EXPECT_EQ(psi.cols(), 2u);
  EXPECT_EQ(rank(kQ, psi), 1u);
  EXPECT_EQ(oracle::psi_rank(k, 0b111, 2, 0), 1);
}

TEST(InducedMap, SquareDroppingAVertexKillsTheCycle) {
  const auto k = cycle(4);
  EXPECT_EQ(subset_cohomology(kQ, k, 0b1101).rank(1), 0u);
  EXPECT_EQ(oracle::psi_rank(k, 0b1111, 1, 1), 0);
}

TEST(InducedMap, RequiresRemovedVertexInSubset) {
  const auto k = discrete_points(3);
  const auto src = subset_cohomology(kQ, k, 0b011);
  const auto dst = subset_cohomology(kQ, k, 0b001);
  CohomologyBasis<RationalField> empty;
  EXPECT_THROW(induced_map_psi(kQ, 0b011, 2, *src.basis(0), empty), Error);
}

// Restricting I → I∖{i} → I∖{i,j} and I → I∖{j} → I∖{i,j} give the same map.
TEST(InducedMap, RestrictionsCommute) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const auto k = testing::random_complex(rng, 3, 6, 3);
    const Mask full = k.vertex_mask();
    const auto verts = vertices_of(full);
    const Vertex i = verts[rng() % verts.size()];
    Vertex j = verts[rng() % verts.size()];
    if (i == j) continue;
    const auto top = subset_cohomology(kQ, k, full);
    const auto mi = subset_cohomology(kQ, k, full & ~vertex_bit(i));
    const auto mj = subset_cohomology(kQ, k, full & ~vertex_bit(j));
    const auto mij = subset_cohomology(kQ, k, full & ~vertex_bit(i) & ~vertex_bit(j));
    for (int p = -1; p + 1 < static_cast<int>(top.bases.size()); ++p) {
      if (top.rank(p) == 0 || mij.rank(p) == 0) continue;
      const CohomologyBasis<RationalField> none;
      const auto& bi = mi.rank(p) ? *mi.basis(p) : none;
      const auto& bj = mj.rank(p) ? *mj.basis(p) : none;
      if (bi.rank() == 0 || bj.rank() == 0) {
        // One path factors through zero, so the other must vanish too.
        const auto& mid = bi.rank() == 0 ? bj : bi;
        const Vertex first = bi.rank() == 0 ? j : i;
        const Vertex second = bi.rank() == 0 ? i : j;
        if (mid.rank() == 0) continue;
        const auto a = induced_map_psi(kQ, full, first, *top.basis(p), mid);
        const auto b = induced_map_psi(kQ, full & ~vertex_bit(first), second, mid,
                                       *mij.basis(p));
        EXPECT_TRUE(is_zero_matrix(kQ, multiply(kQ, b, a)));
        ++checked;
        continue;
      }
      const auto via_i = multiply(
          kQ, induced_map_psi(kQ, full & ~vertex_bit(i), j, bi, *mij.basis(p)),
          induced_map_psi(kQ, full, i, *top.basis(p), bi));
      const auto via_j = multiply(
          kQ, induced_map_psi(kQ, full & ~vertex_bit(j), i, bj, *mij.basis(p)),
          induced_map_psi(kQ, full, j, *top.basis(p), bj));
      EXPECT_EQ(via_i, via_j);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace machh
