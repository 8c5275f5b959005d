#include <gtest/gtest.h>

#include "machh/cohomology.hpp"
#include "machh/field.hpp"
#include "machh/double_complex.hpp"
#include "machh/oracle.hpp"
#include "support/random_complexes.hpp"

namespace machh {
namespace {

TEST(OracleEquivalence, SubsetBettiNumbers) {
  std::mt19937_64 rng(1111);
  const RationalField q;
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 1, 7, 4);
    for (Mask s = 0; s <= k.vertex_mask(); ++s) {
      const auto sc = subset_cohomology(q, k, s);
      for (int p = -1; p <= k.dimension(); ++p) {
        ASSERT_EQ(static_cast<std::int64_t>(sc.rank(p)), oracle::reduced_betti(k, s, p))
            << "trial " << t << " subset " << s << " p=" << p;
      }
    }
  }
}

TEST(OracleEquivalence, DoubleCohomologyRows) {
  std::mt19937_64 rng(2222);
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 1, 8, 4);
    const auto hh = hh_ranks(k);
    ASSERT_EQ(hh.by_row(), oracle::hh_rows(k)) << "trial " << t;
    ASSERT_EQ(hh.total(), oracle::hh_total(k));
  }
}

TEST(OracleEquivalence, PsiRanks) {
  std::mt19937_64 rng(3333);
  const RationalField q;
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 2, 6, 3);
    const Mask full = k.vertex_mask();
    const auto top = subset_cohomology(q, k, full);
    for (Vertex i : vertices_of(full)) {
      const auto below = subset_cohomology(q, k, full & ~vertex_bit(i));
      for (int p = -1; p <= k.dimension(); ++p) {
        std::int64_t engine = 0;
        if (top.rank(p) > 0 && below.rank(p) > 0) {
          engine = static_cast<std::int64_t>(
              rank(q, induced_map_psi(q, full, i, *top.basis(p), *below.basis(p))));
        }
        ASSERT_EQ(engine, oracle::psi_rank(k, full, i, p));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace machh
