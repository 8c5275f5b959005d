#include <gtest/gtest.h>

#include "machh/constructions.hpp"
#include "machh/error.hpp"
#include "machh/oracle.hpp"

namespace machh {
namespace {

TEST(Oracle, BettiNumbers) {
  EXPECT_EQ(oracle::reduced_betti(SimplicialComplex(), -1), 1);
  EXPECT_EQ(oracle::reduced_betti(simplex(3), 0), 0);
  EXPECT_EQ(oracle::reduced_betti(simplex_boundary(3), 2), 1);
  EXPECT_EQ(oracle::reduced_betti(discrete_points(4), 0), 3);
  EXPECT_EQ(oracle::reduced_betti(cycle(6), 1), 1);
  EXPECT_EQ(oracle::reduced_betti(cycle(4), 0b0101, 0), 1);
  EXPECT_EQ(oracle::reduced_betti(cycle(4), 0b0111, 0), 0);
}

TEST(Oracle, PsiRanks) {
  EXPECT_EQ(oracle::psi_rank(discrete_points(3), 0b111, 2, 0), 1);
  EXPECT_EQ(oracle::psi_rank(discrete_points(2), 0b11, 1, 0), 0);
  EXPECT_EQ(oracle::psi_rank(SimplicialComplex::from_facets(1, {{1}}), 0b1, 0, -1), 0);
}

TEST(Oracle, DoubleCohomologyRows) {
  EXPECT_EQ(oracle::hh_rows(cycle(4)), (std::map<int, std::int64_t>{{-1, 1}, {0, 2}, {1, 1}}));
  EXPECT_EQ(oracle::hh_total(k2r_family(1).complex), 2);
  EXPECT_EQ(oracle::hh_total(simplex(2)), 1);
  EXPECT_EQ(oracle::hh_total(discrete_points(2)), 2);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(oracle::hh_total(k2r_family(r).complex), 2 * r);
}

TEST(Oracle, RefusesLargeInputs) {
  EXPECT_THROW(oracle::hh_total(cycle(9)), Error);
  EXPECT_THROW(oracle::reduced_betti(cycle(13), 1), Error);
}

}  // namespace
}  // namespace machh
