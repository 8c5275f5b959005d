#include <gtest/gtest.h>

#include "machh/constructions.hpp"
#include "machh/error.hpp"
#include "machh/theorem.hpp"
#include "support/random_complexes.hpp"

namespace machh {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInconsistency;
}

const SimplicialComplex kCase2 = SimplicialComplex::from_facets(4, {{1, 3, 4}, {2, 3, 4}});

TEST(Theorem, SquareDiagonalLosesTwo) {
  const auto report = check_theorem1(cycle(4), 0b0101);
  EXPECT_EQ(report.n, 1);
  EXPECT_EQ(report.conditions, (std::array<bool, 4>{true, true, true, true}));
  EXPECT_TRUE(report.applicable);
  ASSERT_TRUE(report.witnessing_j.has_value());
  EXPECT_EQ(report.witnessing_j->bits(), 0b1111u);
  EXPECT_EQ(report.predicted_delta, -2);
  EXPECT_EQ(report.relabeling, (std::vector<Vertex>{0, 2, 1, 3}));

  const auto v = verify_theorem1(cycle(4), 0b0101);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.rank_before, 4);
  EXPECT_EQ(v.rank_after, 2);
  EXPECT_TRUE(v.failures.empty());
}

TEST(Theorem, NoWitnessKeepsRankButMovesARow) {
  const auto report = check_theorem1(kCase2, 0b0011);
  EXPECT_TRUE(report.applicable);
  EXPECT_FALSE(report.witnessing_j.has_value());
  EXPECT_EQ(report.predicted_delta, 0);

  const auto v = verify_theorem1(kCase2, 0b0011);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.rank_before, v.rank_after);
  const auto row = [](const auto& rows, int p) {
    const auto it = rows.find(p);
    return it == rows.end() ? 0 : it->second;
  };
  EXPECT_EQ(row(v.rows_after, 0), row(v.rows_before, 0) - 1);
  EXPECT_EQ(row(v.rows_after, 1), row(v.rows_before, 1) + 1);
}

TEST(Theorem, HypothesisFailures) {
  const auto edge = check_theorem1(cycle(4), 0b0011);
  EXPECT_FALSE(edge.conditions[0]);
  EXPECT_FALSE(edge.conditions[1]);
  EXPECT_FALSE(edge.applicable);
  EXPECT_FALSE(edge.predicted_delta.has_value());
  EXPECT_EQ(code_of([] { verify_theorem1(cycle(4), 0b0011); }), ErrorCode::kNotApplicable);

  // The pentagon's non-edge {1,3} misses the common neighbours condition.
  const auto penta = check_theorem1(cycle(5), 0b00101);
  EXPECT_TRUE(penta.conditions[0]);
  EXPECT_FALSE(penta.conditions[1]);
}

TEST(Theorem, BadSigma) {
  EXPECT_EQ(code_of([] { check_theorem1(cycle(4), 0b0001); }), ErrorCode::kBadSigma);
  EXPECT_EQ(code_of([] { check_theorem1(cycle(4), 0b10001); }), ErrorCode::kBadSigma);
  EXPECT_EQ(code_of([] { check_theorem1(cycle(4), 0); }), ErrorCode::kBadSigma);
}

TEST(Theorem, VerdictIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(77);
  const std::vector<std::pair<SimplicialComplex, Mask>> cases = {
      {cycle(4), 0b0101}, {kCase2, 0b0011}, {cycle(4), 0b0011}, {cycle(5), 0b00101}};
  for (const auto& [k, sigma] : cases) {
    const auto base = check_theorem1(k, sigma);
    for (int t = 0; t < 10; ++t) {
      const auto perm = testing::random_permutation(rng, k.vertex_count());
      const auto moved = check_theorem1(relabel(k, perm), permute_mask(sigma, perm));
      EXPECT_EQ(moved.applicable, base.applicable);
      EXPECT_EQ(moved.conditions, base.conditions);
      EXPECT_EQ(moved.predicted_delta, base.predicted_delta);
      EXPECT_EQ(moved.witnessing_j.has_value(), base.witnessing_j.has_value());
    }
  }
}

TEST(Theorem, LargerSigmaOnSuspendedBoundary) {
  // ∂Δ^2 ∗ S^0 is a bipyramid; gluing the triangle σ = {1,2,3}
  // satisfies the hypotheses and J = [5] is a witness.
  const auto k = join(simplex_boundary(2), discrete_points(2));
  const auto report = check_theorem1(k, 0b00111);
  EXPECT_EQ(report.n, 2);
  EXPECT_TRUE(report.applicable);
  const auto v = verify_theorem1(k, 0b00111);
  EXPECT_TRUE(v.pass) << (v.failures.empty() ? "" : v.failures.front());
}

}  // namespace
}  // namespace machh
