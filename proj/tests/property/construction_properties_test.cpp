#include <gtest/gtest.h>

#include "machh/constructions.hpp"
#include "machh/double_complex.hpp"
#include "support/random_complexes.hpp"

namespace machh {
namespace {

TEST(ConstructionProperties, JoinConvolvesTables) {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 1, 5, 3);
    const int room = 9 - k.vertex_count();
    const auto l = testing::random_complex(rng, 1, std::min(4, room), 3);
    const auto joined = join(k, l);
    ASSERT_EQ(hh_ranks(joined), hh_ranks(k).convolve(hh_ranks(l))) << "trial " << t;
    ASSERT_EQ(h_ranks(joined), h_ranks(k).convolve(h_ranks(l))) << "trial " << t;
  }
}

TEST(ConstructionProperties, WedgeHasRankTwo) {
  std::mt19937_64 rng(707);
  BigradedRankTable expected;
  expected.add({0, 0}, 1);
  expected.add({1, 2}, 1);
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 2, 4, 3);
    const auto l = testing::random_complex(rng, 2, 4, 3);
    const Vertex at_k = static_cast<Vertex>(rng() % k.vertex_count());
    const Vertex at_l = static_cast<Vertex>(rng() % l.vertex_count());
    ASSERT_EQ(hh_ranks(wedge(k, at_k, l, at_l)), expected) << "trial " << t;
  }
}

TEST(ConstructionProperties, GluingOnlyTouchesSupersetsOfSigma) {
  std::mt19937_64 rng(808);
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 200; ++t) {
    const auto k = testing::random_complex(rng, 2, 7, 3);
    // Pick a minimal non-face: a missing face whose boundary is present.
    std::vector<Mask> candidates;
    for (Mask s = 1; s <= k.vertex_mask(); ++s) {
      if (cardinality(s) < 2 || k.contains(s)) continue;
      bool boundary = true;
      for (Vertex v : vertices_of(s)) boundary = boundary && k.contains(s & ~vertex_bit(v));
      if (boundary) candidates.push_back(s);
    }
    if (candidates.empty()) continue;
    const Mask sigma = candidates[rng() % candidates.size()];
    const auto glued = glue_simplex(k, sigma);
    for (Mask j = 0; j <= k.vertex_mask(); ++j) {
      const auto before = full_subcomplex(k, j);
      const auto after = full_subcomplex(glued, j);
      if (is_subset(sigma, j)) {
        ASSERT_EQ(after, glue_simplex(before, compress(sigma, j)));
      } else {
        ASSERT_EQ(after, before);
      }
    }
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(ConstructionProperties, RelabelComposes) {
  std::mt19937_64 rng(909);
  for (int t = 0; t < 200; ++t) {
    const auto k = testing::random_complex(rng, 1, 8, 4);
    const auto a = testing::random_permutation(rng, k.vertex_count());
    const auto b = testing::random_permutation(rng, k.vertex_count());
    std::vector<Vertex> ba(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) ba[v] = b[a[v]];
    ASSERT_EQ(relabel(relabel(k, a), b), relabel(k, ba));
    ASSERT_EQ(relabel(k, a).face_count(), k.face_count());
  }
}

}  // namespace
}  // namespace machh
