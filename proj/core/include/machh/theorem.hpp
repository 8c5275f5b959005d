#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "machh/double_complex.hpp"

namespace machh {

/// Hypothesis check for gluing a simplex σ along its boundary.
///
/// With σ relabeled to [n+1] (order preserving, complement following in
/// increasing order) the four conditions are:
///   1. σ ∉ K;
///   2. (σ ∪ {j}) ∖ {i} ∈ K for every j ∉ σ and i ∈ σ;
///   3. rank H̃^n(K_J) ≤ 1 for every J = σ ∪ {j, k};
///   4. for each such J, the faces J ∖ {i}, i ∈ σ, are all in K or none is.
struct Thm1Report {
  SubsetMask sigma;
  int n = 0;                            // |σ| - 1
  std::vector<Vertex> relabeling;       // v ↦ relabeling[v]
  std::array<bool, 4> conditions{};
  std::optional<SubsetMask> witnessing_j;  // least J with rank H̃^n(K_J) = 1
  bool applicable = false;              // all conditions and m ≥ n + 2
  std::optional<int> predicted_delta;   // -2 or 0, set only when applicable
};

/// Throws BadSigma if |σ| < 2 or σ is not a subset of the vertices.
Thm1Report check_theorem1(const SimplicialComplex& k, Mask sigma,
                          const EngineOptions& options = {});

/// Before/after comparison for λ_σK.
struct Thm1Verification {
  Thm1Report report;
  BigradedRankTable hh_before;
  BigradedRankTable hh_after;
  BigradedRankTable::Rank rank_before = 0;
  BigradedRankTable::Rank rank_after = 0;
  std::map<int, BigradedRankTable::Rank> rows_before;
  std::map<int, BigradedRankTable::Rank> rows_after;
  bool pass = false;
  std::vector<std::string> failures;  // one line per violated expectation
};

/// Computes HH for K and λ_σK and checks the total change, the drop of row
/// n-1 by one, the change of row n by -1 (a witness exists) or +1 (none),
/// and that every other row is unchanged. Throws NotApplicable if the
/// hypotheses fail.
Thm1Verification verify_theorem1(const SimplicialComplex& k, Mask sigma,
                                 const EngineOptions& options = {});

}  // namespace machh
