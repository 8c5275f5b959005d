#include "machh/theorem.hpp"

#include <set>

#include "machh/constructions.hpp"

namespace machh {
namespace {

std::size_t reduced_betti(const SimplicialComplex& k, Mask subset, int p,
                          const FieldSpec& spec) {
  if (is_acyclic_shortcut(k, subset)) return 0;
  return with_field(spec, [&](const auto& field) -> std::size_t {
    const auto betti = reduced_betti_numbers(field, build_cochain_complex(k, subset));
    const std::size_t slot = static_cast<std::size_t>(p + 1);
    return slot < betti.size() ? betti[slot] : 0;
  });
}

}  // namespace

Thm1Report check_theorem1(const SimplicialComplex& k, Mask sigma,
                          const EngineOptions& options) {
  const int m = k.vertex_count();
  if (cardinality(sigma) < 2 || (sigma & ~k.vertex_mask()) != 0) {
    throw Error(ErrorCode::kBadSigma,
                "sigma must have at least 2 vertices inside [1," + std::to_string(m) + "]");
  }
  check_resource_limit(k, options);

  Thm1Report report;
  report.sigma = SubsetMask(sigma, m);
  report.n = cardinality(sigma) - 1;
  report.relabeling.assign(m, 0);
  {
    Vertex next = 0;
    for (Vertex v : vertices_of(sigma)) report.relabeling[v] = next++;
    for (Vertex v : vertices_of(k.vertex_mask() & ~sigma)) report.relabeling[v] = next++;
  }

  const std::vector<Vertex> sigma_vertices = vertices_of(sigma);
  const std::vector<Vertex> others = vertices_of(k.vertex_mask() & ~sigma);

  report.conditions[0] = !k.contains(sigma);

  bool cond2 = true;
  for (Vertex j : others) {
    for (Vertex i : sigma_vertices) {
      if (!k.contains((sigma | vertex_bit(j)) & ~vertex_bit(i))) cond2 = false;
    }
  }
  report.conditions[1] = cond2;

  std::vector<Mask> pairs;
  for (std::size_t a = 0; a < others.size(); ++a) {
    for (std::size_t b = a + 1; b < others.size(); ++b) {
      pairs.push_back(sigma | vertex_bit(others[a]) | vertex_bit(others[b]));
    }
  }
  std::vector<std::size_t> betti(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t idx) {
    betti[idx] = reduced_betti(k, pairs[idx], report.n, options.field);
  });

  bool cond3 = true;
  bool cond4 = true;
  std::optional<Mask> witness;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const Mask j = pairs[idx];
    if (betti[idx] > 1) cond3 = false;
    if (betti[idx] == 1 && (!witness || lex_less(j, *witness))) witness = j;
    int present = 0;
    for (Vertex i : sigma_vertices) present += k.contains(j & ~vertex_bit(i)) ? 1 : 0;
    if (present != 0 && present != static_cast<int>(sigma_vertices.size())) cond4 = false;
  }
  report.conditions[2] = cond3;
  report.conditions[3] = cond4;
  if (witness) report.witnessing_j = SubsetMask(*witness, m);

  report.applicable = cond2 && cond3 && cond4 && report.conditions[0] && m >= report.n + 2;
  if (report.applicable) report.predicted_delta = report.witnessing_j ? -2 : 0;
  return report;
}

Thm1Verification verify_theorem1(const SimplicialComplex& k, Mask sigma,
                                 const EngineOptions& options) {
  Thm1Verification v;
  v.report = check_theorem1(k, sigma, options);
  if (!v.report.applicable) {
    throw Error(ErrorCode::kNotApplicable,
                "hypotheses do not hold for sigma " + v.report.sigma.to_string());
  }
  const SimplicialComplex glued = glue_simplex(k, sigma);
  v.hh_before = hh_ranks(k, options);
  v.hh_after = hh_ranks(glued, options);
  v.rank_before = v.hh_before.total();
  v.rank_after = v.hh_after.total();
  v.rows_before = v.hh_before.by_row();
  v.rows_after = v.hh_after.by_row();

  const int n = v.report.n;
  const int delta = *v.report.predicted_delta;
  auto row = [](const std::map<int, BigradedRankTable::Rank>& rows, int p) {
    const auto it = rows.find(p);
    return it == rows.end() ? BigradedRankTable::Rank{0} : it->second;
  };

  if (v.rank_after - v.rank_before != delta) {
    v.failures.push_back("total rank changed by " +
                         std::to_string(v.rank_after - v.rank_before) + ", expected " +
                         std::to_string(delta));
  }
  std::set<int> rows;
  for (const auto& [p, r] : v.rows_before) rows.insert(p);
  for (const auto& [p, r] : v.rows_after) rows.insert(p);
  rows.insert(n - 1);
  rows.insert(n);
  for (int p : rows) {
    const auto change = row(v.rows_after, p) - row(v.rows_before, p);
    BigradedRankTable::Rank expected = 0;
    if (p == n - 1) expected = -1;
    if (p == n) expected = v.report.witnessing_j ? -1 : 1;
    if (change != expected) {
      v.failures.push_back("row " + std::to_string(p) + " changed by " +
                           std::to_string(change) + ", expected " +
                           std::to_string(expected));
    }
  }
  v.pass = v.failures.empty();
  return v;
}

}  // namespace machh
