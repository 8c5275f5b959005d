#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "machh/constructions.hpp"
#include "machh/double_complex.hpp"
#include "machh/io.hpp"
#include "machh/oracle.hpp"
#include "machh/theorem.hpp"

namespace machh::cli {
namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string field = "q";
  std::string threads = "auto";
  int max_m = 22;
  std::string output = "json";
  std::string out_path;
  bool verify_exact = false;
};

/// Raised for failures that are not library errors (e.g. ladder mismatch).
struct Failure {
  int code;
  std::string kind;
  std::string message;
};

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions options;
  options.field = FieldSpec::parse(config.field);
  if (config.max_m < 1 || config.max_m > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "--max-m must be in [1," + std::to_string(kMaxGroundSize) + "]");
  }
  options.max_m = config.max_m;
  if (config.threads == "auto") {
    options.threads = 0;
  } else {
    try {
      std::size_t used = 0;
      const int n = std::stoi(config.threads, &used);
      if (used != config.threads.size() || n < 1) throw std::invalid_argument("threads");
      options.threads = static_cast<unsigned>(n);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--threads must be a positive integer or 'auto'");
    }
  }
  return options;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad vertex list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty vertex list");
  return out;
}

void check_input_size(const SimplicialComplex& k, const EngineOptions& options) {
  check_resource_limit(k, options);
}

ordered_json table_json(const BigradedRankTable& table) {
  ordered_json out = ordered_json::object();
  for (const auto& [b, r] : table.entries()) out[b.key()] = r;
  return out;
}

ordered_json rows_json(const std::map<int, BigradedRankTable::Rank>& rows) {
  ordered_json out = ordered_json::object();
  for (const auto& [p, r] : rows) out[std::to_string(p)] = r;
  return out;
}

ordered_json vertex_list_json(Mask s) {
  ordered_json out = ordered_json::array();
  for (Vertex v : vertices_of(s)) out.push_back(v + 1);
  return out;
}

/// Recomputes HH over Q and fails with FieldMismatch if ranks differ.
void verify_exact_ranks(const SimplicialComplex& k, const EngineOptions& options,
                        const BigradedRankTable& hh) {
  if (options.field.kind == FieldSpec::Kind::kRational) return;
  EngineOptions exact = options;
  exact.field = FieldSpec::rational();
  if (hh_ranks(k, exact) != hh) {
    throw Failure{kMismatch, "FieldMismatch",
                  "HH ranks over " + options.field.name() + " differ from ranks over Q"};
  }
}

std::string cmd_hh(const std::string& input, const RunConfig& config, bool want_hh) {
  const EngineOptions options = engine_options(config);
  const io::ComplexDocument doc = io::load_complex(input);
  check_input_size(doc.complex, options);

  io::ResultDocument result;
  result.m = doc.complex.vertex_count();
  result.field = options.field.name();
  if (want_hh) {
    HochsterTables tables = hochster_tables(doc.complex, options);
    if (config.verify_exact) {
      verify_exact_ranks(doc.complex, options, tables.hh);
      result.verified_exact = true;
    }
    result.h = std::move(tables.h);
    result.hh = std::move(tables.hh);
  } else {
    result.h = h_ranks(doc.complex, options);
  }

  if (config.output == "csv") return io::table_to_csv(want_hh ? *result.hh : *result.h);
  if (config.output == "table") {
    std::string text = io::table_to_text(*result.h, "H*(Z_K)");
    if (want_hh) text += io::table_to_text(*result.hh, "HH*(Z_K)");
    return text;
  }
  return io::result_to_json(result);
}

std::string cmd_check_thm1(const std::string& input, const std::string& sigma_text,
                           const RunConfig& config, int& exit_code,
                           std::string& diagnostic) {
  const EngineOptions options = engine_options(config);
  const io::ComplexDocument doc = io::load_complex(input);
  const SimplicialComplex& k = doc.complex;
  check_input_size(k, options);
  const Mask sigma =
      SubsetMask::from_one_based(parse_vertex_list(sigma_text), k.vertex_count()).bits();

  const Thm1Report report = check_theorem1(k, sigma, options);
  ordered_json out;
  out["sigma"] = vertex_list_json(sigma);
  out["n"] = report.n;
  ordered_json relabel = ordered_json::array();
  for (Vertex v : report.relabeling) relabel.push_back(v + 1);
  out["relabeling"] = relabel;
  out["conditions"] = {report.conditions[0], report.conditions[1], report.conditions[2],
                       report.conditions[3]};
  out["applicable"] = report.applicable;
  out["witnessing_J"] =
      report.witnessing_j ? vertex_list_json(report.witnessing_j->bits()) : ordered_json();
  out["predicted_delta"] =
      report.predicted_delta ? ordered_json(*report.predicted_delta) : ordered_json();

  if (!report.applicable) {
    out["verdict"] = "not_applicable";
    exit_code = kHypothesisFailed;
    std::string failed;
    for (int c = 0; c < 4; ++c) {
      if (!report.conditions[c]) failed += (failed.empty() ? "" : ",") + std::to_string(c + 1);
    }
    diagnostic = ordered_json{{"error", "NotApplicable"},
                              {"message", failed.empty()
                                              ? "ground set too small for sigma"
                                              : "hypothesis conditions failed: " + failed}}
                     .dump();
    return out.dump() + "\n";
  }

  const Thm1Verification v = verify_theorem1(k, sigma, options);
  out["rank_before"] = v.rank_before;
  out["rank_after"] = v.rank_after;
  out["rows_before"] = rows_json(v.rows_before);
  out["rows_after"] = rows_json(v.rows_after);
  out["hh_before"] = table_json(v.hh_before);
  out["hh_after"] = table_json(v.hh_after);
  out["verdict"] = v.pass ? "pass" : "fail";
  out["failures"] = v.failures;
  out["field"] = options.field.name();
  if (!v.pass) {
    exit_code = kMismatch;
    diagnostic = ordered_json{{"error", "VerdictMismatch"}, {"message", v.failures.front()}}
                     .dump();
  }
  return out.dump() + "\n";
}

std::string cmd_ladder(int r_max, const RunConfig& config, int& exit_code,
                       std::string& diagnostic) {
  const EngineOptions options = engine_options(config);
  if (r_max < 1) throw Error(ErrorCode::kInvalidArgument, "--r-max must be at least 1");

  std::vector<EvenRankMember> members;
  for (int r = 1; r <= r_max; ++r) {
    members.push_back(k2r_family(r));
    check_input_size(members.back().complex, options);
  }

  ordered_json rows = ordered_json::array();
  std::string csv = "r,m,rank,expected,status\n";
  std::string text = "   r   m  rank  expected  status\n";
  bool all_pass = true;
  for (int r = 1; r <= r_max; ++r) {
    const SimplicialComplex& k = members[r - 1].complex;
    const BigradedRankTable hh = hh_ranks(k, options);
    if (config.verify_exact) verify_exact_ranks(k, options, hh);
    const auto rank = hh.total();
    const bool pass = rank == 2 * r;
    all_pass = all_pass && pass;
    rows.push_back({{"r", r},
                    {"m", k.vertex_count()},
                    {"rank", rank},
                    {"expected", 2 * r},
                    {"pass", pass}});
    const std::string status = pass ? "pass" : "fail";
    csv += std::to_string(r) + "," + std::to_string(k.vertex_count()) + "," +
           std::to_string(rank) + "," + std::to_string(2 * r) + "," + status + "\n";
    std::ostringstream line;
    line << std::setw(4) << r << std::setw(4) << k.vertex_count() << std::setw(6) << rank
         << std::setw(10) << 2 * r << "  " << status << "\n";
    text += line.str();
  }
  if (!all_pass) {
    exit_code = kMismatch;
    diagnostic = ordered_json{{"error", "LadderMismatch"},
                              {"message", "some K_{2r} has rank different from 2r"}}
                     .dump();
  }
  if (config.output == "csv") return csv;
  if (config.output == "table") return text;
  ordered_json doc;
  doc["field"] = options.field.name();
  doc["rows"] = rows;
  doc["all_pass"] = all_pass;
  return doc.dump() + "\n";
}

std::string cmd_oracle(const std::string& input) {
  const io::ComplexDocument doc = io::load_complex(input);
  const auto rows = oracle::hh_rows(doc.complex);
  ordered_json out;
  out["m"] = doc.complex.vertex_count();
  std::int64_t total = 0;
  for (const auto& [p, r] : rows) total += r;
  out["hh_total"] = total;
  out["hh_rows"] = rows_json({rows.begin(), rows.end()});
  out["field"] = "Q";
  return out.dump() + "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kResourceLimit: return kResourceLimit;
    case ErrorCode::kGhostVertex: return kGhostVertex;
    case ErrorCode::kNotApplicable: return kHypothesisFailed;
    case ErrorCode::kInternalInconsistency: return kMismatch;
    default: return kUsageError;
  }
}

std::string diagnostic_line(std::string_view kind, const std::string& message) {
  return ordered_json{{"error", std::string(kind)}, {"message", message}}.dump();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and double cohomology of moment-angle complexes", "machh"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  if (const char* env = std::getenv("MACHH_THREADS")) config.threads = env;
  app.add_option("--field", config.field, "Coefficient field: q or gf:<prime>");
  app.add_option("--threads", config.threads, "Worker threads, or 'auto'");
  app.add_option("--max-m", config.max_m, "Largest accepted ground set (<= 30)");
  app.add_option("--out", config.out_path, "Write the result to this file");
  app.add_option("--format", config.output, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_flag("--verify-exact", config.verify_exact,
               "Recompute HH ranks over Q and fail on any difference");

  std::string input;
  auto* hh = app.add_subcommand("hh", "Bigraded ranks of H*(Z_K) and HH*(Z_K)");
  hh->add_option("input", input, "Complex file (JSON)")->required();
  auto* h = app.add_subcommand("h", "Bigraded ranks of H*(Z_K)");
  h->add_option("input", input, "Complex file (JSON)")->required();

  auto* construct = app.add_subcommand("construct", "Build a complex file");
  construct->require_subcommand(1);
  int r = 0;
  auto* k2r = construct->add_subcommand("k2r", "Member K_{2r} of the even-rank family");
  k2r->add_option("--r", r, "Family index r >= 1")->required();
  std::string a_path, b_path;
  int at_a = 1, at_b = 1;
  auto* join_cmd = construct->add_subcommand("join", "Simplicial join of two complexes");
  join_cmd->add_option("a", a_path)->required();
  join_cmd->add_option("b", b_path)->required();
  auto* wedge_cmd = construct->add_subcommand("wedge", "One-point union of two complexes");
  wedge_cmd->add_option("a", a_path)->required();
  wedge_cmd->add_option("b", b_path)->required();
  wedge_cmd->add_option("--at-a", at_a, "Wedge vertex of the first complex (1-based)");
  wedge_cmd->add_option("--at-b", at_b, "Wedge vertex of the second complex (1-based)");
  std::string face;
  auto* glue_cmd = construct->add_subcommand("glue", "Glue a simplex along its boundary");
  glue_cmd->add_option("input", a_path)->required();
  glue_cmd->add_option("--face", face, "Vertex list, e.g. 1,3")->required();

  std::string sigma;
  auto* check = app.add_subcommand("check-thm1", "Check and verify the simplex-gluing rank change");
  check->add_option("input", input)->required();
  check->add_option("sigma", sigma, "Vertex list of the glued simplex, e.g. 1,3")->required();

  int r_max = 0;
  auto* ladder = app.add_subcommand("ladder", "Verify rank HH = 2r along the K_{2r} family");
  ladder->add_option("--r-max", r_max, "Largest r")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force HH ranks (debugging)");
  oracle_cmd->group("");
  oracle_cmd->add_option("input", input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << diagnostic_line("UsageError", e.what()) << "\n";
    return kUsageError;
  }

  int exit_code = kOk;
  std::string diagnostic;
  std::string result;
  try {
    if (hh->parsed()) {
      result = cmd_hh(input, config, true);
    } else if (h->parsed()) {
      result = cmd_hh(input, config, false);
    } else if (construct->parsed()) {
      io::ComplexMeta meta;
      SimplicialComplex built;
      if (k2r->parsed()) {
        const EvenRankMember member = k2r_family(r);
        meta.r = r;
        meta.non_edge = {member.non_edge_x, member.non_edge_y};
        built = member.complex;
      } else if (join_cmd->parsed()) {
        built = join(io::load_complex(a_path).complex, io::load_complex(b_path).complex);
      } else if (wedge_cmd->parsed()) {
        built = wedge(io::load_complex(a_path).complex, at_a - 1,
                      io::load_complex(b_path).complex, at_b - 1);
      } else {
        const SimplicialComplex k = io::load_complex(a_path).complex;
        built = glue_simplex(
            k, SubsetMask::from_one_based(parse_vertex_list(face), k.vertex_count()).bits());
      }
      result = io::complex_to_json(built, meta);
    } else if (check->parsed()) {
      result = cmd_check_thm1(input, sigma, config, exit_code, diagnostic);
    } else if (ladder->parsed()) {
      result = cmd_ladder(r_max, config, exit_code, diagnostic);
    } else if (oracle_cmd->parsed()) {
      result = cmd_oracle(input);
    }
  } catch (const Error& e) {
    err << diagnostic_line(error_code_name(e.code()), e.what()) << "\n";
    return exit_code_for(e.code());
  } catch (const Failure& f) {
    err << diagnostic_line(f.kind, f.message) << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << diagnostic_line("InternalError", e.what()) << "\n";
    return kMismatch;
  }

  try {
    if (config.out_path.empty()) {
      out << result;
    } else {
      io::write_file_atomically(config.out_path, result);
    }
  } catch (const std::exception& e) {
    err << diagnostic_line("IOError", e.what()) << "\n";
    return kUsageError;
  }
  if (!diagnostic.empty()) err << diagnostic << "\n";
  return exit_code;
}

}  // namespace machh::cli
