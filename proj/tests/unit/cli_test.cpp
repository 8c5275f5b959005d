#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace machh::cli {
namespace {

const std::string kData = MACHH_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return kData + "/corpus/" + name; }

TEST(Cli, HhOnSquare) {
  const auto r = run_cli({"hh", corpus("square.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hh_total"], 4);
  EXPECT_EQ(j["h_total"], 4);
  EXPECT_EQ(j["hh"]["(-1,4)"], 2);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, HOnlyOmitsDoubleCohomology) {
  const auto r = run_cli({"h", corpus("square_diagonal.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h"]["(-1,6)"], 2);
  EXPECT_FALSE(j.contains("hh"));
}

TEST(Cli, CsvFormat) {
  const auto r = run_cli({"--format", "csv", "hh", corpus("square.json")});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "k,l,rank\n0,0,1\n1,2,2\n2,4,1\n");
}

TEST(Cli, PrimeFieldWithExactCheck) {
  const auto r = run_cli({"--field", "gf:32003", "--verify-exact", "hh", corpus("pentagon.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["field"], "GF(32003)");
  EXPECT_EQ(j["verified_exact"], true);
}

TEST(Cli, ThreadCountsGiveIdenticalOutput) {
  const auto a = run_cli({"--threads", "1", "hh", corpus("wedge_two_squares.json")});
  const auto b = run_cli({"--threads", "4", "hh", corpus("wedge_two_squares.json")});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConstructK2rRoundTrips) {
  const auto r = run_cli({"construct", "k2r", "--r", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"m\":4,\"facets\":[[1,2],[1,4],[2,3],[3,4]],\"meta\":{\"r\":2,\"non_edge\":[1,3]}}\n");
}

TEST(Cli, ConstructWritesFileAndFeedsHh) {
  const auto dir = std::filesystem::temp_directory_path() / "machh_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "k6.json").string();
  ASSERT_EQ(run_cli({"--out", path, "construct", "k2r", "--r", "3"}).code, kOk);
  const auto r = run_cli({"hh", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["hh_total"], 6);

  const std::string joined = (dir / "join.json").string();
  ASSERT_EQ(run_cli({"--out", joined, "construct", "join", corpus("two_points.json"),
                     corpus("two_points.json")})
                .code,
            kOk);
  EXPECT_EQ(nlohmann::json::parse(run_cli({"hh", joined}).out)["hh_total"], 4);

  const std::string glued = (dir / "glued.json").string();
  ASSERT_EQ(run_cli({"--out", glued, "construct", "glue", corpus("square.json"), "--face",
                     "1,3"})
                .code,
            kOk);
  EXPECT_EQ(nlohmann::json::parse(run_cli({"hh", glued}).out)["hh_total"], 2);

  const auto wedge = run_cli({"construct", "wedge", corpus("square.json"),
                              corpus("square.json"), "--at-a", "1", "--at-b", "1"});
  ASSERT_EQ(wedge.code, kOk) << wedge.err;
  EXPECT_EQ(nlohmann::json::parse(wedge.out)["m"], 7);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CheckTheoremPassAndFail) {
  const auto ok = run_cli({"check-thm1", corpus("square.json"), "1,3"});
  ASSERT_EQ(ok.code, kOk) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["predicted_delta"], -2);

  const auto bad = run_cli({"check-thm1", corpus("square.json"), "1,2"});
  EXPECT_EQ(bad.code, kHypothesisFailed);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["applicable"], false);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"], "NotApplicable");

  EXPECT_EQ(run_cli({"check-thm1", corpus("square.json"), "1"}).code, kUsageError);
}

TEST(Cli, Ladder) {
  const auto r = run_cli({"ladder", "--r-max", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["all_pass"], true);
  EXPECT_EQ(run_cli({"ladder", "--r-max", "0"}).code, kUsageError);
}

TEST(Cli, ErrorExitCodes) {
  const auto ghost = run_cli({"hh", kData + "/invalid/ghost_vertex.json"});
  EXPECT_EQ(ghost.code, kGhostVertex);
  EXPECT_EQ(nlohmann::json::parse(ghost.err)["error"], "GhostVertex");
  EXPECT_TRUE(ghost.out.empty());

  EXPECT_EQ(run_cli({"hh", kData + "/invalid/bad_vertex.json"}).code, kUsageError);
  EXPECT_EQ(run_cli({"hh", kData + "/invalid/truncated.json"}).code, kUsageError);
  EXPECT_EQ(run_cli({"hh", kData + "/missing.json"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--max-m", "5", "hh", corpus("wedge_two_squares.json")}).code,
            kResourceLimit);
  EXPECT_EQ(run_cli({"--field", "gf:9", "hh", corpus("square.json")}).code, kUsageError);
  EXPECT_EQ(run_cli({"--threads", "zero", "hh", corpus("square.json")}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
}

TEST(Cli, OracleCommandAgrees) {
  const auto r = run_cli({"oracle", corpus("pentagon.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["hh_total"], 4);
}

}  // namespace
}  // namespace machh::cli
