#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graev/cli.hpp"
#include "graev/report.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = graev::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("graev_cli_test_" + name)).string();
}

}  // namespace

TEST(Cli, TuCheckOnFixtureWord) {
  const auto r = run({"tu-check", "--space", support::fixture_path("spaces/discrete3.json"), "--word",
                      support::fixture_path("words/discrete3_2a_minus_b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json expected = graev::io::read_json_file(support::fixture_path("expected/tu_check_discrete3_2a_minus_b.json"));
  const json result = r.report().at("result");
  for (const auto& [key, value] : expected.items()) EXPECT_EQ(result.at(key), value) << key;
}

TEST(Cli, NormMatchesExpectedReport) {
  const auto r = run({"norm", "--space", support::fixture_path("spaces/line4.json"), "--word",
                      support::fixture_path("words/line4_a_minus_b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json expected = graev::io::read_json_file(support::fixture_path("expected/norm_line4_a_minus_b.json"));
  EXPECT_EQ(r.report().at("result"), expected);
  EXPECT_TRUE(r.report().at("inputs").at("space").get<std::string>().starts_with("sha256:"));
}

TEST(Cli, SeminormWithInlineInputs) {
  const auto r = run({"seminorm", "--space", support::fixture_path("spaces/discrete3.json"), "--lincomb",
                      R"({"coeffs":{"a":"1/2"}})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report().at("result").at("value"), "1/2");
  EXPECT_EQ(r.report().at("result").at("dual").at("*"), "0");
}

TEST(Cli, UnknownSubcommandPrintsUsage) {
  const auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, graev::kExitInputError);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_NE(run({}).code, 0);
}

TEST(Cli, MalformedInputNamesPathAndField) {
  const std::string path = temp_path("bad_space.json");
  std::ofstream(path) << R"({"points":["*","a"],"basepoint":"*","dist":[["0","1"],["one","0"]]})";
  const auto r = run({"norm", "--space", path, "--word", R"({"coeffs":{"a":1}})"});
  EXPECT_EQ(r.code, graev::kExitInputError);
  EXPECT_NE(r.err.find(path), std::string::npos);
  EXPECT_NE(r.err.find("dist"), std::string::npos);

  const auto missing = run({"norm", "--space", "/nonexistent.json", "--word", "{}"});
  EXPECT_EQ(missing.code, graev::kExitInputError);
}

TEST(Cli, TorusKronecker) {
  const auto r = run({"torus", "kronecker", "--x", R"([{"rat":"1/4"}])", "--target", R"([{"rat":"1/2"}])", "--eps",
                      "1/100", "--max-m", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report().at("result").at("m"), 2);
  const auto absent = run({"torus", "kronecker", "--x", R"({"rat":"1/4"})", "--target", R"({"rat":"1/3"})", "--eps",
                           "1/100"});
  EXPECT_EQ(absent.code, 0);
  EXPECT_EQ(absent.report().at("result").at("status"), "absent");
}

TEST(Cli, TorusNetExitCodes) {
  const std::string quarters = R"([[{"rat":"0"}],[{"rat":"1/4"}],[{"rat":"1/2"}],[{"rat":"3/4"}]])";
  EXPECT_EQ(run({"torus", "net", "--points", quarters, "--eps", "26/100", "--grid", "1/1000"}).code, 0);
  const auto refuted = run({"torus", "net", "--points", R"([[{"rat":"0"}]])", "--eps", "1/4"});
  EXPECT_EQ(refuted.code, graev::kExitFailure);
  EXPECT_TRUE(refuted.report().at("checks")[0].at("detail").contains("witness"));
  const std::string grid2 = [] {
    json pts = json::array();
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        pts.push_back({{{"rat", std::to_string(i) + "/8"}}, {{"rat", std::to_string(j) + "/8"}}});
      }
    }
    return pts.dump();
  }();
  EXPECT_EQ(run({"torus", "net", "--points", grid2, "--eps", "5/64", "--grid", "1/16"}).code, graev::kExitInconclusive);
  EXPECT_EQ(run({"torus", "net", "--x", R"({"coords":{"sqrt2":"1"}})", "--count", "40", "--eps", "1/10"}).code, 0);
}

TEST(Cli, RolewiczBuildVerifyApprox) {
  const std::string cert = temp_path("cert.json");
  const auto built = run({"rolewicz", "build", "--depth", "2", "--out", cert});
  ASSERT_EQ(built.code, 0) << built.err;
  EXPECT_EQ(built.report().at("result").at("certificate").at("convention"), "powers-from-1");
  EXPECT_EQ(run({"rolewicz", "verify", "--cert", cert}).code, 0);

  const std::string report_path = temp_path("build_report.json");
  std::ofstream(report_path) << built.out;
  EXPECT_EQ(run({"rolewicz", "verify", "--cert", report_path}).code, 0);

  const auto approx = run({"rolewicz", "approx", "--cert", cert, "--target", R"([{"rat":"1/2"},{"rat":"1/2"}])",
                           "--eps", "1/2"});
  ASSERT_EQ(approx.code, 0) << approx.err;
  EXPECT_EQ(approx.report().at("result").at("status"), "found");
  const auto below = run({"rolewicz", "approx", "--cert", cert, "--target", R"([{"rat":"0"},{"rat":"0"}])", "--eps",
                          "1/8"});
  EXPECT_EQ(below.code, graev::kExitInputError);
  EXPECT_NE(below.err.find("truncation floor"), std::string::npos);

  json tampered = graev::io::read_json_file(cert);
  tampered["n"][0] = 1;
  tampered["weights"][0] = "1";
  const std::string bad = temp_path("bad_cert.json");
  std::ofstream(bad) << tampered.dump();
  EXPECT_EQ(run({"rolewicz", "verify", "--cert", bad}).code, graev::kExitFailure);
}

TEST(Cli, RolewiczConventionFlag) {
  const auto r = run({"rolewicz", "build", "--depth", "1", "--convention", "powers-from-0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report().at("result").at("certificate").at("convention"), "powers-from-0");
  EXPECT_EQ(run({"rolewicz", "build", "--depth", "1", "--convention", "powers-from-2"}).code, graev::kExitInputError);
}

TEST(Cli, EmbedCheck) {
  const auto r = run({"embed", "check", "--model", support::fixture_path("models/model.json"), "--coeff-bound", "1",
                      "--trials", "5", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  bool saw_linf = false;
  const json report = r.report();
  for (const auto& c : report.at("checks")) {
    if (c.at("name").get<std::string>().find(":linf:") != std::string::npos) saw_linf = true;
  }
  EXPECT_TRUE(saw_linf);
}

TEST(Cli, CheckCommandWithCsv) {
  const std::string csv = temp_path("check.csv");
  const auto r = run({"check", "--space", support::fixture_path("spaces/tree5.json"), "--trials", "10", "--seed", "4",
                      "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "name,status,advisory,detail");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, r.report().at("checks").size());
}

TEST(Cli, CheckCommandReportsInvalidSpace) {
  const auto r = run({"check", "--space", support::fixture_path("invalid/triangle_violation.json")});
  EXPECT_EQ(r.code, graev::kExitFailure);
}

TEST(Cli, SuiteIsDeterministic) {
  const auto a = run({"suite", "--seed", "7", "--trials", "4"});
  const auto b = run({"suite", "--seed", "7", "--trials", "4"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(graev::without_timing(a.report()).dump(), graev::without_timing(b.report()).dump());
  const auto c = run({"suite", "--seed", "8", "--trials", "4"});
  EXPECT_NE(graev::without_timing(a.report()).dump(), graev::without_timing(c.report()).dump());
}
