#include "cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "symspace/json_io.hpp"
#include "test_golden.hpp"

namespace symspace::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines_of(const std::string& text) {
  std::vector<json> docs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) docs.push_back(json::parse(line));
  return docs;
}

TEST(Cli, SamplePipesIntoCheck) {
  for (const std::string space : {"ai", "aii"}) {
    const Outcome s = invoke({"sample", "--space", space, "--n", "3", "--count", "5", "--seed", "42"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(lines_of(s.out).size(), 5u);
    const Outcome c = invoke({"check", "--input", "-"}, s.out);
    ASSERT_EQ(c.code, 0) << c.err;
    for (const json& record : lines_of(c.out)) {
      EXPECT_TRUE(record["report"]["member"].get<bool>());
      EXPECT_LE(record["report"]["unitarity"].get<double>(), 1e-9);
    }
  }
}

TEST(Cli, SampleIsDeterministic) {
  const std::vector<std::string> args{"sample", "--space", "aii", "--n", "2", "--count", "3", "--seed", "9"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  EXPECT_NE(invoke(args).out,
            invoke({"sample", "--space", "aii", "--n", "2", "--count", "3", "--seed", "10"}).out);
}

TEST(Cli, TableMatchesGoldenFiles) {
  const Outcome csv = invoke({"table", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, testing::read_golden("table.csv"));
  const Outcome md = invoke({"table", "--format", "md"});
  EXPECT_EQ(md.out, testing::read_golden("table.md"));
  const Outcome js = invoke({"table", "--format", "json"});
  ASSERT_EQ(js.code, 0);
  EXPECT_EQ(json::parse(js.out).size(), 8u);
}

TEST(Cli, ContractAlongCoverWitness) {
  const Outcome s = invoke({"sample", "--space", "aii", "--n", "2", "--count", "1", "--seed", "5"});
  const Outcome c = invoke({"contract", "--input", "-", "--alpha-from-cover", "--steps", "8"}, s.out);
  ASSERT_EQ(c.code, 0) << c.err;
  const json path = json::parse(c.out);
  ASSERT_EQ(path.size(), 9u);
  for (const json& step : path) {
    EXPECT_LE(step["residuals"]["unitarity"].get<double>(), 1e-8);
    EXPECT_LE(step["residuals"]["symmetry"].get<double>(), 1e-8);
    EXPECT_LE(step["residuals"]["determinant"].get<double>(), 1e-9);
  }
  EXPECT_EQ(path.back()["s"].get<double>(), 1.0);
}

TEST(Cli, FactorAndLog) {
  const Outcome s = invoke({"sample", "--space", "ai", "--n", "4", "--count", "2", "--seed", "3"});
  const Outcome f = invoke({"factor", "--input", "-"}, s.out);
  ASSERT_EQ(f.code, 0) << f.err;
  for (const json& r : lines_of(f.out)) EXPECT_LE(r["residual"].get<double>(), 1e-9);
  const Outcome l = invoke({"log", "--input", "-", "--alpha-from-cover"}, s.out);
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(lines_of(l.out).size(), 2u);
}

TEST(Cli, BareMatrixNeedsKind) {
  const std::string bare = io::matrix_to_json(identity(2)).dump();
  EXPECT_EQ(invoke({"check", "--input", "-"}, bare).code, 2);
  const Outcome ok = invoke({"check", "--input", "-", "--space", "ai", "--n", "2"}, bare);
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"sample", "--space", "ai", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  const std::string identity2 = io::matrix_to_json(identity(2)).dump();
  // An eigenvalue on the cut is a domain error.
  EXPECT_EQ(invoke({"log", "--input", "-", "--space", "ai", "--n", "2", "--alpha", "0"}, identity2).code, 1);
  // Outside the space.
  const std::string doubled = io::matrix_to_json(2.0 * identity(2)).dump();
  EXPECT_EQ(invoke({"check", "--input", "-", "--space", "ai", "--n", "2"}, doubled).code, 1);
  // E in AII(1) lies in the other Pfaffian orbit.
  EXPECT_EQ(invoke({"factor", "--input", "-", "--space", "aii", "--n", "1"}, identity2).code, 1);
  EXPECT_EQ(invoke({"describe", "--family", "AI", "--n", "2"}).code, 1);
}

TEST(Cli, Describe) {
  const Outcome d = invoke({"describe", "--family", "AI", "--n", "4"});
  ASSERT_EQ(d.code, 0) << d.err;
  const json j = json::parse(d.out);
  EXPECT_EQ(j["dimension"], 9);
  EXPECT_EQ(j["cat_exact"], 3);
  const json open = json::parse(invoke({"describe", "--family", "BDI", "--p", "5", "--q", "3"}).out);
  EXPECT_TRUE(open["cat_exact"].is_null());
}

TEST(Cli, CoverAudit) {
  const Outcome a = invoke({"cover", "--audit", "--space", "aii", "--n", "3", "--trials", "50", "--seed", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json::parse(a.out)["covered_fraction"].get<double>(), 1.0);
}

}  // namespace
}  // namespace symspace::cli
