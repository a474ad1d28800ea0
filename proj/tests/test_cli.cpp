#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "sepweb/errors.hpp"

using nlohmann::json;
using namespace sepweb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChartForward) {
  const Result r = call({"chart", "2", "1", "--triple", "1,2,1.5707963267948966", "--forward"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
  EXPECT_NEAR(j["t"].get<double>(), 1, 1e-15);
  EXPECT_NEAR(j["x"].get<double>(), 0, 1e-15);
  EXPECT_NEAR(j["y"].get<double>(), 2, 1e-15);
}

TEST(Cli, ChartInvert) {
  const Result r = call({"chart", "29", "1", "--params", "a=1,b=2", "--point",
                         "1.5,1.4142135623730951,0.8660254037844386", "--invert"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["u"].get<double>(), 3, 1e-10);
  EXPECT_NEAR(j["v"].get<double>(), 1.5, 1e-10);
  EXPECT_NEAR(j["w"].get<double>(), -1, 1e-10);
  EXPECT_EQ(j["in_range"], true);
}

TEST(Cli, BadParamsAndUnknownChartAreUsageErrors) {
  EXPECT_EQ(call({"chart", "29", "1", "--params", "a=2,b=1", "--triple", "3,1.5,-1", "--forward"}).code, cli::kUsage);
  EXPECT_EQ(call({"chart", "99", "1", "--triple", "1,1,1", "--forward"}).code, cli::kUsage);
  EXPECT_EQ(call({"export", "surface", "99", "1", "--fix", "u=1"}).code, cli::kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, cli::kUsage);
}

TEST(Cli, RangeViolationIsDomainError) {
  EXPECT_EQ(call({"chart", "16", "2", "--triple", "1,0,0", "--forward"}).code, cli::kDomain);
}

TEST(Cli, ClassifyExamples) {
  Result r = call({"classify", "--json", R"({"A":0,"w":0,"m":1})"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["class"], "central");
  ASSERT_TRUE(j["web"].is_array());
  EXPECT_EQ(j["web"].front(), 14);
  EXPECT_EQ(j["web"].back(), 22);

  r = call({"classify", "--json", R"({"A":[[0,0,0],[0,1,0],[0,0,2]],"w":0,"m":1})"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["web"], 29);
  EXPECT_EQ(j["reducible"], false);
}

TEST(Cli, ClassifyRejectsBadInput) {
  EXPECT_EQ(call({"classify", "--json", R"({"A":[[0,1,0],[0,0,0],[0,0,0]],"w":0,"m":0})"}).code,
            cli::kInvalidTensor);
  EXPECT_EQ(call({"classify", "--json", R"({"A":[1,2)"}).code, cli::kUsage);
}

TEST(Cli, TensorJsonFixpoint) {
  const json in = json::parse(R"({"A":[[0.5,1,0],[-1,2,0],[0,0,3]],"w":[1,-2,0.25],"m":0.75})");
  const ConcircularTensor l = cli::ct_from_json(in);
  const json once = cli::ct_to_json(l);
  EXPECT_EQ(cli::ct_to_json(cli::ct_from_json(once)), once);
  EXPECT_EQ(once["m"], 0.75);
  EXPECT_THROW(cli::ct_from_json(json::parse(R"({"A":[[1,2],[3,4]],"w":0,"m":0})")), Error);
}

TEST(Cli, VerifyIsReproducible) {
  const std::vector<std::string> args{"--seed", "7", "verify", "--samples", "10", "--web", "31"};
  const Result a = call(args);
  const Result b = call(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["summary"]["total"], 4);
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, VerifyFailureExitCode) {
  EXPECT_EQ(call({"--tol", "1e-20", "verify", "--samples", "5", "--web", "29"}).code, cli::kVerifyFailed);
}

TEST(Cli, ExportCatalog) {
  const Result r = call({"export", "catalog"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["webs"].size(), 45u);
  EXPECT_EQ(j["charts"].size(), 88u);
  EXPECT_EQ(j["web_count"], 45);
  EXPECT_EQ(j["chart_count"], 88);
}

TEST(Cli, ExportSurface) {
  const Result r = call({"export", "surface", "16", "2", "--fix", "u=1", "--grid", "20"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "u,v,w,t,x,y");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  EXPECT_EQ(rows, 400);
  EXPECT_EQ(cli::surface_grid(16, 2, {}, 0, 1.0, 20).size(), 400u);
}
