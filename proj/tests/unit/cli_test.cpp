#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "acsl/errors.hpp"
#include "cli/json_io.hpp"
#include "cli/run.hpp"
#include "cli/suites.hpp"

namespace acsl::cli {
namespace {

using nlohmann::json;

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << body;
  return path.string();
}

struct Invocation {
  int code;
  json out;
  json err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Invocation inv{code, json(), json()};
  if (!out.str().empty() && out.str().front() == '{') inv.out = json::parse(out.str());
  if (!err.str().empty()) inv.err = json::parse(err.str());
  return inv;
}

const std::string kHopfJson = R"j({"linking":[[0,1],[1,0]],"charges":[1,1],"roles":["observed","observed"]})j";

TEST(JsonInput, HopfMatrix) {
  const LoadedInput in = parse_input(json::parse(kHopfJson));
  const auto& link = std::get<FramedLink>(in.object);
  EXPECT_EQ(link, make_link(IntMatrix{{0, 1}, {1, 0}}, {1, 1}));
  EXPECT_TRUE(in.warnings.empty());
  EXPECT_FALSE(in.diagram.has_value());
}

TEST(JsonInput, DiagramRoute) {
  const LoadedInput in = parse_input(json::parse(
      R"j({"pd":"X(1,3,2,4) X(3,1,4,2)","components":[[1,2],[3,4]],"framings":[0,0],"charges":[1,1]})j"));
  ASSERT_TRUE(in.diagram.has_value());
  EXPECT_EQ(std::get<FramedLink>(in.object).linking, (IntMatrix{{0, 1}, {1, 0}}));
  const LoadedInput blackboard =
      parse_input(json::parse(R"j({"pd":"X(1,1,2,2)","components":[[1,2]],"framings":"blackboard"})j"));
  EXPECT_EQ(std::get<FramedLink>(blackboard.object).linking, (IntMatrix{{1}}));
}

TEST(JsonInput, MissingChargesWarns) {
  const LoadedInput in = parse_input(json::parse(R"j({"linking":[[0,1],[1,0]]})j"));
  EXPECT_EQ(std::get<FramedLink>(in.object).charges, (std::vector<std::int64_t>{0, 0}));
  ASSERT_EQ(in.warnings.size(), 1U);
}

TEST(JsonInput, Errors) {
  for (const char* bad : {R"j({"linking":[[0,1],[1.5,0]]})j", R"j({"linking":[[0,1],[2,0]]})j", R"j({})j",
                          R"j({"linking":[[0]],"genus":0,"N":[0],"q_self":0})j", R"j({"linking":[[0]],"roles":["x"]})j"}) {
    EXPECT_THROW(parse_input(json::parse(bad)), Error) << bad;
  }
}

TEST(JsonInput, RoundTrip) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    }
    std::vector<std::int64_t> q(n);
    for (auto& x : q) x = entry(rng);
    FramedLink link = make_link(m, q);
    if (t % 2) {
      link.roles[0] = Role::surgery;
      link.charges[0] = 0;
      link.names[0] = "S1";
    }
    EXPECT_EQ(std::get<FramedLink>(parse_input(to_json(link)).object), link);
  }
  const HomologyData h{1, {2, -2, 4}, 5};
  EXPECT_EQ(std::get<HomologyData>(parse_input(to_json(h)).object), h);
}

TEST(Cli, S3Hopf) {
  const auto path = write_temp("hopf.json", kHopfJson);
  const Invocation r = invoke({"s3", "--input", path, "--k", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["zero"], false);
  EXPECT_EQ(r.out["phase_exponent"], 2);
  EXPECT_EQ(r.out["order"], 4);
  EXPECT_NEAR(r.out["numeric"][0].get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(r.out["numeric"][1].get<double>(), 0.0, 1e-12);
  // Deterministic output.
  EXPECT_EQ(invoke({"s3", "--input", path, "--k", "1"}).out, r.out);
}

TEST(Cli, SurgeryMeridianVanishes) {
  const auto path = write_temp(
      "s1xs2_meridian.json",
      R"j({"linking":[[0,1],[1,0]],"charges":[1,0],"roles":["observed","surgery"]})j");
  const Invocation r = invoke({"surgery", "--input", path, "--k", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["zero"], true);
}

TEST(Cli, DenominatorZeroExitCode) {
  const auto path = write_temp("two_framed.json", R"j({"linking":[[2]],"charges":[0],"roles":["surgery"]})j");
  const Invocation r = invoke({"surgery", "--input", path, "--k", "1"});
  EXPECT_EQ(r.code, kExitDenominatorZero);
  EXPECT_EQ(r.err["error"]["kind"], "denominator_zero");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(invoke({"s3", "--input", "/nonexistent/link.json", "--k", "1"}).code, kExitInputError);
  const auto bad = write_temp("bad.json", R"j({"linking":[[0,1],[2,0]]})j");
  EXPECT_EQ(invoke({"s3", "--input", bad, "--k", "1"}).code, kExitInputError);
  const auto hopf = write_temp("hopf2.json", kHopfJson);
  EXPECT_EQ(invoke({"s3", "--input", hopf, "--k", "0"}).code, kExitInputError);
  EXPECT_EQ(invoke({"s3", "--input", hopf}).code, kExitInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "--suite", "nope"}).code, kExitInputError);
}

TEST(Cli, ClosedForms) {
  const auto h = write_temp("homology.json", R"j({"genus":1,"N":[2,-2,4],"q_self":5})j");
  const Invocation r = invoke({"s1xsigma", "--input", h, "--k", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["phase_exponent"], 3);
  const auto g0 = write_temp("genus0.json", R"j({"genus":0,"N":[1],"q_self":0,"k":1})j");
  EXPECT_EQ(invoke({"s1xs2", "--input", g0}).out["zero"], true);
}

TEST(Cli, Satellite) {
  const auto path = write_temp("three.json", R"j({"linking":[[0]],"charges":[3]})j");
  const Invocation r = invoke({"satellite", "--input", path, "--k", "2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["equal"], true);
  EXPECT_EQ(r.out["link"]["charges"], json::array({1, 1, 1}));
}

TEST(Cli, CheckSuites) {
  const Invocation r = invoke({"check", "--suite", "kirby", "--seed", "7", "--trials", "100", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["status"], "pass");
  EXPECT_EQ(r.out["passed"], 100);
  for (const auto& suite : suite_names()) {
    const Invocation s = invoke({"check", "--suite", suite, "--trials", "30"});
    EXPECT_EQ(s.code, kExitOk) << suite << " " << s.out.dump();
    EXPECT_EQ(s.out["failed"], 0) << suite;
  }
}

}  // namespace
}  // namespace acsl::cli
