#include "test_support.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

using namespace dinv;
using dinv::test::P;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DINV_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(DINV_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(Cli, Example1Passes) {
  const RunResult r = run("example1");
  ASSERT_EQ(r.status, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("basis").at(4), "1/24*x1^4 + x1^2*x2 + 3*x1*x2 + 2*x2^2 + 4*x2");
  EXPECT_EQ(j.at("expansion_reports").size(), 10u);
}

TEST(Cli, RecursiveAndExplicitBasesAgree) {
  const RunResult rec = run("basis --source recursive --spec " + data("example1.json"));
  const RunResult exp = run("basis --source explicit --spec " + data("example1.json"));
  ASSERT_EQ(rec.status, 0);
  ASSERT_EQ(exp.status, 0);
  EXPECT_EQ(rec.out, exp.out);
  const BasisSequence basis = basis_from_json(Json::parse(rec.out));
  EXPECT_EQ(basis, build_recursive(dinv::test::example1_params()));
}

TEST(Cli, PrettyBasis) {
  const RunResult r = run("basis --pretty --spec " + data("example1.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("L2 = 1/2*x1^2 + 2*x2"), std::string::npos) << r.out;
}

TEST(Cli, BasisRoundTripsThroughClosureCheck) {
  const RunResult basis = run("basis --spec " + data("example1.json"));
  ASSERT_EQ(basis.status, 0);
  const std::string path = temp_file("dinv_basis.json", basis.out);
  EXPECT_EQ(run("verify --what closure --spec " + data("example1.json") + " --basis " + path).status, 0);

  // Drop the x2 term from L_3: closure must now fail.
  BasisSequence broken = basis_from_json(Json::parse(basis.out));
  broken.elements[3] = P("1/6*x1^3 + 2*x1*x2", 2);
  const std::string bad = temp_file("dinv_broken.json", to_json(broken).dump());
  EXPECT_EQ(run("verify --what closure --spec " + data("example1.json") + " --basis " + bad).status, 1);
}

TEST(Cli, VerifyChecks) {
  const RunResult ids = run("verify --what identities --m-max 10 --oracle-max 6 --r-max 5 --i-max 5");
  EXPECT_EQ(ids.status, 0);
  EXPECT_TRUE(Json::parse(ids.out).at("pass").get<bool>());

  const RunResult br = run("verify --what breadth --spec " + data("general.json"));
  ASSERT_EQ(br.status, 0);
  EXPECT_EQ(Json::parse(br.out).at("breadth"), 1);

  EXPECT_EQ(run("verify --what equivalence --spec " + data("example1.json")).status, 0);
  EXPECT_EQ(run("verify --what equivalence --random 5").status, 0);
  EXPECT_EQ(run("verify --what closure --spec " + data("zero-params.json")).status, 0);
  EXPECT_EQ(run("verify --what closure --spec " + data("general.json")).status, 0);
}

TEST(Cli, PointsSchemeB) {
  const RunResult r = run("points --scheme b --spec " + data("example1.json"));
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("scheme"), "b");
  ASSERT_EQ(j.at("points").size(), 5u);
  const std::vector<std::string> h{"h"};
  EXPECT_EQ(parse_polynomial(j.at("points").at(4).at(1).get<std::string>(), h),
            parse_polynomial("24*h^2 + 72*h^3 + 96*h^4", h));
}

TEST(Cli, PointsCollapseAtZeroH) {
  const RunResult r = run("points --scheme a --spec " + data("example1.json") + " --z0 1/2,-3 --h 0");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  for (const auto& pt : j.at("points")) {
    EXPECT_EQ(rational_from_json(pt.at(0)), Rational(1, 2));
    EXPECT_EQ(rational_from_json(pt.at(1)), -3);
  }
}

TEST(Cli, Limit) {
  const RunResult r = run("limit --spec " + data("example1.json") + " --f-expr \"x1^5*x2^2\" --m 4 --z0 1,1");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("lead"), "87");
  EXPECT_EQ(j.at("target"), "87");
  EXPECT_TRUE(j.at("pass").get<bool>());

  const RunResult constant = run("limit --scheme b --spec " + data("example1.json") + " --f-expr 5 --m 3");
  ASSERT_EQ(constant.status, 0);
  EXPECT_EQ(Json::parse(constant.out).at("lead"), "0");

  const std::string f_json = temp_file("dinv_f.json", to_json(P("x1^2*x2", 2)).dump());
  EXPECT_EQ(run("limit --spec " + data("example1.json") + " --f " + f_json + " --m 3").status, 0);
}

TEST(Cli, SweepCsv) {
  const RunResult r = run("sweep --spec " + data("x1cubed.json") + " --f-expr x1^3 --m 2 --h0 1/4 --steps 4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "h,approx,exact,abs_err,est_order");
  EXPECT_NE(r.out.find("0.25,0.75,0,0.75,\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("0.125,0.375,0,0.375,1\n"), std::string::npos) << r.out;
}

TEST(Cli, BadInputIsRejected) {
  const std::string bad = temp_file("dinv_bad.json", R"({"d":2,"n":4,"a":{"5,2":"1"}})");
  EXPECT_EQ(run("basis --spec " + bad).status, 2);
  const std::string garbage = temp_file("dinv_garbage.json", "{not json");
  EXPECT_EQ(run("basis --spec " + garbage).status, 2);
  EXPECT_EQ(run("limit --spec " + data("example1.json") + " --f-expr x1 --m 9").status, 2);
  EXPECT_NE(run("basis --spec /nonexistent/spec.json").status, 0);
  EXPECT_EQ(run("points --spec " + data("general.json")).status, 2);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run("example1").out, run("example1").out);
  EXPECT_EQ(run("basis --source general --spec " + data("general.json")).out,
            run("basis --source general --spec " + data("general.json")).out);
}

TEST(SpecJson, RoundTrips) {
  const ParamTable params = dinv::test::example1_params();
  EXPECT_EQ(to_json(params).dump(), R"({"d":2,"n":4,"a":{"2,2":"2","3,2":"3","4,2":"4"}})");
  EXPECT_EQ(params_from_json(Json::parse(to_json(params).dump())), params);

  Rng rng(seed_from_env());
  for (int t = 0; t < 20; ++t) {
    const ParamTable p = random_params(rng, uniform(rng, 2, 4), uniform(rng, 1, 6));
    ASSERT_EQ(params_from_json(Json::parse(to_json(p).dump())), p);
    const GeneralSpec g = random_general_spec(rng, 5, 8, 3);
    const GeneralSpec back = general_spec_from_json(Json::parse(to_json(g).dump()));
    ASSERT_EQ(back.b, g.b);
    ASSERT_EQ(back.c, g.c);
  }

  const AnySpec any = spec_from_json(Json::parse(R"({"n":2,"d":1,"b":[1,2],"c":[["1","0"]]})"));
  EXPECT_TRUE(std::holds_alternative<GeneralSpec>(any));
  EXPECT_THROW(spec_from_json(Json::parse(R"({"n":2,"d":1,"b":[1,2],"c":[["0","1"]]})")), std::invalid_argument);
}
