#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FOCKVAR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const char* name) { return std::string(FOCKVAR_SAMPLES) + "/" + name; }

}  // namespace

TEST(Cli, NormOfOneInF2) {
  const auto r = run("norm --exponent " + sample("exp2.json") + " --function " + sample("f1.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["norm"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["modular_at_norm"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, NormOfZInF4) {
  const auto r = run("norm --exponent " + sample("exp4.json") + " --function " + sample("z.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out)["norm"].get<double>(), 0.59460355750136053336, 1e-7);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("norm --exponent " + sample("malformed.json") + " --function " + sample("f1.json")).code, 2);
  EXPECT_EQ(run("norm --exponent " + sample("exp2.json") + " --function /nonexistent.json").code, 2);
  EXPECT_EQ(run("norm --exponent " + sample("exp2.json")).code, 2);
  EXPECT_EQ(run("norm --bogus 1").code, 2);
  EXPECT_EQ(run("verify --suite nonsense").code, 2);
  EXPECT_EQ(run("apr --weight " + sample("gaussian.json") + " --centers 0,x").code, 2);
  EXPECT_EQ(run("norm --tol -1 --exponent " + sample("exp2.json") + " --function " + sample("f1.json")).code, 2);
}

TEST(Cli, PairReproducesValue) {
  const auto r = run("pair --f " + sample("z.json") + " --g " + sample("K1.json") + " --exponent " + sample("exp2.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["re"].get<double>(), 1.0, 1e-8);
  EXPECT_NEAR(j["im"].get<double>(), 0.0, 1e-8);
  EXPECT_GE(j["holder_margin"].get<double>(), 0.0);
}

TEST(Cli, ProjectAbsSquared) {
  const auto r = run("project --g " + sample("abs2.json") + " --points " + sample("points.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["values"].size(), 3u);
  for (const auto& v : j["values"]) {
    EXPECT_NEAR(v[0].get<double>(), 0.5, 1e-8);
    EXPECT_NEAR(v[1].get<double>(), 0.0, 1e-8);
  }
}

TEST(Cli, AprCsv) {
  const auto r = run("apr --weight " + sample("gaussian.json") + " --p0 2 --r 1 --centers 0,2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "center,product");
  EXPECT_NE(r.out.find("\n0,1.08616126963"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRegularity) {
  const auto a = run("verify --suite regularity");
  ASSERT_EQ(a.code, 0);
  const auto j = json::parse(a.out);
  ASSERT_TRUE(j.is_array());
  for (const auto& rep : j) EXPECT_TRUE(rep["passed"].get<bool>()) << rep["property"];
  EXPECT_EQ(a.out, run("verify --suite regularity").out);
  const auto csv = run("verify --suite regularity --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "property,id,inputs,lhs,rhs,margin,tolerance,passed");
}
