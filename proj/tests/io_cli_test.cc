#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "koorn/error.h"
#include "koorn/json_io.h"
#include "koorn/sampling.h"

namespace koorn {
namespace {

TEST(Json, RoundTrip) {
  ParameterSampler s(6);
  for (int n = 1; n <= 4; ++n) {
    const LaurentPoly f = s.RandomPoly(n, 7, 3);
    EXPECT_EQ(PolyFromJson(nlohmann::json::parse(PolyToJson(f).dump())), f);
  }
  EXPECT_EQ(PolyFromJson(PolyToJson(LaurentPoly(2))), LaurentPoly(2));
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(PolyFromJson(nlohmann::json::parse(R"({"terms":[]})")), ParseError);
  EXPECT_THROW(PolyFromJson(nlohmann::json::parse(R"({"n":2,"terms":[{"coeff":"1/2","exp":[1]}]})")), ParseError);
  EXPECT_THROW(PolyFromJson(nlohmann::json::parse(R"({"n":1,"terms":[{"coeff":"1/0","exp":[1]}]})")), ParseError);
}

struct Result {
  int code;
  std::string out;
};

Result Cli(const std::string& args) {
  const std::string cmd = std::string(KOORN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, ExpandEmitsParsablePolynomial) {
  const Result r = Cli("expand --family nonsymmetric --mu 2 --params t=1/3,a=1/5,b=-1/7,c=1/3,d=1/5");
  ASSERT_EQ(r.code, 0);
  const LaurentPoly f = PolyFromJson(nlohmann::json::parse(r.out));
  // (z - c)(z - d) for a single positive part.
  LaurentPoly expect(1);
  expect.add_term(Exponent::Unit(0, 2), 1);
  expect.add_term(Exponent::Unit(0, 1), -Rational(8, 15));
  expect.add_term(Exponent::Unit(0, 0), Rational(1, 15));
  EXPECT_EQ(f, expect);
}

TEST(Cli, CtPrintsFraction) {
  const Result r = Cli("ct --density nonsymmetric --n 1 --params t=1/2,a=1/3,b=-1/4,c=2/5,d=-3/7 --quadrature 64");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["value"].is_string());
  EXPECT_LT(j["discrepancy"].get<double>(), 1e-10);
  EXPECT_EQ(j["quadrature"]["grid"], 64);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Cli("expand --family symmetric --lambda 1,2 --params t=1/3").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("ct --density symmetric --n 1 --params t=1/3,t0=3/2").code, 2);
  // v_(0) carries 1 - ab.
  EXPECT_EQ(Cli("expand --family symmetric --lambda 0 --params t=1/3,a=2,b=1/2").code, 3);
  EXPECT_EQ(Cli("verify --suite statistics --seed 3 --points 1").code, 0);
}

TEST(Cli, ParamsFromEnvironment) {
  const Result r = Cli("expand --family nonsymmetric --mu 1");
  EXPECT_EQ(r.code, 0) << "expects KOORN_PARAMS in the test environment";
}

TEST(Cli, ParamsFromFile) {
  const std::string path = ::testing::TempDir() + "koorn_params.txt";
  {
    std::ofstream f(path);
    f << "t = 1/3\na=1/5, b=-1/7\n\nc=1/3,d=1/5\n";
  }
  const Result r = Cli("expand --family nonsymmetric --mu 1 --format text");
  ASSERT_EQ(r.code, 0);
  setenv("KOORN_PARAMS", path.c_str(), 1);
  const Result from_file = Cli("expand --family nonsymmetric --mu 2");
  ASSERT_EQ(from_file.code, 0);
  EXPECT_EQ(PolyFromJson(nlohmann::json::parse(from_file.out)).coefficient(Exponent{}), Rational(1, 15));
}

}  // namespace
}  // namespace koorn
