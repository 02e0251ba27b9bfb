// Command-line front end: construction, constant terms, inner products and
// the verification suites.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "koorn/ct_engine.h"
#include "koorn/error.h"
#include "koorn/json_io.h"
#include "koorn/nonsymmetric.h"
#include "koorn/symmetric.h"
#include "koorn/verify.h"

namespace {

using koorn::Composition;
using koorn::ParameterMode;
using koorn::ParameterPoint;
using koorn::Partition;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGenericity = 3;

struct Config {
  std::string family = "symmetric";
  std::string lambda;
  std::string mu;
  std::string monomial;
  std::string word;
  int n = 0;
  std::string params;
  std::string format = "json";
  bool check_moduli = false;
  std::string suite;
  std::uint64_t seed = 1;
  int n_max = 0;
  int m_max = 0;
  int points = 0;
  int grid = 0;
  std::string density = "nonsymmetric";
};

ParameterMode ModeFor(const std::string& family) {
  return family == "nonsymmetric" ? ParameterMode::kNonsymmetric : ParameterMode::kSymmetric;
}

ParameterPoint Params(const Config& c, ParameterMode mode) {
  std::string text = c.params;
  if (text.empty()) {
    if (const char* env = std::getenv("KOORN_PARAMS")) text = env;
    // The variable may name a file holding the assignments.
    std::ifstream file(text);
    if (!text.empty() && file) {
      std::string line, all;
      while (std::getline(file, line)) {
        std::erase_if(line, [](unsigned char ch) { return std::isspace(ch); });
        if (!line.empty()) all += (all.empty() ? "" : ",") + line;
      }
      text = all;
    }
  }
  return koorn::ParseParameterPoint(text, mode);
}

// The index vector padded with zeros to n entries (n = 0 keeps its length).
std::vector<int> Index(const std::string& text, int n, const char* flag) {
  if (text.empty()) throw koorn::ParseError(std::string("missing ") + flag);
  std::vector<int> v = koorn::ParseIndexVector(text);
  if (n == 0) return v;
  if (static_cast<int>(v.size()) > n) throw koorn::ParseError(std::string(flag) + " has more than n entries");
  v.resize(n, 0);
  return v;
}

void PrintQuadrature(nlohmann::json& out, const koorn::FactoredIntegrand& integrand, const koorn::Rational& exact,
                     int grid) {
  const auto q = koorn::CtQuadrature(integrand, grid);
  out["quadrature"] = {{"re", q.real()}, {"im", q.imag()}, {"grid", grid}};
  out["discrepancy"] = std::abs(q - std::complex<double>(exact.get_d(), 0));
}

int CmdExpand(const Config& c) {
  const ParameterPoint p = Params(c, ModeFor(c.family));
  if (c.check_moduli) p.require_integration_moduli();
  koorn::LaurentPoly f;
  if (c.family == "symmetric") {
    const auto parts = Index(c.lambda, c.n, "--lambda");
    f = koorn::KPoly(Partition(parts), static_cast<int>(parts.size()), p);
  } else if (c.family == "nonsymmetric") {
    const auto parts = Index(c.mu.empty() ? c.lambda : c.mu, c.n, "--mu");
    std::vector<int> word;
    if (!c.word.empty()) word = koorn::ParseIndexVector(c.word);
    f = koorn::EComposition(Composition(parts), p, word);
  } else {
    throw koorn::ParseError("unknown family '" + c.family + "'");
  }
  if (c.format == "text") {
    std::cout << koorn::PolyToText(f);
  } else {
    std::cout << koorn::PolyToJson(f).dump() << "\n";
  }
  return 0;
}

int CmdCt(const Config& c) {
  const bool sym = c.density == "symmetric";
  if (!sym && c.density != "nonsymmetric") throw koorn::ParseError("unknown density '" + c.density + "'");
  if (c.n < 1) throw koorn::ParseError("--n must be at least 1");
  const ParameterPoint p = Params(c, sym ? ParameterMode::kSymmetric : ParameterMode::kNonsymmetric);
  const auto integrand =
      koorn::BuildDensity(sym ? koorn::DensityKind::kSymmetric : koorn::DensityKind::kNonsymmetric, c.n, p);
  const koorn::Rational value = koorn::ConstantTerm(integrand);
  nlohmann::json out{{"value", koorn::ToFractionString(value)}};
  if (c.grid > 0) PrintQuadrature(out, integrand, value, c.grid);
  std::cout << out.dump() << "\n";
  return 0;
}

int CmdInnerProduct(const Config& c) {
  const ParameterPoint p = Params(c, ModeFor(c.family));
  koorn::FactoredIntegrand integrand;
  if (c.family == "symmetric") {
    p.require_integration_moduli();
    const auto l = Index(c.lambda, c.n, "--lambda");
    const int n = static_cast<int>(l.size());
    const auto m = Index(c.mu, n, "--mu");
    integrand = koorn::SymmetricIntegrand(koorn::KPoly(Partition(l), n, p), koorn::KPoly(Partition(m), n, p), p);
  } else if (c.family == "nonsymmetric") {
    p.require_integration_moduli();
    const auto l = Index(c.lambda, c.n, "--lambda");
    const int n = static_cast<int>(l.size());
    const koorn::LaurentPoly e = koorn::EComposition(Composition(l), p);
    koorn::LaurentPoly g;
    if (!c.monomial.empty()) {
      g = koorn::LaurentPoly::Monomial(n, koorn::Exponent::FromVector(Index(c.monomial, n, "--monomial")));
    } else {
      g = koorn::EComposition(Composition(Index(c.mu, n, "--mu")), p.inverted());
    }
    integrand = koorn::InnerProduct0Integrand(e, g, p);
  } else {
    throw koorn::ParseError("unknown family '" + c.family + "'");
  }
  const koorn::Rational value = koorn::ConstantTerm(integrand);
  nlohmann::json out{{"value", koorn::ToFractionString(value)}};
  if (c.grid > 0) PrintQuadrature(out, integrand, value, c.grid);
  std::cout << out.dump() << "\n";
  return 0;
}

int CmdVerify(const Config& c) {
  koorn::SuiteOptions options;
  options.seed = c.seed;
  options.n_max = c.n_max;
  options.m_max = c.m_max;
  options.points = c.points;
  options.quadrature_grid = c.grid;
  const koorn::Report report = koorn::RunSuite(c.suite, options);
  std::cout << report.to_json().dump(2) << "\n";
  return report.all_pass() ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Koornwinder polynomials at q = 0"};
  app.require_subcommand(1);
  Config c;

  auto* expand = app.add_subcommand("expand", "Print K_lambda or E_mu");
  expand->add_option("--family", c.family)->check(CLI::IsMember({"symmetric", "nonsymmetric"}));
  expand->add_option("--lambda", c.lambda, "Partition, e.g. 2,1,0");
  expand->add_option("--mu", c.mu, "Composition, e.g. 0,-1,2");
  expand->add_option("--word", c.word, "Generator indices carrying mu+ to mu");
  expand->add_option("--n", c.n);
  expand->add_option("--params", c.params, "e.g. t=1/3,a=1/5 (default: $KOORN_PARAMS, a string or a file)");
  expand->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  expand->add_flag("--check-moduli", c.check_moduli, "Require integration moduli < 1");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", c.suite)->required()->check(CLI::IsMember(koorn::SuiteNames()));
  verify->add_option("--seed", c.seed);
  verify->add_option("--n-max", c.n_max);
  verify->add_option("--m-max", c.m_max);
  verify->add_option("--points", c.points);
  verify->add_option("--quadrature", c.grid, "Also compare with the N-point torus quadrature");

  auto* ct = app.add_subcommand("ct", "Constant term of a density");
  ct->add_option("--density", c.density)->check(CLI::IsMember({"symmetric", "nonsymmetric"}));
  ct->add_option("--n", c.n)->required();
  ct->add_option("--params", c.params);
  ct->add_option("--quadrature", c.grid);

  auto* ip = app.add_subcommand("inner-product", "Inner product of two basis elements");
  ip->add_option("--family", c.family)->check(CLI::IsMember({"symmetric", "nonsymmetric"}));
  ip->add_option("--lambda", c.lambda);
  ip->add_option("--mu", c.mu);
  ip->add_option("--monomial", c.monomial, "Pair E_lambda with z^monomial instead of E_mu");
  ip->add_option("--n", c.n);
  ip->add_option("--params", c.params);
  ip->add_option("--quadrature", c.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*expand) return CmdExpand(c);
    if (*verify) return CmdVerify(c);
    if (*ct) return CmdCt(c);
    if (*ip) return CmdInnerProduct(c);
  } catch (const koorn::NonGenericParameters& e) {
    std::cerr << "non-generic parameters: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const koorn::InexactDivision& e) {
    std::cerr << "inexact division: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const koorn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
