// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion k] [--seed s]
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "koorn/verify.h"

namespace {

using koorn::Check;
using koorn::Report;
using koorn::SuiteOptions;

constexpr int kQuadratureGrid = 128;
constexpr double kQuadratureTolerance = 1e-8;
constexpr double kConstantTermBudget = 30.0;
constexpr double kSymmetricBudget = 300.0;

struct Timed {
  Report report;
  double seconds = 0;
};

Timed Run(const std::string& suite, std::uint64_t seed, int grid) {
  SuiteOptions options;
  options.seed = seed;
  options.quadrature_grid = grid;
  options.quadrature_tolerance = kQuadratureTolerance;
  const auto start = std::chrono::steady_clock::now();
  Timed out{koorn::RunSuite(suite, options), 0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

bool StartsWith(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }
bool Contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

struct Tally {
  int total = 0;
  int failed = 0;
  std::string first_failure;

  void add(const Check& c) {
    ++total;
    if (c.pass) return;
    if (failed++ == 0) first_failure = c.name + ": " + c.lhs + " vs " + c.rhs;
  }
  bool ok() const { return total > 0 && failed == 0; }
  std::string summary() const {
    std::string s = std::to_string(total - failed) + "/" + std::to_string(total) + " checks";
    if (failed > 0) s += "; first failure " + first_failure;
    return s;
  }
};

Tally Select(const Report& r, const std::function<bool(const std::string&)>& keep) {
  Tally t;
  for (const auto& c : r.checks) {
    if (keep(c.name)) t.add(c);
  }
  return t;
}

bool IsQuadrature(const std::string& name) { return StartsWith(name, "quadrature "); }

bool Line(int k, bool pass, const std::string& title, const std::string& detail) {
  std::cout << "criterion " << k << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << detail << ")\n";
  return pass;
}

std::string Seconds(double s) {
  std::string out = std::to_string(s);
  return out.substr(0, out.find('.') + 3) + " s";
}

bool Criterion1(std::uint64_t seed) {
  const Timed run = Run("constant-terms", seed, 0);
  const Tally t = Select(run.report, [](const std::string& n) {
    return StartsWith(n, "nonsymmetric density") || StartsWith(n, "symmetric density");
  });
  const bool fast = run.seconds < kConstantTermBudget;
  return Line(1, t.ok() && fast, "constant terms equal the closed forms, n = 1..3",
              t.summary() + ", " + Seconds(run.seconds) + (fast ? " < 30 s" : " exceeds 30 s"));
}

bool Criterion2(std::uint64_t seed) {
  const Timed run = Run("constant-terms", seed, 0);
  const Tally t = Select(run.report, [](const std::string& n) { return StartsWith(n, "recurrence"); });
  return Line(2, t.ok(), "residue recurrence for n = 2, 3", t.summary());
}

bool Criterion3(std::uint64_t seed) {
  const Timed run = Run("symmetric-orthogonality", seed, 0);
  const Tally t = Select(run.report, [](const std::string& n) { return !IsQuadrature(n); });
  const bool fast = run.seconds < kSymmetricBudget;
  return Line(3, t.ok() && fast, "<K_lambda,K_mu> = N_lambda delta",
              t.summary() + ", " + Seconds(run.seconds) + (fast ? " < 300 s" : " exceeds 300 s"));
}

bool Criterion4(std::uint64_t seed) {
  const Timed run = Run("triangularity", seed, 0);
  const Tally t = Select(run.report, [](const std::string&) { return true; });
  return Line(4, t.ok(), "K_lambda monic, dominance-supported, (a,b)-independent", t.summary());
}

bool Criterion5(std::uint64_t seed) {
  const Timed run = Run("statistics", seed, 0);
  const Tally t = Select(run.report, [](const std::string&) { return true; });
  return Line(5, t.ok(), "statistic identities", t.summary());
}

bool Criterion6(std::uint64_t seed) {
  const Timed run = Run("hecke", seed, 0);
  const Tally t = Select(run.report, [](const std::string&) { return true; });
  return Line(6, t.ok(), "Hecke relations at n = 3, 4", t.summary());
}

bool Criterion7(std::uint64_t seed) {
  const Timed run = Run("nonsym-orthogonality", seed, 0);
  const Report& r = run.report;
  const Tally tri = Select(r, [](const std::string& n) { return Contains(n, "triangular E"); });
  const Tally words = Select(r, [](const std::string& n) { return StartsWith(n, "word independence"); });
  const Tally recursion = Select(r, [](const std::string& n) { return StartsWith(n, "recursion"); });
  const Tally monomial = Select(r, [](const std::string& n) { return StartsWith(n, "<E"); });
  const Tally norms = Select(r, [](const std::string& n) { return StartsWith(n, "norm "); });
  const Tally full = Select(r, [](const std::string& n) { return StartsWith(n, "full orthogonality"); });
  std::map<std::string, Tally> by_order;
  for (const auto& c : r.checks) {
    if (!StartsWith(c.name, "full orthogonality")) continue;
    const auto open = c.name.find('[');
    by_order[c.name.substr(open + 1, c.name.find(']') - open - 1)].add(c);
  }
  std::cout << "  E triangularity          " << tri.summary() << "\n"
            << "  word independence        " << words.summary() << "\n"
            << "  recursion identity       " << recursion.summary() << "\n"
            << "  <E_lambda,z^mu> = 0      " << monomial.summary() << "\n"
            << "  norms                    " << norms.summary() << "\n";
  for (const auto& [order, t] : by_order) {
    std::cout << "  orthogonality [" << order << "]" << std::string(std::max<int>(1, 10 - order.size()), ' ')
              << t.summary() << "\n";
  }
  const bool pass = tri.ok() && words.ok() && recursion.ok() && monomial.ok() && norms.ok() && full.ok();
  return Line(7, pass, "nonsymmetric theory incl. full pairwise orthogonality", full.summary());
}

bool Criterion8(std::uint64_t seed) {
  const Timed run = Run("application", seed, 0);
  const Tally odd = Select(run.report, [](const std::string& n) { return StartsWith(n, "odd"); });
  const Tally even = Select(run.report, [](const std::string& n) { return StartsWith(n, "even"); });
  return Line(8, odd.ok() && even.ok(), "application integral: zero for odd parts, closed form for even",
              "odd " + odd.summary() + "; even " + even.summary());
}

bool Criterion9(std::uint64_t seed) {
  Tally all;
  for (const char* suite : {"constant-terms", "symmetric-orthogonality", "nonsym-orthogonality", "application"}) {
    const Timed run = Run(suite, seed, kQuadratureGrid);
    for (const auto& c : run.report.checks) {
      if (IsQuadrature(c.name)) all.add(c);
    }
  }
  return Line(9, all.ok(), "exact engine vs 128-point quadrature within 1e-8, n <= 2", all.summary());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::uint64_t seed = 20261018;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<bool(std::uint64_t)>> criteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5, Criterion6, Criterion7, Criterion8, Criterion9};
  bool all = true;
  for (int k = 1; k <= 9; ++k) {
    if (only != 0 && only != k) continue;
    try {
      all = criteria[k - 1](seed) && all;
    } catch (const std::exception& e) {
      all = Line(k, false, "aborted", e.what()) && all;
    }
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
