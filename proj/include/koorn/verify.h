#ifndef KOORN_VERIFY_H_
#define KOORN_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace koorn {

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  int failures() const;
  nlohmann::json to_json() const;
};

// Zero or negative sizes select each suite's default.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int n_max = 0;
  int m_max = 0;
  int points = 0;
  // When positive, every integrand in at most two variables is also
  // integrated on this torus grid and compared with the exact value.
  int quadrature_grid = 0;
  double quadrature_tolerance = 1e-8;
};

const std::vector<std::string>& SuiteNames();

// Throws ParseError for an unknown suite name.
Report RunSuite(const std::string& name, const SuiteOptions& options);

Report ConstantTermsSuite(const SuiteOptions& options);
Report StatisticsSuite(const SuiteOptions& options);
Report TriangularitySuite(const SuiteOptions& options);
Report SymmetricOrthogonalitySuite(const SuiteOptions& options);
Report HeckeSuite(const SuiteOptions& options);
Report NonsymOrthogonalitySuite(const SuiteOptions& options);
Report ApplicationSuite(const SuiteOptions& options);

}  // namespace koorn

#endif  // KOORN_VERIFY_H_
