#include "koorn/json_io.h"

#include <algorithm>
#include <sstream>

#include "koorn/error.h"

namespace koorn {

nlohmann::json PolyToJson(const LaurentPoly& f) {
  const int n = f.num_vars();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exp", std::vector<int>(e.e.begin(), e.e.begin() + n)}, {"coeff", ToFractionString(c)}});
  }
  return {{"n", n}, {"terms", std::move(terms)}};
}

LaurentPoly PolyFromJson(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxVars) throw ParseError("polynomial variable count out of range");
    LaurentPoly f(n);
    for (const auto& term : j.at("terms")) {
      const auto exp = term.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exp.size()) != n) throw ParseError("exponent length differs from n");
      f.add_term(Exponent::FromVector(exp), ParseRational(term.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::string PolyToText(const LaurentPoly& f) {
  if (f.is_zero()) return "0\n";
  const int n = f.num_vars();
  std::vector<std::pair<std::string, std::string>> rows;
  size_t width = 0;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string mono;
    for (int i = 0; i < n; ++i) {
      const int k = it->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (k != 1) mono += "^" + std::to_string(k);
    }
    rows.emplace_back(it->second.get_str(), mono.empty() ? "1" : mono);
    width = std::max(width, rows.back().first.size());
  }
  std::ostringstream out;
  for (const auto& [c, m] : rows) out << std::string(width - c.size(), ' ') << c << "  " << m << "\n";
  return out.str();
}

}  // namespace koorn
