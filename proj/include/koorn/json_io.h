#ifndef KOORN_JSON_IO_H_
#define KOORN_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "koorn/laurent_poly.h"

namespace koorn {

// {"n": int, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}, terms sorted by
// exponent vector.
nlohmann::json PolyToJson(const LaurentPoly& f);
// Throws ParseError on malformed input.
LaurentPoly PolyFromJson(const nlohmann::json& j);

// One term per line, coefficients right-aligned.
std::string PolyToText(const LaurentPoly& f);

}  // namespace koorn

#endif  // KOORN_JSON_IO_H_
