#include "koorn/params.h"

#include "koorn/error.h"

namespace koorn {

ParameterPoint ParameterPoint::Symmetric(const Rational& t, const Rational& a, const Rational& b,
                                         const std::array<Rational, 4>& tk) {
  ParameterPoint p;
  p.mode = ParameterMode::kSymmetric;
  p.t = t;
  p.a = a;
  p.b = b;
  p.tk = tk;
  return p;
}

ParameterPoint ParameterPoint::Nonsymmetric(const Rational& t, const Rational& a, const Rational& b,
                                            const Rational& c, const Rational& d) {
  ParameterPoint p;
  p.mode = ParameterMode::kNonsymmetric;
  p.t = t;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.tk = {a, b, c, d};
  return p;
}

namespace {

Rational InvertOrZero(const Rational& x) { return x == 0 ? Rational(0) : Rational(1 / x); }

}  // namespace

ParameterPoint ParameterPoint::inverted() const {
  ParameterPoint p = *this;
  p.t = InvertOrZero(t);
  p.a = InvertOrZero(a);
  p.b = InvertOrZero(b);
  p.c = InvertOrZero(c);
  p.d = InvertOrZero(d);
  for (auto& x : p.tk) x = InvertOrZero(x);
  return p;
}

void ParameterPoint::require_integration_moduli() const {
  auto check = [](const char* name, const Rational& x) {
    if (CompareAbsToOne(x) >= 0) {
      throw InvalidParameters(std::string("parameter ") + name + " = " + x.get_str() +
                              " must have modulus < 1");
    }
  };
  check("t", t);
  if (mode == ParameterMode::kNonsymmetric) {
    check("a", a);
    check("b", b);
    check("c", c);
    check("d", d);
  } else {
    check("t0", tk[0]);
    check("t1", tk[1]);
    check("t2", tk[2]);
    check("t3", tk[3]);
  }
}

void ParameterPoint::set(std::string_view name, const Rational& value) {
  const bool mirror = mode == ParameterMode::kNonsymmetric;
  if (name == "t") {
    t = value;
  } else if (name == "a") {
    a = value;
    if (mirror) tk[0] = value;
  } else if (name == "b") {
    b = value;
    if (mirror) tk[1] = value;
  } else if (name == "c") {
    c = value;
    if (mirror) tk[2] = value;
  } else if (name == "d") {
    d = value;
    if (mirror) tk[3] = value;
  } else if (name.size() == 2 && name[0] == 't' && name[1] >= '0' && name[1] <= '3') {
    if (mirror) throw ParseError("t0..t3 are tied to a..d in nonsymmetric mode");
    tk[name[1] - '0'] = value;
  } else {
    throw ParseError("unknown parameter '" + std::string(name) + "'");
  }
}

std::string ParameterPoint::to_string() const {
  std::string s = "t=" + t.get_str() + ",a=" + a.get_str() + ",b=" + b.get_str();
  if (mode == ParameterMode::kNonsymmetric) {
    s += ",c=" + c.get_str() + ",d=" + d.get_str();
  } else {
    for (int k = 0; k < 4; ++k) s += ",t" + std::to_string(k) + "=" + tk[k].get_str();
  }
  return s;
}

ParameterPoint ParseParameterPoint(std::string_view text, ParameterMode mode) {
  ParameterPoint p;
  p.mode = mode;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value, got '" + std::string(item) + "'");
    p.set(item.substr(0, eq), ParseRational(item.substr(eq + 1)));
    pos = comma + 1;
  }
  return p;
}

}  // namespace koorn
