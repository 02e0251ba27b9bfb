#include "koorn/verify.h"

#include <cmath>
#include <sstream>

#include "koorn/ct_engine.h"
#include "koorn/error.h"
#include "koorn/nonsymmetric.h"
#include "koorn/sampling.h"
#include "koorn/signed_perm.h"
#include "koorn/symmetric.h"

namespace koorn {

bool Report::all_pass() const { return failures() == 0; }

int Report::failures() const {
  int k = 0;
  for (const auto& c : checks) k += c.pass ? 0 : 1;
  return k;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["checked"] = checks.size();
  nlohmann::json list = nlohmann::json::array();
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    if (!c.pass) failed.push_back(c.name);
  }
  j["checks"] = std::move(list);
  j["failures"] = std::move(failed);
  return j;
}

namespace {

int Or(int value, int fallback) { return value > 0 ? value : fallback; }

std::string Str(const Composition& c) { return c.to_string(); }

std::string DoubleStr(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

// Collects the checks of one parameter point so that they can be discarded
// if the point turns out to be non-generic.
class Recorder {
 public:
  Recorder(const SuiteOptions& options, std::string suffix) : options_(options), suffix_(std::move(suffix)) {}

  void Exact(const std::string& name, const Rational& lhs, const Rational& rhs) {
    checks_.push_back({name + suffix_, lhs == rhs, ToFractionString(lhs), ToFractionString(rhs)});
  }

  void Flag(const std::string& name, bool pass, std::string lhs = "", std::string rhs = "") {
    checks_.push_back({name + suffix_, pass, std::move(lhs), std::move(rhs)});
  }

  // Records the quadrature cross-check for small integrands when enabled.
  void Quadrature(const std::string& name, const FactoredIntegrand& integrand, const Rational& exact) {
    if (options_.quadrature_grid <= 0 || integrand.num_vars() > 2) return;
    const std::complex<double> q = CtQuadrature(integrand, options_.quadrature_grid);
    const double err = std::abs(q - std::complex<double>(exact.get_d(), 0));
    checks_.push_back({"quadrature " + name + suffix_, err < options_.quadrature_tolerance, DoubleStr(exact.get_d()),
                       DoubleStr(q.real()) + (q.imag() < 0 ? "" : "+") + DoubleStr(q.imag()) + "i"});
  }

  std::vector<Check>& checks() { return checks_; }

 private:
  const SuiteOptions& options_;
  std::string suffix_;
  std::vector<Check> checks_;
};

constexpr int kMaxRedraws = 50;

// Runs body at a freshly drawn point, redrawing while the point is
// non-generic for the computations body performs.
template <class Draw, class Body>
void AtGenericPoint(Report& report, const SuiteOptions& options, int index, Draw draw, Body body) {
  for (int attempt = 0;; ++attempt) {
    auto point = draw();
    Recorder rec(options, " #" + std::to_string(index));
    try {
      body(point, rec);
    } catch (const NonGenericParameters&) {
      if (attempt >= kMaxRedraws) throw;
      continue;
    }
    report.checks.insert(report.checks.end(), rec.checks().begin(), rec.checks().end());
    return;
  }
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {"triangularity", "symmetric-orthogonality", "constant-terms",
                                                 "statistics",    "hecke",                   "nonsym-orthogonality",
                                                 "application"};
  return names;
}

Report RunSuite(const std::string& name, const SuiteOptions& options) {
  if (name == "triangularity") return TriangularitySuite(options);
  if (name == "symmetric-orthogonality") return SymmetricOrthogonalitySuite(options);
  if (name == "constant-terms") return ConstantTermsSuite(options);
  if (name == "statistics") return StatisticsSuite(options);
  if (name == "hecke") return HeckeSuite(options);
  if (name == "nonsym-orthogonality") return NonsymOrthogonalitySuite(options);
  if (name == "application") return ApplicationSuite(options);
  throw ParseError("unknown suite '" + name + "'");
}

Report ConstantTermsSuite(const SuiteOptions& options) {
  Report report{"constant-terms", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = Or(options.n_max, 3);
  const int points = Or(options.points, 5);
  for (int k = 0; k < points; ++k) {
    AtGenericPoint(
        report, options, k, [&] { return std::make_pair(sampler.Nonsymmetric(), sampler.Symmetric()); },
        [&](const auto& pts, Recorder& rec) {
          const auto& [p, ps] = pts;
          for (int n = 1; n <= n_max; ++n) {
            const std::string tag = " n=" + std::to_string(n);
            const FactoredIntegrand dn = BuildDensity(DensityKind::kNonsymmetric, n, p);
            const Rational ctn = ConstantTerm(dn);
            rec.Exact("nonsymmetric density" + tag, ctn, NonsymmetricCtClosedForm(n, p));
            rec.Quadrature("nonsymmetric density" + tag, dn, ctn);
            const FactoredIntegrand ds = BuildDensity(DensityKind::kSymmetric, n, ps);
            const Rational cts = ConstantTerm(ds);
            rec.Exact("symmetric density" + tag, cts, SymmetricCtClosedForm(n, ps));
            rec.Quadrature("symmetric density" + tag, ds, cts);
            if (n >= 2) rec.Exact("recurrence" + tag, ctn, NonsymmetricCtRecurrence(n, p));
            if (n == 2) {
              const int reversed[] = {1, 0};
              rec.Exact("elimination order nonsymmetric" + tag, ConstantTerm(dn, reversed), ctn);
              rec.Exact("elimination order symmetric" + tag, ConstantTerm(ds, reversed), cts);
            }
          }
        });
  }
  return report;
}

Report StatisticsSuite(const SuiteOptions& options) {
  Report report{"statistics", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int m_max = Or(options.m_max, 5);
  const int points = Or(options.points, 5);
  for (int k = 0; k < points; ++k) {
    Recorder rec(options, " #" + std::to_string(k));
    const Rational t = sampler.DrawValue();
    const Rational ab = sampler.DrawValue() * sampler.DrawValue();
    Rational e4 = 1;
    for (int i = 0; i < 4; ++i) e4 *= sampler.DrawValue();
    for (int m = 1; m <= m_max; ++m) {
      rec.Exact("stat1 m=" + std::to_string(m), InversionGeneratingSum(m, t), QFactorial(m, t));
    }
    for (int m = 1; m <= std::min(m_max, 4); ++m) {
      for (int m0 = 0; m0 <= 2; ++m0) {
        rec.Exact("stat2 m=" + std::to_string(m) + " m0=" + std::to_string(m0), OnesBlockSum(m, m0, t, e4),
                  OnesBlockProduct(m, m0, t, e4));
      }
      rec.Exact("stat3 m=" + std::to_string(m), ZerosBlockSum(m, t, ab), ZerosBlockProduct(m, t, ab));
    }
    // The full leading coefficient over P_{lambda,n} against v_lambda.
    const ParameterPoint ps = sampler.Symmetric();
    for (int n = 1; n <= 3; ++n) {
      for (const auto& lambda : PartitionsInBox(n, 3)) {
        rec.Exact("leading coefficient " + Str(lambda), LeadingCoefficientSum(lambda, n, ps.t, ps.a * ps.b, ps.tk_product()),
                  VLambda(lambda, n, ps));
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : PartitionsInBox(n, 3)) {
      long expect = 1L << (lambda.multiplicity(0) + lambda.multiplicity(1));
      for (int i = 0; i <= 3; ++i) {
        for (int j = 2; j <= lambda.multiplicity(i); ++j) expect *= j;
      }
      const long size = static_cast<long>(SpecialSubsetP(lambda, n).size());
      report.checks.push_back({"|P| " + Str(lambda), size == expect, std::to_string(size), std::to_string(expect)});
    }
  }
  return report;
}

Report TriangularitySuite(const SuiteOptions& options) {
  Report report{"triangularity", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = Or(options.n_max, 3);
  const int weight = Or(options.m_max, 5);
  const int points = Or(options.points, 1);
  for (int k = 0; k < points; ++k) {
    AtGenericPoint(
        report, options, k,
        [&] {
          ParameterPoint p = sampler.Symmetric();
          ParameterPoint q = p;
          q.a = sampler.DrawValue();
          q.b = sampler.DrawValue();
          return std::make_pair(p, q);
        },
        [&](const auto& pts, Recorder& rec) {
          const auto& [p, q] = pts;
          for (int n = 1; n <= n_max; ++n) {
            for (const auto& lambda : PartitionsUpToWeight(n, weight)) {
              const std::string tag = " K" + Str(lambda);
              const LaurentPoly kp = KPoly(lambda, n, p);
              const bool invariant = IsBnInvariant(kp);
              rec.Flag("invariant" + tag, invariant);
              if (!invariant) continue;
              const auto coeffs = DecomposeMonomialBasis(kp);
              auto lead = coeffs.find(lambda);
              rec.Exact("monic" + tag, lead == coeffs.end() ? Rational(0) : lead->second, 1);
              std::string outside;
              for (const auto& [mu, c] : coeffs) {
                if (!DominanceLeq(mu, lambda)) outside += Str(mu) + " ";
              }
              rec.Flag("dominance support" + tag, outside.empty(), outside, "");
              rec.Flag("independent of (a,b)" + tag, KPoly(lambda, n, q) == kp);
            }
          }
        });
  }
  return report;
}

Report SymmetricOrthogonalitySuite(const SuiteOptions& options) {
  Report report{"symmetric-orthogonality", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = Or(options.n_max, 3);
  const int points = Or(options.points, 3);
  for (int k = 0; k < points; ++k) {
    AtGenericPoint(
        report, options, k, [&] { return sampler.Symmetric(); },
        [&](const ParameterPoint& p, Recorder& rec) {
          auto pairs = [&](int n, const std::vector<Partition>& set) {
            std::vector<LaurentPoly> ks;
            for (const auto& l : set) ks.push_back(KPoly(l, n, p));
            for (size_t i = 0; i < set.size(); ++i) {
              for (size_t j = i; j < set.size(); ++j) {
                const std::string name = "<K" + Str(set[i]) + ",K" + Str(set[j]) + ">";
                const FactoredIntegrand integrand = SymmetricIntegrand(ks[i], ks[j], p);
                const Rational value = ConstantTerm(integrand);
                rec.Exact(name, value, i == j ? NormN(set[i], n, p) : Rational(0));
                rec.Quadrature(name, integrand, value);
              }
            }
          };
          if (n_max >= 2) pairs(2, PartitionsInBox(2, 3));
          if (n_max >= 3) pairs(3, {Partition{0, 0, 0}, Partition{1, 0, 0}, Partition{1, 1, 0}, Partition{2, 0, 0}});
          if (n_max == 1) pairs(1, PartitionsInBox(1, 3));
        });
  }
  return report;
}

Report HeckeSuite(const SuiteOptions& options) {
  Report report{"hecke", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = std::max(Or(options.n_max, 4), 2);
  const int trials = Or(options.points, 20);
  const ParameterPoint p = sampler.Nonsymmetric();
  for (int n = std::min(3, n_max); n <= n_max; ++n) {
    for (int k = 0; k < trials; ++k) {
      const LaurentPoly f = sampler.RandomPoly(n, 6, 2);
      for (const auto& r : VerifyHeckeRelations(f, p)) {
        report.checks.push_back({r.name + " n=" + std::to_string(n) + " #" + std::to_string(k), r.holds,
                                 r.holds ? "0" : "nonzero", "0"});
      }
    }
  }
  return report;
}

namespace {

const char* OrderClass(const Composition& lambda, const Composition& mu) {
  if (Precedes(mu, lambda)) return "mu<lambda";
  if (Precedes(lambda, mu)) return "lambda<mu";
  return "incomparable";
}

bool TriangularInPrecOrder(const LaurentPoly& e, const Composition& mu, std::string& offenders) {
  const Exponent top = Exponent::FromVector(mu.parts());
  bool ok = e.coefficient(top) == 1;
  for (const auto& [x, c] : e.terms()) {
    if (x == top) continue;
    const Composition nu(std::vector<int>(x.e.begin(), x.e.begin() + mu.size()));
    if (!Precedes(nu, mu)) {
      ok = false;
      offenders += Str(nu) + " ";
    }
  }
  return ok;
}

}  // namespace

Report NonsymOrthogonalitySuite(const SuiteOptions& options) {
  Report report{"nonsym-orthogonality", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = Or(options.n_max, 3);
  const int points = Or(options.points, 1);
  for (int k = 0; k < points; ++k) {
    AtGenericPoint(
        report, options, k, [&] { return sampler.Nonsymmetric(); },
        [&](const ParameterPoint& p, Recorder& rec) {
          const ParameterPoint pi = p.inverted();
          // Triangularity of E_mu and word independence of the recursion.
          for (int n = 1; n <= n_max; ++n) {
            for (const auto& mu : CompositionsInBox(n, -2, 2)) {
              const LaurentPoly e = EComposition(mu, p);
              std::string offenders;
              const bool tri = TriangularInPrecOrder(e, mu, offenders);
              rec.Flag(std::string(mu.is_partition() ? "E-partition" : "E-composition") + " triangular E" + Str(mu),
                       tri, offenders, "");
              if (n < 2 || mu.is_partition()) continue;
              const auto alt = AlternateWord(mu);
              rec.Flag("word independence alternate E" + Str(mu), EComposition(mu, p, alt) == e);
              std::vector<int> detour = CanonicalWord(mu);
              const Composition start = mu.dominant();
              for (int i = 1; i <= n; ++i) {
                const bool move = i < n ? start[i - 1] != start[i] : start[n - 1] != 0;
                if (move) {
                  detour.insert(detour.begin(), {i, i});
                  break;
                }
              }
              rec.Flag("word independence detour E" + Str(mu), EComposition(mu, p, detour) == e);
            }
          }
          // T_i E_mu = p_i E_mu + q_i E_{s_i mu} with both sides built independently.
          for (const auto& mu : CompositionsInBox(2, -2, 2)) {
            const LaurentPoly e = EComposition(mu, p);
            for (int i = 1; i <= 2; ++i) {
              const auto [pc, qc] = PQCoefficients(mu, i, p);
              LaurentPoly rhs = e * pc;
              if (qc != 0) rhs += EComposition(mu.reflect(i), p) * qc;
              rec.Flag("recursion T" + std::to_string(i) + " E" + Str(mu), HeckeT(i, e, p) == rhs);
            }
          }
          // <E_lambda, z^mu>_0 = 0 for mu preceding a partition lambda.
          for (int n = 1; n <= std::min(n_max, 2); ++n) {
            for (const auto& lambda : PartitionsInBox(n, 3)) {
              const LaurentPoly e = EPartition(lambda, n, p);
              for (const auto& mu : CompositionsInBox(n, -3, 3)) {
                if (!Precedes(mu, lambda)) continue;
                const FactoredIntegrand integrand =
                    InnerProduct0Integrand(e, LaurentPoly::Monomial(n, Exponent::FromVector(mu.parts())), p);
                const Rational v = ConstantTerm(integrand);
                const std::string name = "<E" + Str(lambda) + ",z^" + Str(mu) + ">";
                rec.Exact(name, v, 0);
                rec.Quadrature(name, integrand, v);
              }
            }
          }
          // Norms.
          for (int n = 1; n <= n_max; ++n) {
            for (const auto& lambda : PartitionsInBox(n, 2)) {
              const LaurentPoly e = EPartition(lambda, n, p);
              const Rational closed = NonsymmetricNormClosedForm(lambda, n, p);
              const FactoredIntegrand self = InnerProduct0Integrand(e, EPartition(lambda, n, pi), p);
              const Rational vs = ConstantTerm(self);
              rec.Exact("norm <E" + Str(lambda) + ",E" + Str(lambda) + ">", vs, closed);
              rec.Quadrature("norm <E" + Str(lambda) + ",E" + Str(lambda) + ">", self, vs);
              const Rational vm =
                  ConstantTerm(InnerProduct0Integrand(e, LaurentPoly::Monomial(n, Exponent::FromVector(lambda.parts())), p));
              rec.Exact("norm <E" + Str(lambda) + ",z^" + Str(lambda) + ">", vm, closed);
            }
          }
          // Pairwise orthogonality over compositions with entries in {-1,..,2}.
          if (n_max >= 2) {
            const auto comps = CompositionsInBox(2, -1, 2);
            std::vector<LaurentPoly> es, eis;
            for (const auto& c : comps) {
              es.push_back(EComposition(c, p));
              eis.push_back(EComposition(c, pi));
            }
            for (size_t i = 0; i < comps.size(); ++i) {
              for (size_t j = 0; j < comps.size(); ++j) {
                if (i == j) continue;
                const FactoredIntegrand integrand = InnerProduct0Integrand(es[i], eis[j], p);
                const Rational v = ConstantTerm(integrand);
                const std::string name = "full orthogonality <E" + Str(comps[i]) + ",E" + Str(comps[j]) + "> [" +
                                         OrderClass(comps[i], comps[j]) + "]";
                rec.Exact(name, v, 0);
                rec.Quadrature(name, integrand, v);
              }
            }
          }
        });
  }
  return report;
}

Report ApplicationSuite(const SuiteOptions& options) {
  Report report{"application", options.seed, {}};
  ParameterSampler sampler(options.seed);
  const int n_max = Or(options.n_max, 2);
  const int points = Or(options.points, 3);
  const int weight = Or(options.m_max, 4);
  for (int k = 0; k < points; ++k) {
    AtGenericPoint(
        report, options, k, [&] { return sampler.Application(); },
        [&](const ApplicationPoint& ap, Recorder& rec) {
          for (int n = 1; n <= n_max; ++n) {
            for (const auto& lambda : PartitionsUpToWeight(n, weight)) {
              const std::string name = std::string(lambda.is_even() ? "even" : "odd") + " lambda=" + Str(lambda);
              const FactoredIntegrand integrand = ApplicationIntegrand(lambda, n, ap);
              const Rational v = ConstantTerm(integrand);
              rec.Exact(name, v, ApplicationClosedForm(lambda, n, ap));
              rec.Quadrature(name, integrand, v);
            }
          }
        });
  }
  return report;
}

}  // namespace koorn
