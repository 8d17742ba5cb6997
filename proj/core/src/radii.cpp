#include "bohrlab/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohrlab/bounds.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::K: return "K";
    case Quantity::Km: return "K_m";
    case Quantity::A: return "A";
  }
  return "?";
}

FunctionRadius function_bohr_radius(const CorpusMember& f, const OperatorModel& V, double lambda,
                                    const RadiusOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(f.norm.lower > 0.0)) throw std::invalid_argument("member " + f.id + " has zero recorded norm");

  const MajorantForm form(f.polynomial, V);
  const double rhs = lambda * f.norm.lower;
  FunctionRadius out;

  if (form.constant() > rhs) {
    // even r = 0 fails
    out.radius = out.lo = out.hi = 0.0;
    return out;
  }

  MajorantSearch S(form, options.restarts, options.iterations, derive_seed(options.seed, f.id));
  const double s1 = S(1.0);
  if (s1 <= rhs) {
    out.radius = out.lo = out.hi = 1.0;
    out.capped = true;
  } else if (form.homogeneous() && form.degree() > 0) {
    const double r = std::pow(rhs / s1, 1.0 / form.degree());
    out.radius = out.lo = out.hi = std::min(1.0, r);
  } else {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > options.tol) {
      const double mid = 0.5 * (lo + hi);
      if (S(mid) <= rhs) {
        lo = mid;
      } else {
        hi = mid;
      }
      ++out.iterations;
    }
    out.lo = lo;
    out.hi = hi;
    out.radius = hi;
  }
  if (f.tail) out.tail_slack = f.tail->at(out.radius);
  return out;
}

CorpusRadius estimate_K_upper(const std::vector<CorpusMember>& corpus, const OperatorModel& V, double lambda,
                              const RadiusOptions& options) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  CorpusRadius out;
  out.tol = options.tol;
  out.members.reserve(corpus.size());
  bool first = true;
  for (const auto& f : corpus) {
    auto r = function_bohr_radius(f, V, lambda, options);
    if (first || r.radius < out.value) {
      out.value = r.radius;
      out.argmin = f.id;
      out.capped = r.capped;
      first = false;
    }
    out.members.push_back(r);
  }
  return out;
}

KmEstimate estimate_Km_upper(const std::vector<CorpusMember>& corpus, const OperatorModel& V, double lambda,
                             const RadiusOptions& options) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  KmEstimate out;
  double base = 0.0;
  bool first = true;
  for (const auto& f : corpus) {
    const auto& P = f.polynomial;
    if (!P.is_homogeneous() || P.is_zero()) {
      throw std::invalid_argument("K_m corpus member " + f.id + " is not homogeneous");
    }
    const int m = P.degree();
    if (m < 1) throw std::invalid_argument("K_m needs degree >= 1");
    if (out.m == 0) {
      out.m = m;
    } else if (out.m != m) {
      throw std::invalid_argument("K_m corpus mixes degrees");
    }
    const MajorantForm form(P, V);
    MajorantSearch S(form, options.restarts, options.iterations, derive_seed(options.seed, f.id));
    const double s1 = S(1.0);
    if (!(s1 > 0.0)) continue;  // V kills every coefficient: no constraint
    const double ratio = std::pow(f.norm.upper / s1, 1.0 / m);
    if (first || ratio < base) {
      base = ratio;
      out.argmin = f.id;
      first = false;
    }
  }
  if (first) {
    out.raw = std::numeric_limits<double>::infinity();
    out.capped = 1.0;
    return out;
  }
  out.raw = std::pow(lambda, 1.0 / out.m) * base;
  out.capped = std::min(1.0, out.raw);
  return out;
}

SandwichReport sandwich_check(double k_upper, double km_lower, double km_lower_unit, double opnorm,
                              double lambda) {
  SandwichReport r;
  r.k_upper = k_upper;
  r.km_lower = km_lower;
  r.km_lower_unit = km_lower_unit;
  r.lower_main = sandwich_factor(opnorm, lambda) * km_lower;
  r.lower_unit = sandwich_factor_unit(opnorm, lambda) * km_lower_unit;
  r.slack = k_upper - std::max(r.lower_main, r.lower_unit);
  r.passed = r.slack >= -1e-12;
  return r;
}

}  // namespace bohrlab
