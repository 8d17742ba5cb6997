#include "bohrlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohrlab/multiindex.hpp"

namespace bohrlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_n(double n) { require(n >= 1.0, "n must be >= 1"); }

// 1 - 1/p
double co(Exponent p) { return 1.0 - p.reciprocal(); }

double min2(Exponent p) { return p < Exponent(2.0) ? p.value() : 2.0; }
// 1/max(p, 2)
double inv_max2(Exponent p) { return p < Exponent(2.0) ? 0.5 : p.reciprocal(); }

std::string fmt(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

double prop22_constant(double opnorm, double lambda) {
  require(opnorm > 0.0, "prop22_constant needs a non-null operator");
  require(opnorm < lambda, "prop22_constant needs ||V|| < lambda");
  const double gap = lambda - opnorm;
  const double second = gap / (2.0 * lambda - opnorm);
  const double first = opnorm >= 1.0 ? gap / ((gap + 1.0) * opnorm) : gap / (gap + 1.0);
  return std::max(first, second);
}

double lower_bound_general(Exponent p, double n, double lambda, double opnorm) {
  check_n(n);
  return prop22_constant(opnorm, lambda) * std::pow(n, -co(p));
}

double corollary_identity_lower(Exponent p, double n, double lambda) {
  check_n(n);
  require(lambda > 1.0, "corollary needs lambda > 1");
  return (lambda - 1.0) / lambda * std::pow(n, -co(p));
}

Exponent cotype_dual(Exponent q) {
  require(Exponent(2.0) <= q, "cotype exponent must be >= 2");
  return q.dual();
}

bool cotype_lower_needs_constant(Exponent p, Exponent q) {
  return cotype_dual(q) < p;
}

double cotype_bounds(Exponent p, double n, double lambda, Exponent q, double cotype_constant, Direction dir) {
  check_n(n);
  const Exponent r = cotype_dual(q);
  if (dir == Direction::upper) {
    require(lambda >= 1.0, "lambda must be >= 1");
    // Cot(X) = q here
    if (p <= q) return lambda * std::pow(n, -co(p));
    return lambda * std::pow(n, -co(q));
  }
  require(lambda > 1.0, "cotype lower bound needs lambda > 1");
  const double base = (lambda - 1.0) / (lambda * std::numbers::e);
  if (p <= r) return base;
  require(cotype_constant >= 1.0, "cotype constant must be >= 1");
  return base / cotype_constant * std::pow(n, -(r.reciprocal() - p.reciprocal()));
}

double cotype_operator_lower(Exponent p, double n, double lambda, double opnorm, Exponent q,
                             double cotype_constant) {
  require(opnorm > 0.0 && opnorm < lambda, "operator cotype bound needs 0 < ||V|| < lambda");
  // K(X, lambda/||V||) with (mu-1)/mu = (lambda-||V||)/lambda
  return cotype_bounds(p, n, lambda / opnorm, q, cotype_constant, Direction::lower);
}

double arithmetic_cotype_bounds(Exponent p, double n, double lambda, Exponent q, double cotype_constant,
                                Direction dir) {
  check_n(n);
  const Exponent r = cotype_dual(q);
  if (dir == Direction::upper) {
    if (p <= q) return lambda / n;
    return lambda * std::pow(n, -(co(q) + p.reciprocal()));
  }
  require(lambda > 1.0, "cotype lower bound needs lambda > 1");
  const double base = (lambda - 1.0) / (lambda * std::numbers::e);
  if (p <= r) return base * std::pow(n, -p.reciprocal());
  require(cotype_constant >= 1.0, "cotype constant must be >= 1");
  return base / cotype_constant * std::pow(n, -r.reciprocal());
}

double rho_exponent(Exponent q, Exponent r, int m) {
  require(Exponent(2.0) <= q && !q.is_infinite(), "rho_exponent needs 2 <= q < inf");
  require(r <= q, "rho_exponent needs r <= q");
  require(m >= 1, "rho_exponent needs m >= 1");
  const double qv = q.value();
  const double rv = r.value();
  return qv * rv * m / (qv + (m - 1) * rv);
}

EnvelopeKind parse_envelope_kind(const std::string& name) {
  if (name == "main_lower") return EnvelopeKind::main_lower;
  if (name == "main_upper") return EnvelopeKind::main_upper;
  if (name == "arithmetic_lower") return EnvelopeKind::arithmetic_lower;
  if (name == "arithmetic_upper") return EnvelopeKind::arithmetic_upper;
  if (name == "concave_operator_lower") return EnvelopeKind::concave_operator_lower;
  if (name == "operator_theorem12") return EnvelopeKind::operator_theorem12;
  throw std::invalid_argument("unknown envelope kind '" + name + "'");
}

std::string to_string(EnvelopeKind kind) {
  switch (kind) {
    case EnvelopeKind::main_lower: return "main_lower";
    case EnvelopeKind::main_upper: return "main_upper";
    case EnvelopeKind::arithmetic_lower: return "arithmetic_lower";
    case EnvelopeKind::arithmetic_upper: return "arithmetic_upper";
    case EnvelopeKind::concave_operator_lower: return "concave_operator_lower";
    case EnvelopeKind::operator_theorem12: return "operator_theorem12";
  }
  return "?";
}

double envelope(Exponent p, double n, double lambda, EnvelopeKind kind, const EnvelopeParams& params) {
  require(n >= 2.0, "envelopes need n >= 2");
  require(params.C >= 0.0 && params.B >= 0.0, "envelope constants must be nonnegative");
  const double L = std::log(n);
  const double ratio = L / n;
  const double e_main = 1.0 - 1.0 / min2(p);
  const double e_q = 1.0 - inv_max2(params.q);  // 1 - 1/max(2,q)
  switch (kind) {
    case EnvelopeKind::main_lower:
      require(lambda > 1.0, "main envelope needs lambda > 1");
      return params.C * (lambda - 1.0) / (2.0 * lambda - 1.0) * std::pow(ratio, e_main);
    case EnvelopeKind::main_upper:
      return params.B * lambda * lambda * std::pow(ratio, e_main);
    case EnvelopeKind::arithmetic_lower:
      return params.C * std::pow(n, -p.reciprocal()) * std::pow(ratio, e_q);
    case EnvelopeKind::arithmetic_upper:
      return params.B * std::pow(L, e_main) / std::pow(n, 0.5 + inv_max2(p));
    case EnvelopeKind::concave_operator_lower: {
      require(params.opnorm < lambda, "concave operator envelope needs ||V|| < lambda");
      return params.C * (lambda - params.opnorm) / (2.0 * lambda - params.opnorm) *
             std::pow(ratio, 1.0 - params.q.reciprocal());
    }
    case EnvelopeKind::operator_theorem12:
      return params.C * std::pow(ratio, e_q);
  }
  return 0.0;
}

std::string embedding_branch(Exponent p, Exponent r) {
  if (r < Exponent(2.0)) return "1<=r<2";
  return p <= r ? "p<=r,r>=2" : "r<p,r>=2";
}

double embedding_bounds(Exponent p, Exponent r, Exponent q, double n, double lambda, Direction dir,
                        RadiusKind kind) {
  require(!q.is_infinite() && r < q, "embedding bounds need 1 <= r < q < inf");
  require(lambda >= 1.0, "lambda must be >= 1");
  check_n(n);
  const double L = std::log(n);
  const bool small_r = r < Exponent(2.0);
  if (small_r) require(n >= 2.0, "the 1 <= r < 2 branch needs n >= 2");
  const double ir = r.reciprocal();
  const double ip = p.reciprocal();
  if (kind == RadiusKind::K) {
    if (dir == Direction::upper) {
      if (small_r) return std::pow(L / n, 1.0 - 1.0 / min2(p));
      return p <= r ? std::pow(n, -(1.0 - ip)) : std::pow(n, -(1.0 - ir));
    }
    if (small_r) return std::sqrt(L / n);
    return p <= r ? 1.0 / std::numbers::e : std::pow(n, -(1.0 - ir - ip));
  }
  if (dir == Direction::upper) {
    if (small_r) return std::pow(L, 1.0 - 1.0 / min2(p)) / std::pow(n, 0.5 + inv_max2(p));
    return p <= r ? 1.0 / n : std::pow(n, -(1.0 - ir + ip));
  }
  // As displayed; weaker than K/n^(1/p) applied to the K branch, still valid.
  if (small_r) return std::sqrt(L) / std::pow(n, 1.0 + ip);
  return p <= r ? 1.0 / (std::numbers::e * std::pow(n, ip)) : std::pow(n, -(1.0 - ir));
}

double bombieri_closed_form(double lambda) {
  require(lambda >= 1.0 && lambda <= std::numbers::sqrt2 * (1.0 + 1e-15),
          "closed form holds for 1 <= lambda <= sqrt 2");
  const double s = std::max(0.0, 2.0 * (lambda * lambda - 1.0));
  return 1.0 / (3.0 * lambda - 2.0 * std::sqrt(s));
}

double sandwich_factor(double opnorm, double lambda) {
  require(opnorm >= 0.0 && opnorm < lambda, "sandwich needs ||V|| < lambda");
  return (lambda - opnorm) / (2.0 * lambda - opnorm);
}

double sandwich_factor_unit(double opnorm, double lambda) {
  require(opnorm >= 0.0 && opnorm < lambda, "sandwich needs ||V|| < lambda");
  return (lambda - opnorm) / (lambda - opnorm + 1.0);
}

double km_lower_cauchy_degree(int n, int m, double lambda, double opnorm) {
  require(n >= 1 && m >= 1, "km_lower_cauchy needs n, m >= 1");
  require(opnorm > 0.0 && lambda > 0.0, "km_lower_cauchy needs positive lambda and ||V||");
  // card Lambda(m, n) = C(n+m-1, m), in floating point (only a ratio is needed)
  const double logcard = std::lgamma(n + m) - std::lgamma(m + 1.0) - std::lgamma(n);
  return std::min(1.0, std::exp((std::log(lambda / opnorm) - logcard) / m));
}

double km_lower_cauchy(int n, double lambda, double opnorm, int max_m) {
  require(max_m >= 1, "km_lower_cauchy needs max_m >= 1");
  double best = 1.0;
  for (int m = 1; m <= max_m; ++m) best = std::min(best, km_lower_cauchy_degree(n, m, lambda, opnorm));
  return best;
}

double arithmetic_from_k(double k, Exponent p, double n) {
  check_n(n);
  return k * std::pow(n, -p.reciprocal());
}

namespace {

struct CotypeInfo {
  Exponent q{2.0};
  std::optional<double> constant;
};

std::optional<CotypeInfo> cotype_of(const SpaceSpec& s, const std::optional<double>& configured) {
  const Exponent cot = s.cotype();
  if (cot.is_infinite()) return std::nullopt;
  CotypeInfo info{cot, configured};
  if (!info.constant) info.constant = geometry_constants(s).cotype_constant;
  return info;
}

}  // namespace

std::vector<BoundValue> k_lower_bounds(const BoundContext& ctx) {
  std::vector<BoundValue> out;
  const double n = ctx.n;
  if (ctx.opnorm > 0.0 && ctx.opnorm < ctx.lambda) {
    out.push_back({"general_lower", Direction::lower, lower_bound_general(ctx.p, n, ctx.lambda, ctx.opnorm),
                   "B=" + fmt(prop22_constant(ctx.opnorm, ctx.lambda)) + ";opnorm=" + fmt(ctx.opnorm)});
  }
  if (ctx.identity && ctx.lambda > 1.0) {
    out.push_back({"identity_corollary", Direction::lower, corollary_identity_lower(ctx.p, n, ctx.lambda), ""});
  }
  auto add_cotype = [&](const SpaceSpec& space, const std::optional<double>& configured, const char* side) {
    const auto info = cotype_of(space, configured);
    if (!info) return;
    const bool needs = cotype_lower_needs_constant(ctx.p, info->q);
    if (needs && !info->constant) return;
    const double c = needs ? *info->constant : 1.0;
    std::string used = std::string(side) + "=" + space.label() + ";q=" + info->q.to_string();
    if (needs) used += ";C_q=" + fmt(c);
    if (ctx.identity) {
      if (!(ctx.lambda > 1.0)) return;
      out.push_back({"cotype_lower", Direction::lower, cotype_bounds(ctx.p, n, ctx.lambda, info->q, c, Direction::lower),
                     used});
    } else {
      if (!(ctx.opnorm > 0.0 && ctx.opnorm < ctx.lambda)) return;
      out.push_back({std::string("cotype_operator_lower_") + side, Direction::lower,
                     cotype_operator_lower(ctx.p, n, ctx.lambda, ctx.opnorm, info->q, c), used + ";opnorm=" + fmt(ctx.opnorm)});
    }
  };
  add_cotype(ctx.source, ctx.source_cotype_constant, "X");
  if (!ctx.identity) add_cotype(ctx.target, ctx.target_cotype_constant, "Y");
  return out;
}

std::vector<BoundValue> formula_table(const BoundContext& ctx) {
  std::vector<BoundValue> out = k_lower_bounds(ctx);
  const double n = ctx.n;
  const Exponent q = ctx.identity ? ctx.source.cotype() : ctx.target.cotype();
  if (!q.is_infinite()) {
    out.push_back({"cotype_upper", Direction::upper, cotype_bounds(ctx.p, n, ctx.lambda, q, 1.0, Direction::upper),
                   "Cot=" + q.to_string() + ";infinite-dimensional X"});
    if (ctx.lambda > 1.0) {
      const auto c = geometry_constants(ctx.identity ? ctx.source : ctx.target).cotype_constant;
      const bool needs = cotype_lower_needs_constant(ctx.p, q);
      if (!needs || c) {
        out.push_back({"arithmetic_cotype_lower", Direction::lower,
                       arithmetic_cotype_bounds(ctx.p, n, ctx.lambda, q, c.value_or(1.0), Direction::lower),
                       "q=" + q.to_string() + (needs ? ";C_q=" + fmt(*c) : "")});
      }
      out.push_back({"arithmetic_cotype_upper", Direction::upper,
                     arithmetic_cotype_bounds(ctx.p, n, ctx.lambda, q, 1.0, Direction::upper),
                     "Cot=" + q.to_string() + ";infinite-dimensional X"});
    }
  }
  if (ctx.opnorm > 0.0 && ctx.opnorm < ctx.lambda) {
    out.push_back({"arithmetic_general_lower", Direction::lower, prop22_constant(ctx.opnorm, ctx.lambda) / n,
                   "B=" + fmt(prop22_constant(ctx.opnorm, ctx.lambda))});
  }
  if (ctx.n >= 2) {
    EnvelopeParams ep;
    ep.q = ctx.target.p.is_infinite() ? Exponent(2.0) : ctx.target.p;
    ep.opnorm = ctx.opnorm;
    const std::string knobs = "C=1;B=1(abstract)";
    if (ctx.lambda > 1.0) {
      out.push_back({"main_lower", Direction::lower, envelope(ctx.p, n, ctx.lambda, EnvelopeKind::main_lower, ep), knobs});
    }
    out.push_back({"main_upper", Direction::upper, envelope(ctx.p, n, ctx.lambda, EnvelopeKind::main_upper, ep), knobs});
    out.push_back({"arithmetic_lower", Direction::lower,
                   envelope(ctx.p, n, ctx.lambda, EnvelopeKind::arithmetic_lower, ep), knobs + ";q=" + ep.q.to_string()});
    out.push_back({"arithmetic_upper", Direction::upper,
                   envelope(ctx.p, n, ctx.lambda, EnvelopeKind::arithmetic_upper, ep), knobs});
    out.push_back({"operator_theorem12", Direction::lower,
                   envelope(ctx.p, n, ctx.lambda, EnvelopeKind::operator_theorem12, ep), knobs + ";q=" + ep.q.to_string()});
    if (ctx.opnorm < ctx.lambda && Exponent(2.0) <= ep.q) {
      out.push_back({"concave_operator_lower", Direction::lower,
                     envelope(ctx.p, n, ctx.lambda, EnvelopeKind::concave_operator_lower, ep),
                     knobs + ";q=" + ep.q.to_string()});
    }
    const Exponent r = ctx.source.p;
    const Exponent tq = ctx.target.p;
    if (!ctx.identity && !tq.is_infinite() && r < tq) {
      const std::string br = "branch=" + embedding_branch(ctx.p, r) + ";constants abstract";
      for (auto kind : {RadiusKind::K, RadiusKind::A}) {
        const std::string name = kind == RadiusKind::K ? "embedding_K" : "embedding_A";
        for (auto dir : {Direction::lower, Direction::upper}) {
          out.push_back({name, dir, embedding_bounds(ctx.p, r, tq, n, ctx.lambda, dir, kind), br});
        }
      }
    }
  }
  return out;
}

}  // namespace bohrlab
