#include "bohrlab/corpus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

double GeometricTail::at(double r) const {
  if (scale == 0.0) return 0.0;
  const double ar = ratio * r;
  if (ar >= 1.0) return std::numeric_limits<double>::infinity();
  return scale * std::pow(ratio, first_degree - 1) * std::pow(r, first_degree) / (1.0 - ar);
}

namespace {

std::string fmt_a(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", a);
  return buf;
}

CVector along_e1(const SpaceSpec& codomain, Complex v) {
  CVector c(static_cast<std::size_t>(codomain.dim));
  c[0] = v;
  return c;
}

}  // namespace

CorpusMember mobius_axis(Exponent p, int n, const SpaceSpec& codomain, double a, int truncation, int variable) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("Moebius parameter a must lie in [0, 1)");
  if (truncation < 1) throw std::invalid_argument("truncation degree must be >= 1");
  if (variable < 0 || variable >= n) throw std::out_of_range("Moebius variable out of range");
  std::vector<Term> terms;
  terms.push_back({MultiIndex::zero(n), along_e1(codomain, a)});
  const double s = 1.0 - a * a;
  double ak = 1.0;  // a^(k-1)
  for (int k = 1; k <= truncation; ++k) {
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    alpha[static_cast<std::size_t>(variable)] = k;
    terms.push_back({MultiIndex(std::move(alpha)), along_e1(codomain, -s * ak)});
    ak *= a;
  }
  CorpusMember m{"mobius:a=" + fmt_a(a) + (n > 1 ? ":z" + std::to_string(variable + 1) : std::string()),
                 VectorPolynomial(SpaceSpec(p, n), codomain, std::move(terms)),
                 {1.0, 1.0, "exact:moebius"},
                 GeometricTail{s, a, truncation + 1}};
  return m;
}

CorpusMember coordinate_member(Exponent p, int n, const SpaceSpec& codomain) {
  std::vector<Term> terms{{MultiIndex::unit(n, 0), along_e1(codomain, 1.0)}};
  return {"coordinate:z1", VectorPolynomial(SpaceSpec(p, n), codomain, std::move(terms)), {1.0, 1.0, "exact:coordinate"},
          std::nullopt};
}

CorpusMember estimated_member(std::string id, VectorPolynomial P, const Budget& budget, std::uint64_t seed) {
  if (P.is_zero()) throw std::invalid_argument("corpus member " + id + " is the zero function");
  const auto lower = supnorm_refined(P, budget, seed);
  const double upper = supnorm_upper(P);
  if (lower.value > upper * (1.0 + 1e-9)) {
    throw std::logic_error("sup-norm bracket inverted for " + id);
  }
  NormInfo info{lower.value, upper, "ascent"};
  return {std::move(id), std::move(P), std::move(info), std::nullopt};
}

std::vector<double> a_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("invalid a-grid");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double a = std::round((lo + i * step) * 1e12) / 1e12;
    if (a > hi + 1e-12) break;
    out.push_back(a);
  }
  return out;
}

std::vector<CorpusMember> build_corpus(const std::vector<CorpusSpec>& specs, Exponent p, int n,
                                       const SpaceSpec& coefficient_space, const Budget& budget,
                                       std::uint64_t seed) {
  std::vector<CorpusMember> out;
  SpaceSpec X = coefficient_space;
  X.role = SpaceRole::coefficient;
  for (const auto& spec : specs) {
    if (spec.family == "mobius_axis") {
      // every axis, so the arithmetic problem sees a constraint on each r_i
      for (int v = 0; v < n; ++v)
        for (double a : spec.a) out.push_back(mobius_axis(p, n, X, a, spec.truncation, v));
    } else if (spec.family == "coordinate") {
      out.push_back(coordinate_member(p, n, X));
    } else if (spec.family == "random") {
      for (int m : spec.degrees) {
        for (int i = 0; i < spec.count; ++i) {
          const std::string id = "random:" + to_string(spec.ensemble) + ":m=" + std::to_string(m) + ":" + std::to_string(i);
          RandomPolynomialSpec rs{m, n, X.dim, p, X.p, spec.ensemble, spec.density};
          auto P = random_polynomial(rs, derive_seed(seed, id));
          out.push_back(estimated_member(id, std::move(P), budget, derive_seed(seed, id + "/norm")));
        }
      }
    } else if (spec.family == "file") {
      for (auto& [id, P] : read_corpus_file(spec.path)) {
        if (P.n() != n || P.d() != X.dim) {
          throw std::invalid_argument("corpus file member " + id + " does not match n and the coefficient space");
        }
        auto Q = P.with_domain(p);
        out.push_back(estimated_member("file:" + id, std::move(Q), budget, derive_seed(seed, "file/" + id)));
      }
    } else {
      throw std::invalid_argument("unknown corpus family '" + spec.family + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("corpus is empty");
  return out;
}

}  // namespace bohrlab
