#include "bohrlab/norm_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

CVector norming_functional(std::span<const Complex> y, Exponent q) {
  CVector phi(y.size());
  const double norm = lp_norm(y, q);
  if (norm == 0.0) return phi;
  if (q.is_infinite()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
      if (std::abs(y[i]) > std::abs(y[best])) best = i;
    }
    phi[best] = std::conj(y[best]) / std::abs(y[best]);
    return phi;
  }
  const double qv = q.value();
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a == 0.0) continue;
    phi[i] = std::conj(y[i]) / a * std::pow(a / norm, qv - 1.0);
  }
  return phi;
}

CVector holder_maximizer(std::span<const Complex> a, Exponent p) {
  CVector x(a.size());
  const Exponent pd = p.dual();
  const double norm = lp_norm(a, pd);
  if (norm == 0.0) {
    if (!x.empty()) x[0] = 1.0;
    return x;
  }
  if (p.is_infinite()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double m = std::abs(a[i]);
      x[i] = m == 0.0 ? Complex(1.0) : std::conj(a[i]) / m;
    }
    return x;
  }
  if (p.value() == 1.0) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (std::abs(a[i]) > std::abs(a[best])) best = i;
    }
    x[best] = std::conj(a[best]) / std::abs(a[best]);
    return x;
  }
  const double pdv = pd.value();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double m = std::abs(a[i]);
    if (m == 0.0) continue;
    x[i] = std::conj(a[i]) / m * std::pow(m / norm, pdv - 1.0);
  }
  return x;
}

void project_to_sphere(CVector& z, Exponent p) {
  if (p.is_infinite()) {
    for (auto& v : z) {
      const double m = std::abs(v);
      v = m == 0.0 ? Complex(1.0) : v / m;
    }
    return;
  }
  const double norm = lp_norm(z, p);
  if (norm == 0.0) {
    if (!z.empty()) z[0] = 1.0;
    return;
  }
  for (auto& v : z) v /= norm;
}

namespace {

double value_at(const VectorPolynomial& P, std::span<const Complex> z) {
  return lp_norm(P.evaluate(z), P.codomain().p);
}

// Projected ascent on ||P(z)|| from one start. The step direction is the
// gradient of Re phi(P(z)) with phi norming at the current point; a step is
// only taken if it strictly increases the objective.
SupnormResult ascend(const VectorPolynomial& P, CVector z, int iterations) {
  const Exponent p = P.domain().p;
  const Exponent q = P.codomain().p;
  project_to_sphere(z, p);
  std::vector<CVector> grad;
  double f = lp_norm(P.evaluate(z, grad), q);
  double step = 1.0;
  CVector g(z.size());
  CVector trial(z.size());
  for (int it = 0; it < iterations; ++it) {
    const CVector y = P.evaluate(z, grad);
    const CVector phi = norming_functional(y, q);
    double gnorm = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex s{};
      for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * grad[k][i];
      g[k] = std::conj(s);
      gnorm += std::norm(g[k]);
    }
    gnorm = std::sqrt(gnorm);
    if (gnorm == 0.0 || f == 0.0) {
      if (f != 0.0) break;
      // At a zero of P phi vanishes; nudge along the raw gradient instead.
      for (std::size_t k = 0; k < z.size(); ++k) g[k] = std::conj(grad[k][0]);
      gnorm = 1.0;
    }
    // conditional-gradient candidate: maximizer of the linearization on the ball
    if (f != 0.0) {
      for (std::size_t k = 0; k < z.size(); ++k) trial[k] = std::conj(g[k]);
      CVector cg = holder_maximizer(trial, p);
      const double fc = value_at(P, cg);
      if (fc > f * (1.0 + 1e-15)) {
        z = std::move(cg);
        f = fc;
        continue;
      }
    }
    bool improved = false;
    double t = step / gnorm;
    for (int bt = 0; bt < 40; ++bt) {
      for (std::size_t k = 0; k < z.size(); ++k) trial[k] = z[k] + t * g[k];
      project_to_sphere(trial, p);
      const double ft = value_at(P, trial);
      if (ft > f) {
        z = trial;
        improved = (ft - f) > 1e-15 * f;
        f = ft;
        step = std::min(4.0, 2.0 * t * gnorm);
        break;
      }
      t *= 0.5;
    }
    if (!improved) break;
  }
  return {f, std::move(z)};
}

}  // namespace

SupnormResult supnorm_lower(const VectorPolynomial& P, const Budget& budget, std::uint64_t seed) {
  if (budget.restarts < 1 || budget.iterations < 1) throw std::invalid_argument("budget must be >= 1");
  const auto n = static_cast<std::size_t>(P.n());
  SupnormResult best{0.0, CVector(n, Complex(1.0))};
  if (P.is_zero()) return best;
  const Exponent p = P.domain().p;

  auto consider = [&](SupnormResult r) {
    if (r.value > best.value) best = std::move(r);
  };
  int used = 0;
  auto run = [&](CVector start) {
    consider(ascend(P, std::move(start), budget.iterations));
    ++used;
  };

  run(CVector(n, Complex(1.0)));
  for (std::size_t k = 0; k < n && used < budget.restarts; ++k) {
    CVector e(n);
    e[k] = 1.0;
    run(std::move(e));
  }
  std::uint64_t index = 0;
  while (used < budget.restarts) {
    Rng rng(derive_seed(seed, index++));
    CVector z(n);
    if (p.is_infinite()) {
      for (auto& v : z) v = rng.unit_phase();
    } else {
      for (auto& v : z) v = rng.complex_normal();
    }
    run(std::move(z));
  }
  return best;
}

SupnormResult supnorm_refined(const VectorPolynomial& P, const Budget& budget, std::uint64_t seed,
                              double rel_tol, int max_rounds) {
  Budget b = budget;
  SupnormResult best = supnorm_lower(P, b, seed);
  for (int round = 1; round < max_rounds; ++round) {
    b.restarts *= 2;
    b.iterations *= 2;
    SupnormResult next = supnorm_lower(P, b, derive_seed(seed, static_cast<std::uint64_t>(1000 + round)));
    const double gain = next.value - best.value;
    if (gain > 0.0) best = std::move(next);
    if (gain <= rel_tol * best.value) break;
  }
  return best;
}

double supnorm_upper(const VectorPolynomial& P) {
  const Exponent p = P.domain().p;
  const Exponent q = P.codomain().p;
  if (P.d() == 1 && P.is_homogeneous() && P.degree() == 1) {
    CVector c(static_cast<std::size_t>(P.n()));
    for (const auto& t : P.terms()) {
      for (int k = 0; k < P.n(); ++k) {
        if (t.alpha[k] == 1) c[static_cast<std::size_t>(k)] = t.coeff[0];
      }
    }
    return lp_norm(c, p.dual());
  }
  double total = 0.0;
  for (const auto& t : P.terms()) {
    const double c = lp_norm(t.coeff, q);
    total += t.alpha.degree() == 0 ? c : c * monomial_max(t.alpha, p);
  }
  return total;
}

}  // namespace bohrlab
