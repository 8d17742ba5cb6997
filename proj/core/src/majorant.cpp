#include "bohrlab/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

MajorantForm::MajorantForm(const VectorPolynomial& P, const OperatorModel& V)
    : n_(P.n()), p_(P.domain().p) {
  if (P.d() != V.cols()) {
    throw std::invalid_argument("operator source dimension " + std::to_string(V.cols()) +
                                " does not match coefficient dimension " + std::to_string(P.d()));
  }
  for (const auto& t : P.terms()) {
    const double b = V.image_norm(t.coeff);
    if (b == 0.0) continue;
    weights_.push_back({t.alpha, b});
  }
  for (const auto& w : weights_) {
    degree_ = std::max(degree_, w.alpha.degree());
    if (w.alpha.degree() == 0) constant_ += w.b;
  }
  if (!weights_.empty()) homogeneous_ = weights_.front().alpha.degree() == weights_.back().alpha.degree();
}

MajorantForm::MajorantForm(int n, Exponent p, std::vector<Weight> weights)
    : n_(n), p_(p), weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w.alpha.dimension() != n_) throw std::invalid_argument("weight dimension mismatch");
    if (w.b < 0.0) throw std::invalid_argument("majorant weights must be nonnegative");
    degree_ = std::max(degree_, w.alpha.degree());
    if (w.alpha.degree() == 0) constant_ += w.b;
  }
  std::stable_sort(weights_.begin(), weights_.end(),
                   [](const Weight& a, const Weight& b) { return canonical_less(a.alpha, b.alpha); });
  if (!weights_.empty()) homogeneous_ = weights_.front().alpha.degree() == weights_.back().alpha.degree();
}

namespace {

void check_point(std::span<const double> r, int n) {
  if (static_cast<int>(r.size()) != n) throw std::invalid_argument("majorant: dimension mismatch");
  for (double v : r) {
    if (!(v >= 0.0)) throw std::invalid_argument("majorant: radii must be nonnegative");
  }
}

// x^alpha with 0^0 = 1
double monomial(const MultiIndex& alpha, std::span<const double> x) {
  double v = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int a = alpha[static_cast<int>(k)];
    if (a != 0) v *= std::pow(x[k], a);
  }
  return v;
}

}  // namespace

double MajorantForm::operator()(std::span<const double> r) const {
  check_point(r, n_);
  double s = 0.0;
  for (const auto& w : weights_) s += w.b * monomial(w.alpha, r);
  return s;
}

double MajorantForm::at_scale(std::span<const double> x, double t) const {
  double s = 0.0;
  for (const auto& w : weights_) s += w.b * std::pow(t, w.alpha.degree()) * monomial(w.alpha, x);
  return s;
}

std::vector<double> MajorantForm::degree_sums(std::span<const double> x) const {
  std::vector<double> B(static_cast<std::size_t>(degree_ + 1), 0.0);
  for (const auto& w : weights_) B[static_cast<std::size_t>(w.alpha.degree())] += w.b * monomial(w.alpha, x);
  return B;
}

double MajorantForm::value_and_gradient(std::span<const double> x, double t, std::vector<double>& grad) const {
  const auto nn = static_cast<std::size_t>(n_);
  grad.assign(nn, 0.0);
  double s = 0.0;
  for (const auto& w : weights_) {
    const double c = w.b * std::pow(t, w.alpha.degree());
    s += c * monomial(w.alpha, x);
    for (std::size_t k = 0; k < nn; ++k) {
      const int a = w.alpha[static_cast<int>(k)];
      if (a == 0) continue;
      double dk = c * a * std::pow(x[k], a - 1);
      for (std::size_t j = 0; j < nn; ++j) {
        const int aj = w.alpha[static_cast<int>(j)];
        if (j != k && aj != 0) dk *= std::pow(x[j], aj);
      }
      grad[k] += dk;
    }
  }
  return s;
}

double majorant(const VectorPolynomial& P, const OperatorModel& V, std::span<const double> r) {
  return MajorantForm(P, V)(r);
}

namespace {

void normalize(std::vector<double>& x, Exponent p) {
  const double s = lp_norm(std::span<const double>(x), p);
  if (s == 0.0) return;
  for (auto& v : x) v /= s;
}

// Multiplicative fixed-point ascent x_i <- (x_i d_i g)^(1/p), normalized. It
// is the Baum-Eagon step in the variables x_i^p; a damped step is tried when
// the full one fails to increase g.
OrthantPoint polish(const MajorantForm& form, double t, std::vector<double> x, int iterations) {
  const Exponent p = form.p();
  normalize(x, p);
  std::vector<double> grad;
  double f = form.value_and_gradient(x, t, grad);
  std::vector<double> cand(x.size());
  std::vector<double> trial(x.size());
  const double inv_p = p.reciprocal();
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < x.size(); ++i) cand[i] = std::pow(x[i] * grad[i], inv_p);
    normalize(cand, p);
    bool moved = false;
    for (double theta = 1.0; theta > 1e-3; theta *= 0.5) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        trial[i] = theta == 1.0 ? cand[i] : std::pow(x[i], 1.0 - theta) * std::pow(cand[i], theta);
      }
      normalize(trial, p);
      std::vector<double> g2;
      const double ft = form.value_and_gradient(trial, t, g2);
      if (ft > f) {
        moved = (ft - f) > 1e-15 * f;
        x = trial;
        f = ft;
        grad = std::move(g2);
        break;
      }
    }
    if (!moved) break;
  }
  return {f, std::move(x)};
}

std::vector<std::vector<double>> starts(int n, Exponent p, int restarts, std::uint64_t seed) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> out;
  out.emplace_back(nn, 1.0);
  for (std::size_t k = 0; k < nn; ++k) {
    std::vector<double> e(nn, 0.0);
    e[k] = 1.0;
    out.push_back(std::move(e));
  }
  for (int r = 0; static_cast<int>(out.size()) < std::max(restarts, n + 1); ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x(nn);
    for (auto& v : x) v = 0.05 + rng.uniform();
    out.push_back(std::move(x));
  }
  for (auto& x : out) normalize(x, p);
  return out;
}

}  // namespace

OrthantPoint majorant_sup_lower(const MajorantForm& form, double t, int restarts, int iterations,
                                std::uint64_t seed) {
  if (restarts < 1 || iterations < 1) throw std::invalid_argument("budget must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("scale must be nonnegative");
  const auto nn = static_cast<std::size_t>(form.n());
  if (form.p().is_infinite() || form.n() == 1) {
    std::vector<double> ones(nn, 1.0);
    const double v = form.at_scale(ones, t);
    return {v, std::move(ones)};
  }
  OrthantPoint best{-1.0, {}};
  for (auto& x : starts(form.n(), form.p(), restarts, seed)) {
    auto r = polish(form, t, std::move(x), iterations);
    if (r.value > best.value) best = std::move(r);
  }
  return best;
}

MajorantSearch::MajorantSearch(const MajorantForm& form, int restarts, int iterations, std::uint64_t seed)
    : form_(form), iterations_(iterations),
      trivial_(form.p().is_infinite() || form.n() == 1) {
  if (restarts < 1 || iterations < 1) throw std::invalid_argument("budget must be >= 1");
  if (!trivial_) cache_ = starts(form.n(), form.p(), restarts, seed);
}

double MajorantSearch::operator()(double t) {
  const auto nn = static_cast<std::size_t>(form_.n());
  if (trivial_) {
    argmax_.assign(nn, 1.0);
    return form_.at_scale(argmax_, t);
  }
  // Polish each cached start once at the first scale; afterwards only the
  // best cached point is polished.
  static constexpr std::size_t kCacheLimit = 256;
  std::size_t best_i = 0;
  double best_v = -1.0;
  for (std::size_t i = 0; i < cache_.size(); ++i) {
    const double v = form_.at_scale(cache_[i], t);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  if (argmax_.empty()) {
    // The raw starts stay in the cache; the uniform point in particular is
    // always a candidate.
    const std::size_t raw = cache_.size();
    for (std::size_t i = 0; i < raw; ++i) cache_.push_back(polish(form_, t, cache_[i], iterations_).x);
    for (std::size_t i = raw; i < cache_.size(); ++i) {
      const double v = form_.at_scale(cache_[i], t);
      if (v > best_v) {
        best_v = v;
        best_i = i;
      }
    }
  }
  auto r = polish(form_, t, cache_[best_i], iterations_);
  if (r.value > best_v) {
    best_v = r.value;
    if (cache_.size() < kCacheLimit) {
      cache_.push_back(r.x);
    } else {
      cache_[best_i] = r.x;
    }
    argmax_ = std::move(r.x);
  } else {
    argmax_ = cache_[best_i];
  }
  return best_v;
}

}  // namespace bohrlab
