#include "bohrlab/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

RadiusVector::RadiusVector(std::vector<double> r) : r_(std::move(r)) {
  for (double v : r_) {
    if (!(v >= 0.0)) throw std::invalid_argument("radius vector entries must be nonnegative");
  }
}

RadiusVector RadiusVector::constant(int n, double value) {
  if (n < 1) throw std::invalid_argument("radius vector needs n >= 1");
  return RadiusVector(std::vector<double>(static_cast<std::size_t>(n), value));
}

void RadiusVector::set(int i, double value) {
  if (!(value >= 0.0)) throw std::invalid_argument("radius vector entries must be nonnegative");
  r_.at(static_cast<std::size_t>(i)) = value;
}

double RadiusVector::mean() const {
  if (r_.empty()) return 0.0;
  return std::accumulate(r_.begin(), r_.end(), 0.0) / static_cast<double>(r_.size());
}

ArithmeticProblem::ArithmeticProblem(const std::vector<CorpusMember>& corpus, const OperatorModel& V,
                                     double lambda)
    : n_(0), p_(2.0), lambda_(lambda) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  n_ = corpus.front().polynomial.n();
  p_ = corpus.front().polynomial.domain().p;
  forms_.reserve(corpus.size());
  for (const auto& f : corpus) {
    if (f.polynomial.n() != n_) throw std::invalid_argument("corpus members disagree on n");
    forms_.emplace_back(f.polynomial, V);
    rhs_.push_back(lambda * f.norm.lower);
    ids_.push_back(f.id);
  }
  by_var_.resize(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    for (int i = 0; i < n_; ++i) {
      const bool uses = std::any_of(forms_[k].weights().begin(), forms_[k].weights().end(),
                                    [i](const MajorantForm::Weight& w) { return w.alpha[i] != 0; });
      if (uses) by_var_[static_cast<std::size_t>(i)].push_back(k);
    }
  }
}

ArithmeticProblem::Check ArithmeticProblem::check(const RadiusVector& r) const {
  if (r.n() != n_) throw std::invalid_argument("radius vector dimension mismatch");
  Check c;
  bool first = true;
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    const double s = rhs_[k] - forms_[k](r.values());
    if (first || s < c.slack) {
      c.slack = s;
      c.worst = ids_[k];
      first = false;
    }
  }
  c.feasible = c.slack >= 0.0;
  return c;
}

bool ArithmeticProblem::ok(std::span<const double> r) const {
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    if (forms_[k](r) > rhs_[k]) return false;
  }
  return true;
}

bool ArithmeticProblem::ok_along(std::span<const double> r, int i) const {
  for (std::size_t k : by_var_.at(static_cast<std::size_t>(i))) {
    if (forms_[k](r) > rhs_[k]) return false;
  }
  return true;
}

ArithmeticProblem::Check feasible(const RadiusVector& r, const std::vector<CorpusMember>& corpus,
                                  const OperatorModel& V, double lambda) {
  return ArithmeticProblem(corpus, V, lambda).check(r);
}

namespace {

double mean_of(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Largest feasible x_i in [x_i, cap]; x must be feasible on entry.
void raise(const ArithmeticProblem& P, std::vector<double>& x, std::size_t i, double cap, double tol) {
  const double start = x[i];
  const int v = static_cast<int>(i);
  x[i] = cap;
  if (P.ok_along(x, v)) return;
  double lo = start, hi = cap;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    x[i] = mid;
    if (P.ok_along(x, v)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  x[i] = lo;
}

void ascend(const ArithmeticProblem& P, std::vector<double>& x, const ArithmeticOptions& o) {
  const std::size_t n = x.size();
  static constexpr double deltas[] = {0.5, 0.1};
  for (int sweep = 0; sweep < o.sweeps; ++sweep) {
    const double before = mean_of(x);
    for (std::size_t i = 0; i < n; ++i) raise(P, x, i, o.r_cap, o.tol);
    // move mass from j to i when that pays off
    for (double d : deltas) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || x[j] == 0.0 || x[i] >= o.r_cap) continue;
          auto y = x;
          y[j] *= 1.0 - d;
          raise(P, y, i, o.r_cap, o.tol);
          raise(P, y, j, o.r_cap, o.tol);
          if (mean_of(y) > mean_of(x)) x = std::move(y);
        }
      }
    }
    if (mean_of(x) <= before + 1e-13) break;
  }
}

}  // namespace

ArithmeticResult maximize_mean(const ArithmeticProblem& problem, const ArithmeticOptions& options) {
  if (options.restarts < 1 || options.sweeps < 1) throw std::invalid_argument("arithmetic budget must be >= 1");
  if (!(options.r_cap > 0.0) || !(options.tol > 0.0)) throw std::invalid_argument("invalid cap or tolerance");
  const auto n = static_cast<std::size_t>(problem.n());
  ArithmeticResult out;
  std::vector<double> x(n, 0.0);
  if (!problem.ok(x)) {
    out.r = RadiusVector(x);
    out.infeasible_at_zero = true;
    out.slack = problem.check(out.r).slack;
    out.method = "infeasible_at_zero";
    return out;
  }

  // largest feasible diagonal point, to a tight width
  double lo = 0.0, hi = options.r_cap;
  std::fill(x.begin(), x.end(), hi);
  if (problem.ok(x)) {
    lo = hi;
  } else {
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi);
      std::fill(x.begin(), x.end(), mid);
      if (problem.ok(x)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  std::vector<double> best(n, lo);
  out.method = "diagonal";

  if (n > 1) {
    Rng rng(options.seed);
    std::vector<double> y = best;
    ascend(problem, y, options);
    if (mean_of(y) > mean_of(best)) {
      best = y;
      out.method = "coordinate_ascent";
    }
    for (int k = 1; k < options.restarts; ++k) {
      y = best;
      for (auto& v : y) v *= rng.uniform(0.3, 1.0);  // shrinking keeps feasibility
      ascend(problem, y, options);
      if (mean_of(y) > mean_of(best)) {
        best = y;
        out.method = "coordinate_ascent";
      }
    }
  }

  out.r = RadiusVector(best);
  const auto c = problem.check(out.r);
  if (!c.feasible) throw std::logic_error("arithmetic ascent returned an infeasible vector");
  out.slack = c.slack;
  out.mean = out.r.mean();
  out.capped_coords = static_cast<int>(std::count_if(best.begin(), best.end(),
                                                     [&](double v) { return v >= options.r_cap; }));
  return out;
}

RadiusVector constructive_lower(double k_estimate, Exponent p, int n, double eps_rel) {
  if (!(k_estimate > 0.0)) throw std::invalid_argument("K estimate must be positive");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double t = k_estimate * (1.0 - eps_rel);
  const double scale = t * std::pow(static_cast<double>(n), -p.reciprocal());
  return RadiusVector::constant(n, scale);
}

}  // namespace bohrlab
