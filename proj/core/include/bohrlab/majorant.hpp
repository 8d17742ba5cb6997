#pragma once

// Majorant sum_alpha ||V c_alpha|| r^alpha. The weights b_alpha are computed
// once per (polynomial, operator); everything after that is real arithmetic on
// the nonnegative orthant.

#include <cstdint>
#include <span>
#include <vector>

#include "bohrlab/multiindex.hpp"
#include "bohrlab/operators.hpp"
#include "bohrlab/polynomial.hpp"

namespace bohrlab {

class MajorantForm {
 public:
  struct Weight {
    MultiIndex alpha;
    double b;
  };

  MajorantForm(const VectorPolynomial& P, const OperatorModel& V);
  /// Direct construction from weights (used by tests and scaling tricks).
  MajorantForm(int n, Exponent p, std::vector<Weight> weights);

  int n() const noexcept { return n_; }
  Exponent p() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  /// ||V c_0||, the weight of the constant term.
  double constant() const noexcept { return constant_; }
  bool homogeneous() const noexcept { return homogeneous_; }

  /// sum b_alpha r^alpha, exact.
  double operator()(std::span<const double> r) const;
  /// sum b_alpha t^|alpha| x^alpha, i.e. the majorant at t*x.
  double at_scale(std::span<const double> x, double t) const;
  /// Per-degree sums B_k(x) = sum_{|alpha|=k} b_alpha x^alpha, k = 0..degree.
  std::vector<double> degree_sums(std::span<const double> x) const;
  /// Value and partial derivatives of the majorant at t*x, in x.
  double value_and_gradient(std::span<const double> x, double t, std::vector<double>& grad) const;

 private:
  int n_;
  Exponent p_;
  std::vector<Weight> weights_;
  int degree_ = 0;
  double constant_ = 0.0;
  bool homogeneous_ = true;
};

/// sum_alpha ||V c_alpha|| r^alpha.
double majorant(const VectorPolynomial& P, const OperatorModel& V, std::span<const double> r);

struct OrthantPoint {
  double value = 0.0;
  std::vector<double> x;
};

/// Lower bound on sup over x >= 0, ||x||_p <= 1 of the majorant at t*x.
/// Exact for p = inf (all-ones point) and for n = 1.
OrthantPoint majorant_sup_lower(const MajorantForm& form, double t, int restarts, int iterations,
                                std::uint64_t seed);

/// S(t) = sup over the ball of the majorant at t*x, evaluated repeatedly by
/// a bisection. Keeps the candidate points found so far and polishes the
/// current best at each call, so every value is a true lower bound and the
/// sequence of calls is deterministic.
class MajorantSearch {
 public:
  MajorantSearch(const MajorantForm& form, int restarts, int iterations, std::uint64_t seed);
  double operator()(double t);
  /// Maximizer for the most recent call.
  const std::vector<double>& argmax() const noexcept { return argmax_; }

 private:
  const MajorantForm& form_;
  int iterations_;
  std::vector<std::vector<double>> cache_;
  std::vector<double> argmax_;
  bool trivial_;  // p = inf or n = 1: the all-ones point is optimal
};

}  // namespace bohrlab
