#pragma once

// Arithmetic Bohr radius over a finite corpus. The corpus is the proxy for
// the function class; every estimate here is a lower estimate of A for that
// corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "bohrlab/corpus.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/operators.hpp"

namespace bohrlab {

class RadiusVector {
 public:
  RadiusVector() = default;
  explicit RadiusVector(std::vector<double> r);
  static RadiusVector constant(int n, double value);

  int n() const noexcept { return static_cast<int>(r_.size()); }
  const std::vector<double>& values() const noexcept { return r_; }
  double operator[](int i) const { return r_[static_cast<std::size_t>(i)]; }
  void set(int i, double value);
  double mean() const;

 private:
  std::vector<double> r_;
};

/// Majorant constraints sum ||V c_alpha(f)|| r^alpha <= lambda ||f||_lower,
/// one per corpus member.
class ArithmeticProblem {
 public:
  ArithmeticProblem(const std::vector<CorpusMember>& corpus, const OperatorModel& V, double lambda);

  int n() const noexcept { return n_; }
  Exponent p() const noexcept { return p_; }
  double lambda() const noexcept { return lambda_; }
  std::size_t size() const noexcept { return forms_.size(); }

  struct Check {
    bool feasible = false;
    double slack = 0.0;  // min over members of rhs - majorant
    std::string worst;
  };
  Check check(const RadiusVector& r) const;
  bool ok(std::span<const double> r) const;
  /// ok() restricted to the members that involve variable i. Enough after
  /// changing only r_i from a feasible point.
  bool ok_along(std::span<const double> r, int i) const;

 private:
  int n_;
  Exponent p_;
  double lambda_;
  std::vector<MajorantForm> forms_;
  std::vector<double> rhs_;
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> by_var_;
};

ArithmeticProblem::Check feasible(const RadiusVector& r, const std::vector<CorpusMember>& corpus,
                                  const OperatorModel& V, double lambda);

struct ArithmeticOptions {
  int restarts = 4;
  int sweeps = 4;
  double r_cap = 1.0;
  double tol = 1e-10;  // coordinate bisection width; the diagonal uses 1e-14
  std::uint64_t seed = 0;
};

struct ArithmeticResult {
  RadiusVector r;
  double mean = 0.0;
  int capped_coords = 0;
  bool infeasible_at_zero = false;
  double slack = 0.0;
  std::string method;
};

/// Coordinate ascent on the mean over the feasible set, started from the
/// largest feasible diagonal point. The returned vector passes check().
ArithmeticResult maximize_mean(const ArithmeticProblem& problem, const ArithmeticOptions& options);

/// r = t n^(-1/p) (1,...,1) with t = k_estimate (1 - eps_rel).
RadiusVector constructive_lower(double k_estimate, Exponent p, int n, double eps_rel = 1e-6);

}  // namespace bohrlab
