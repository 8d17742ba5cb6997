#pragma once

// Closed-form bounds for Bohr radii. Every abstract constant (C, B, C_q, M_q,
// pi_{r,1}) is an explicit argument; nothing here invents a numeric value for
// a constant that is only known to exist. log is the natural logarithm.

#include <optional>
#include <string>
#include <vector>

#include "bohrlab/spaces.hpp"

namespace bohrlab {

enum class Direction { lower, upper };
std::string to_string(Direction d);

/// Two-case constant B of the general lower bound K >= B / n^(1-1/p).
/// Requires 0 < opnorm < lambda.
double prop22_constant(double opnorm, double lambda);

/// B * n^-(1-1/p).
double lower_bound_general(Exponent p, double n, double lambda, double opnorm);
/// (lambda-1)/lambda * n^-(1-1/p), identity operators; lambda > 1.
double corollary_identity_lower(Exponent p, double n, double lambda);

/// r = q/(q-1), the dual of the cotype exponent.
Exponent cotype_dual(Exponent q);

/// Cotype-q bounds for K(B_{l_p^n}, X, lambda):
///   upper  lambda / n^(1-1/p)            p <= Cot
///          lambda / n^(1-1/Cot)          Cot < p
///   lower  (lambda-1)/(lambda e)                         p <= r
///          (lambda-1)/(lambda e C_q) n^-(1/r - 1/p)      r < p
/// Requires q >= 2 and C_q >= 1 (C_q only enters the second lower branch).
double cotype_bounds(Exponent p, double n, double lambda, Exponent q, double cotype_constant, Direction dir);
/// True when the lower branch above uses C_q.
bool cotype_lower_needs_constant(Exponent p, Exponent q);

/// Operator form: K(V, lambda) >= K(Y, lambda/||V||), which turns the cotype
/// lower bound into (lambda-||V||)/(lambda e C_q) [* n^-(1/r-1/p)].
double cotype_operator_lower(Exponent p, double n, double lambda, double opnorm, Exponent q,
                             double cotype_constant);

/// Cotype-q bounds for the arithmetic radius A(B_{l_p^n}, X, lambda).
double arithmetic_cotype_bounds(Exponent p, double n, double lambda, Exponent q, double cotype_constant,
                                Direction dir);

/// rho = q r m / (q + (m-1) r); 2 <= q < inf, 1 <= r <= q, m >= 1.
double rho_exponent(Exponent q, Exponent r, int m);

enum class EnvelopeKind {
  main_lower,
  main_upper,
  arithmetic_lower,
  arithmetic_upper,
  concave_operator_lower,
  operator_theorem12,
};
EnvelopeKind parse_envelope_kind(const std::string& name);
std::string to_string(EnvelopeKind kind);

struct EnvelopeParams {
  double C = 1.0;       // lower-side constant
  double B = 1.0;       // upper-side constant
  Exponent q{2.0};      // target exponent for the operator envelopes
  double opnorm = 1.0;  // concave_operator_lower only
};

/// Asymptotic envelopes with their constants as knobs. n is real and must
/// be >= 2 so that log n > 0.
double envelope(Exponent p, double n, double lambda, EnvelopeKind kind, const EnvelopeParams& params = {});

enum class RadiusKind { K, A };

/// Piecewise envelopes for the inclusion l_r -> l_q, 1 <= r < q < inf, up
/// to constants. Branch precedence: r >= 2 uses the cotype branches (so
/// r = 2 falls there), otherwise the 1 <= r < 2 branch.
double embedding_bounds(Exponent p, Exponent r, Exponent q, double n, double lambda, Direction dir,
                        RadiusKind kind = RadiusKind::K);
std::string embedding_branch(Exponent p, Exponent r);

/// K(D, lambda) = 1 / (3 lambda - 2 sqrt(2 (lambda^2 - 1))), 1 <= lambda <= sqrt 2.
double bombieri_closed_form(double lambda);

/// Sandwich-lemma factors (lambda-||V||)/(2 lambda-||V||) and
/// (lambda-||V||)/(lambda-||V||+1).
double sandwich_factor(double opnorm, double lambda);
double sandwich_factor_unit(double opnorm, double lambda);

/// Lower bound on inf_m K_m(B_{l_p^n}, V, lambda) from the Cauchy inequality
/// ||c_alpha|| sup_B |z^alpha| <= ||f|| and card Lambda(m,n) terms:
/// K_m >= min(1, (lambda / (||V|| card Lambda(m,n)))^(1/m)). The infimum is
/// taken over m = 1..max_m; for lambda >= ||V|| the minimum is at m = 1.
double km_lower_cauchy(int n, double lambda, double opnorm, int max_m = 64);
/// The same bound for a single degree m.
double km_lower_cauchy_degree(int n, int m, double lambda, double opnorm);

/// A >= K / n^(1/p).
double arithmetic_from_k(double k, Exponent p, double n);

struct BoundValue {
  std::string theorem;
  Direction direction = Direction::lower;
  double value = 0.0;
  std::string constants_used;
};

/// What a grid point knows about its operator, for choosing formulas.
struct BoundContext {
  Exponent p{2.0};
  int n = 1;
  double lambda = 1.0;
  double opnorm = 1.0;       // certified upper bound on ||V||
  bool identity = true;      // V is the identity on X
  SpaceSpec source;          // X
  SpaceSpec target;          // Y
  std::optional<double> source_cotype_constant;
  std::optional<double> target_cotype_constant;
};

/// Every implemented lower bound on K whose hypotheses hold at this point
/// and whose constants are known. Envelopes with abstract constants are not
/// included.
std::vector<BoundValue> k_lower_bounds(const BoundContext& ctx);

/// Formula rows for the bounds table: every theorem, both directions, with
/// the constants recorded (abstract ones at their default 1).
std::vector<BoundValue> formula_table(const BoundContext& ctx);

}  // namespace bohrlab
