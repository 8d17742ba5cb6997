#pragma once

// Sup norms of vector polynomials over B_{l_p^n}. Lower bounds are values at
// feasible points found by multistart ascent; upper bounds come from the
// coefficient majorant. Neither side ever crosses over.

#include <cstdint>

#include "bohrlab/polynomial.hpp"

namespace bohrlab {

struct Budget {
  int restarts = 64;
  int iterations = 200;
};

struct SupnormResult {
  double value = 0.0;
  CVector argmax;  // feasible point attaining `value`
};

/// max over evaluated feasible points of ||P(z)||_q. Starts: the uniform
/// point, the basis vectors, then seeded random points.
SupnormResult supnorm_lower(const VectorPolynomial& P, const Budget& budget, std::uint64_t seed);

/// Repeats supnorm_lower with growing budgets until the relative improvement
/// drops below rel_tol (at most `max_rounds` rounds).
SupnormResult supnorm_refined(const VectorPolynomial& P, const Budget& budget, std::uint64_t seed,
                              double rel_tol = 1e-4, int max_rounds = 4);

/// sum ||c_alpha|| monomial_max(alpha, p) (+ ||c_0||). Exact Hoelder value for
/// scalar linear forms.
double supnorm_upper(const VectorPolynomial& P);

/// Norming functional of y in l_q^d: phi with ||phi||_{q'} = 1 and
/// sum phi_i y_i = ||y||_q. Zero for y = 0.
CVector norming_functional(std::span<const Complex> y, Exponent q);

/// Maximizer of Re sum a_i x_i over the unit ball of l_p^n (Hoelder dual of a).
CVector holder_maximizer(std::span<const Complex> a, Exponent p);

/// Scale z onto the unit sphere of l_p^n (onto the torus for p = inf).
void project_to_sphere(CVector& z, Exponent p);

}  // namespace bohrlab
