#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bohrlab/norm_search.hpp"
#include "bohrlab/polynomial.hpp"

namespace bohrlab {

/// The symmetric m-linear map A with A(z,...,z) = P(z).
class SymmetricForm {
 public:
  static constexpr int max_degree = 10;

  /// Rejects non-homogeneous P, degree 0 and degree above max_degree.
  explicit SymmetricForm(VectorPolynomial P);

  int degree() const noexcept { return m_; }
  int n() const noexcept { return P_.n(); }
  int d() const noexcept { return P_.d(); }
  const VectorPolynomial& polynomial() const noexcept { return P_; }

  /// Polarization: 1/(2^m m!) sum_eps eps_1...eps_m P(sum_k eps_k x_k).
  CVector operator()(std::span<const CVector> args) const;

  /// A(e_{i_1},...,e_{i_m}) = c_j / |j| with j the sorted tuple. Entries are
  /// 1-based and may come in any order.
  CVector entry(std::span<const int> i) const;

  /// Dense tensor of all entries over M(m,n), lexicographic in i. Throws if
  /// n^m exceeds `limit`.
  std::vector<CVector> dense_entries(std::size_t limit = 1u << 20) const;

 private:
  VectorPolynomial P_;
  int m_;
};

inline SymmetricForm polarize(const VectorPolynomial& P) { return SymmetricForm(P); }

struct MultilinearResult {
  double value = 0.0;
  std::vector<CVector> args;
};

/// Lower bound on sup ||A(x_1,...,x_m)|| over the m-fold product of unit
/// balls, by alternating exact per-argument maximization. Starts: the
/// diagonal argmax of P, all sign vertices when 2^(n m) <= 4096 and p = inf,
/// then random points.
MultilinearResult multilinear_supnorm_lower(const SymmetricForm& A, const Budget& budget,
                                            std::uint64_t seed);

/// (sum_{i in M(m,n)} ||A(e_i)||_q^s)^(1/s): the left side of the coefficient
/// inequality for multilinear forms.
double multilinear_coefficient_norm(const SymmetricForm& A, Exponent s);

/// m^m / m!
double polarization_constant(int m);

}  // namespace bohrlab
