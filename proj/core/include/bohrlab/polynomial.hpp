#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bohrlab/multiindex.hpp"
#include "bohrlab/spaces.hpp"

namespace bohrlab {

struct Term {
  MultiIndex alpha;
  CVector coeff;  // length d
};

/// Finitely supported sum of c_alpha z^alpha with c_alpha in l_q^d. Terms are
/// kept in canonical order, duplicates merged and zero coefficients dropped,
/// so equal polynomials compare equal term by term.
class VectorPolynomial {
 public:
  VectorPolynomial(SpaceSpec domain, SpaceSpec codomain, std::vector<Term> terms);

  const SpaceSpec& domain() const noexcept { return domain_; }
  const SpaceSpec& codomain() const noexcept { return codomain_; }
  int n() const noexcept { return domain_.dim; }
  int d() const noexcept { return codomain_.dim; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept;
  /// Largest |alpha|; 0 for the zero polynomial.
  int degree() const noexcept;
  int min_degree() const noexcept;

  CVector evaluate(std::span<const Complex> z) const;
  /// Value together with the partial derivatives; grad[k] is dP/dz_k.
  CVector evaluate(std::span<const Complex> z, std::vector<CVector>& grad) const;

  VectorPolynomial scaled(Complex s) const;
  /// Same coefficients over another domain exponent (dimension unchanged).
  VectorPolynomial with_domain(Exponent p) const;

  friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b);

 private:
  SpaceSpec domain_;
  SpaceSpec codomain_;
  std::vector<Term> terms_;
};

inline CVector evaluate(const VectorPolynomial& P, std::span<const Complex> z) {
  return P.evaluate(z);
}

/// Scalar convenience: one term per entry, codomain C.
VectorPolynomial scalar_polynomial(SpaceSpec domain,
                                   const std::vector<std::pair<MultiIndex, Complex>>& terms);

enum class Ensemble { unimodular, complex_gaussian, sparse };

Ensemble parse_ensemble(const std::string& name);
std::string to_string(Ensemble e);

struct RandomPolynomialSpec {
  int m = 2;
  int n = 2;
  int d = 1;
  Exponent p{2.0};
  Exponent q{2.0};
  Ensemble ensemble = Ensemble::unimodular;
  double density = 0.5;  // sparse ensemble only
};

/// Homogeneous degree-m polynomial with one coefficient per alpha in
/// Lambda(m,n) (sparse: each kept with probability `density`). Unimodular
/// coefficients are +-1 times a random unit direction in l_q^d (e_1 when d=1).
/// Throws if the sparse ensemble selects no term.
VectorPolynomial random_polynomial(const RandomPolynomialSpec& spec, std::uint64_t seed);

}  // namespace bohrlab
