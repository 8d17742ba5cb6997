#include "bohrlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

namespace {

bool all_zero(const CVector& c) {
  return std::all_of(c.begin(), c.end(), [](Complex v) { return v == Complex{}; });
}

// z_k^e for e = 0..max_degree, row-major by variable. 0^0 = 1.
std::vector<Complex> power_table(std::span<const Complex> z, int max_degree) {
  const auto stride = static_cast<std::size_t>(max_degree + 1);
  std::vector<Complex> pw(z.size() * stride);
  for (std::size_t k = 0; k < z.size(); ++k) {
    pw[k * stride] = 1.0;
    for (std::size_t e = 1; e < stride; ++e) pw[k * stride + e] = pw[k * stride + e - 1] * z[k];
  }
  return pw;
}

}  // namespace

VectorPolynomial::VectorPolynomial(SpaceSpec domain, SpaceSpec codomain, std::vector<Term> terms)
    : domain_(domain), codomain_(codomain) {
  domain_.role = SpaceRole::domain;
  codomain_.role = SpaceRole::coefficient;
  for (const auto& t : terms) {
    if (t.alpha.dimension() != domain_.dim) {
      throw std::invalid_argument("term has " + std::to_string(t.alpha.dimension()) +
                                  " exponents, domain has n = " + std::to_string(domain_.dim));
    }
    if (static_cast<int>(t.coeff.size()) != codomain_.dim) {
      throw std::invalid_argument("coefficient length does not match codomain dimension");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return canonical_less(a.alpha, b.alpha); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().alpha == t.alpha) {
      for (std::size_t i = 0; i < t.coeff.size(); ++i) terms_.back().coeff[i] += t.coeff[i];
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return all_zero(t.coeff); });
}

bool VectorPolynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.front().alpha.degree() == terms_.back().alpha.degree();
}

int VectorPolynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().alpha.degree();
}

int VectorPolynomial::min_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().alpha.degree();
}

CVector VectorPolynomial::evaluate(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n()) throw std::invalid_argument("evaluate: dimension mismatch");
  CVector out(static_cast<std::size_t>(d()));
  const int deg = degree();
  const auto stride = static_cast<std::size_t>(deg + 1);
  const auto pw = power_table(z, deg);
  for (const auto& t : terms_) {
    Complex mono = 1.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const int a = t.alpha[static_cast<int>(k)];
      if (a != 0) mono *= pw[k * stride + static_cast<std::size_t>(a)];
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coeff[i] * mono;
  }
  return out;
}

CVector VectorPolynomial::evaluate(std::span<const Complex> z, std::vector<CVector>& grad) const {
  if (static_cast<int>(z.size()) != n()) throw std::invalid_argument("evaluate: dimension mismatch");
  const auto nn = z.size();
  const auto dd = static_cast<std::size_t>(d());
  CVector out(dd);
  grad.assign(nn, CVector(dd));
  const int deg = degree();
  const auto stride = static_cast<std::size_t>(deg + 1);
  const auto pw = power_table(z, deg);
  std::vector<Complex> f(nn);
  for (const auto& t : terms_) {
    Complex mono = 1.0;
    for (std::size_t k = 0; k < nn; ++k) {
      f[k] = pw[k * stride + static_cast<std::size_t>(t.alpha[static_cast<int>(k)])];
      mono *= f[k];
    }
    for (std::size_t i = 0; i < dd; ++i) out[i] += t.coeff[i] * mono;
    for (std::size_t k = 0; k < nn; ++k) {
      const int a = t.alpha[static_cast<int>(k)];
      if (a == 0) continue;
      // derivative of z_k^a, times the other factors (no division, z_k may be 0)
      Complex dk = static_cast<double>(a) * pw[k * stride + static_cast<std::size_t>(a - 1)];
      for (std::size_t j = 0; j < nn; ++j) {
        if (j != k) dk *= f[j];
      }
      for (std::size_t i = 0; i < dd; ++i) grad[k][i] += t.coeff[i] * dk;
    }
  }
  return out;
}

VectorPolynomial VectorPolynomial::scaled(Complex s) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) {
    for (auto& c : t.coeff) c *= s;
  }
  return VectorPolynomial(domain_, codomain_, std::move(terms));
}

VectorPolynomial VectorPolynomial::with_domain(Exponent p) const {
  return VectorPolynomial(SpaceSpec(p, domain_.dim), codomain_, terms_);
}

bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
  if (!(a.domain_.p == b.domain_.p) || a.domain_.dim != b.domain_.dim) return false;
  if (!(a.codomain_.p == b.codomain_.p) || a.codomain_.dim != b.codomain_.dim) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].alpha == b.terms_[i].alpha) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

VectorPolynomial scalar_polynomial(SpaceSpec domain,
                                   const std::vector<std::pair<MultiIndex, Complex>>& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [alpha, c] : terms) out.push_back({alpha, CVector{c}});
  return VectorPolynomial(domain, SpaceSpec(Exponent(2.0), 1, SpaceRole::coefficient), std::move(out));
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "unimodular" || name == "unimodular-signs") return Ensemble::unimodular;
  if (name == "complex-gaussian" || name == "gaussian") return Ensemble::complex_gaussian;
  if (name == "sparse") return Ensemble::sparse;
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::unimodular: return "unimodular";
    case Ensemble::complex_gaussian: return "complex-gaussian";
    case Ensemble::sparse: return "sparse";
  }
  return "?";
}

VectorPolynomial random_polynomial(const RandomPolynomialSpec& spec, std::uint64_t seed) {
  if (spec.m < 0 || spec.n < 1 || spec.d < 1) throw std::invalid_argument("random_polynomial: bad dimensions");
  if (spec.ensemble == Ensemble::sparse && !(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("sparse density must lie in [0, 1]");
  }
  Rng rng(seed);
  const auto dd = static_cast<std::size_t>(spec.d);
  auto unit_direction = [&] {
    CVector u(dd);
    if (dd == 1) {
      u[0] = 1.0;
      return u;
    }
    for (auto& v : u) v = rng.complex_normal();
    const double norm = lp_norm(u, spec.q);
    for (auto& v : u) v /= norm;
    return u;
  };

  std::vector<Term> terms;
  for (auto& alpha : enumerate_Lambda(spec.m, spec.n)) {
    CVector c(dd);
    switch (spec.ensemble) {
      case Ensemble::unimodular: {
        const double s = rng.sign();
        c = unit_direction();
        for (auto& v : c) v *= s;
        break;
      }
      case Ensemble::complex_gaussian:
        for (auto& v : c) v = rng.complex_normal();
        break;
      case Ensemble::sparse: {
        if (rng.uniform() >= spec.density) continue;
        for (auto& v : c) v = rng.complex_normal();
        break;
      }
    }
    terms.push_back({std::move(alpha), std::move(c)});
  }
  if (terms.empty()) throw std::invalid_argument("random ensemble produced the zero polynomial");
  return VectorPolynomial(SpaceSpec(spec.p, spec.n),
                          SpaceSpec(spec.q, spec.d, SpaceRole::coefficient), std::move(terms));
}

}  // namespace bohrlab
