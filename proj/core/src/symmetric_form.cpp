#include "bohrlab/symmetric_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

SymmetricForm::SymmetricForm(VectorPolynomial P) : P_(std::move(P)), m_(P_.degree()) {
  if (!P_.is_homogeneous()) throw std::invalid_argument("polarize needs a homogeneous polynomial");
  if (P_.is_zero()) throw std::invalid_argument("polarize: zero polynomial has no degree");
  if (m_ < 1) throw std::invalid_argument("polarize needs degree m >= 1");
  if (m_ > max_degree) throw std::invalid_argument("polarize: degree above 10 is not supported");
}

CVector SymmetricForm::operator()(std::span<const CVector> args) const {
  if (static_cast<int>(args.size()) != m_) throw std::invalid_argument("expected m arguments");
  const auto nn = static_cast<std::size_t>(n());
  for (const auto& x : args) {
    if (x.size() != nn) throw std::invalid_argument("argument dimension mismatch");
  }
  CVector acc(static_cast<std::size_t>(d()));
  CVector v(nn);
  const std::uint32_t patterns = 1u << m_;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    std::fill(v.begin(), v.end(), Complex{});
    double sign = 1.0;
    for (int k = 0; k < m_; ++k) {
      const double e = ((mask >> k) & 1u) ? -1.0 : 1.0;
      sign *= e;
      for (std::size_t i = 0; i < nn; ++i) v[i] += e * args[static_cast<std::size_t>(k)][i];
    }
    const CVector y = P_.evaluate(v);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * y[i];
  }
  double scale = static_cast<double>(patterns);
  for (int k = 2; k <= m_; ++k) scale *= k;
  for (auto& c : acc) c /= scale;
  return acc;
}

CVector SymmetricForm::entry(std::span<const int> i) const {
  if (static_cast<int>(i.size()) != m_) throw std::invalid_argument("entry needs m indices");
  IndexTuple j(i.begin(), i.end());
  std::sort(j.begin(), j.end());
  const MultiIndex alpha = j_to_alpha(j, n());
  const auto& terms = P_.terms();
  const auto it = std::lower_bound(terms.begin(), terms.end(), alpha,
                                   [](const Term& t, const MultiIndex& a) { return canonical_less(t.alpha, a); });
  CVector out(static_cast<std::size_t>(d()));
  if (it == terms.end() || !(it->alpha == alpha)) return out;
  const auto mult = static_cast<double>(multiplicity(j));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = it->coeff[k] / mult;
  return out;
}

std::vector<CVector> SymmetricForm::dense_entries(std::size_t limit) const {
  std::size_t total = 1;
  for (int k = 0; k < m_; ++k) {
    total *= static_cast<std::size_t>(n());
    if (total > limit) throw std::overflow_error("dense tensor too large");
  }
  std::vector<CVector> out;
  out.reserve(total);
  std::vector<int> i(static_cast<std::size_t>(m_), 1);
  for (std::size_t c = 0; c < total; ++c) {
    out.push_back(entry(i));
    for (int pos = m_ - 1; pos >= 0; --pos) {
      auto& v = i[static_cast<std::size_t>(pos)];
      if (++v <= n()) break;
      v = 1;
    }
  }
  return out;
}

double polarization_constant(int m) {
  if (m < 1) throw std::invalid_argument("polarization_constant needs m >= 1");
  double v = 1.0;
  for (int k = 1; k <= m; ++k) v *= static_cast<double>(m) / k;
  return v;
}

double multilinear_coefficient_norm(const SymmetricForm& A, Exponent s) {
  const auto entries = A.dense_entries();
  std::vector<double> norms;
  norms.reserve(entries.size());
  const Exponent q = A.polynomial().codomain().p;
  for (const auto& e : entries) norms.push_back(lp_norm(e, q));
  return lp_norm(std::span<const double>(norms), s);
}

namespace {

class DenseForm {
 public:
  explicit DenseForm(const SymmetricForm& A)
      : m_(A.degree()), n_(A.n()), d_(A.d()), T_(A.dense_entries()),
        q_(A.polynomial().codomain().p), p_(A.polynomial().domain().p) {}

  CVector value(const std::vector<CVector>& x) const {
    CVector y(static_cast<std::size_t>(d_));
    std::vector<int> i(static_cast<std::size_t>(m_), 0);
    for (const auto& t : T_) {
      Complex w = 1.0;
      for (int k = 0; k < m_; ++k) {
        w *= x[static_cast<std::size_t>(k)][static_cast<std::size_t>(i[static_cast<std::size_t>(k)])];
      }
      for (std::size_t r = 0; r < y.size(); ++r) y[r] += t[r] * w;
      advance(i);
    }
    return y;
  }

  double norm_of(const std::vector<CVector>& x) const { return lp_norm(value(x), q_); }

  // One exact maximization in argument k, all others fixed. Never decreases.
  double update(std::vector<CVector>& x, int k) const {
    const auto nn = static_cast<std::size_t>(n_);
    const auto dd = static_cast<std::size_t>(d_);
    std::vector<CVector> w(nn, CVector(dd));
    std::vector<int> i(static_cast<std::size_t>(m_), 0);
    for (const auto& t : T_) {
      Complex c = 1.0;
      for (int a = 0; a < m_; ++a) {
        if (a == k) continue;
        c *= x[static_cast<std::size_t>(a)][static_cast<std::size_t>(i[static_cast<std::size_t>(a)])];
      }
      auto& wl = w[static_cast<std::size_t>(i[static_cast<std::size_t>(k)])];
      for (std::size_t r = 0; r < dd; ++r) wl[r] += t[r] * c;
      advance(i);
    }
    auto& xk = x[static_cast<std::size_t>(k)];
    CVector y(dd);
    for (std::size_t l = 0; l < nn; ++l) {
      for (std::size_t r = 0; r < dd; ++r) y[r] += xk[l] * w[l][r];
    }
    const double before = lp_norm(y, q_);
    CVector phi = norming_functional(y, q_);
    if (before == 0.0) {
      phi.assign(dd, Complex{});
      phi[0] = 1.0;
    }
    CVector a(nn);
    for (std::size_t l = 0; l < nn; ++l) {
      for (std::size_t r = 0; r < dd; ++r) a[l] += phi[r] * w[l][r];
    }
    CVector cand = holder_maximizer(a, p_);
    CVector ynew(dd);
    for (std::size_t l = 0; l < nn; ++l) {
      for (std::size_t r = 0; r < dd; ++r) ynew[r] += cand[l] * w[l][r];
    }
    const double after = lp_norm(ynew, q_);
    if (after > before) {
      xk = std::move(cand);
      return after;
    }
    return before;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  Exponent p() const { return p_; }

 private:
  void advance(std::vector<int>& i) const {
    for (int pos = m_ - 1; pos >= 0; --pos) {
      auto& v = i[static_cast<std::size_t>(pos)];
      if (++v < n_) return;
      v = 0;
    }
  }

  int m_, n_, d_;
  std::vector<CVector> T_;
  Exponent q_, p_;
};

double alternate(const DenseForm& F, std::vector<CVector>& x, int sweeps) {
  double f = F.norm_of(x);
  for (int s = 0; s < sweeps; ++s) {
    const double before = f;
    for (int k = 0; k < F.m(); ++k) f = std::max(f, F.update(x, k));
    if (f <= before * (1.0 + 1e-14)) break;
  }
  return F.norm_of(x);
}

}  // namespace

MultilinearResult multilinear_supnorm_lower(const SymmetricForm& A, const Budget& budget,
                                            std::uint64_t seed) {
  if (budget.restarts < 1 || budget.iterations < 1) throw std::invalid_argument("budget must be >= 1");
  const DenseForm F(A);
  const int m = A.degree();
  const auto nn = static_cast<std::size_t>(A.n());
  MultilinearResult best;

  auto consider = [&](std::vector<CVector> x) {
    const double v = alternate(F, x, budget.iterations);
    if (v > best.value || best.args.empty()) {
      best.value = v;
      best.args = std::move(x);
    }
  };

  // Diagonal start: whatever the polynomial search found for P.
  const auto diag = supnorm_lower(A.polynomial(), Budget{std::min(budget.restarts, 16), budget.iterations},
                                  derive_seed(seed, "diagonal"));
  consider(std::vector<CVector>(static_cast<std::size_t>(m), diag.argmax));

  const std::size_t bits = nn * static_cast<std::size_t>(m);
  if (F.p().is_infinite() && bits <= 12) {
    std::vector<CVector> best_vertex;
    double best_val = -1.0;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      std::vector<CVector> x(static_cast<std::size_t>(m), CVector(nn));
      for (std::size_t b = 0; b < bits; ++b) x[b / nn][b % nn] = ((mask >> b) & 1u) ? -1.0 : 1.0;
      const double v = F.norm_of(x);
      if (v > best_val) {
        best_val = v;
        best_vertex = std::move(x);
      }
    }
    consider(std::move(best_vertex));
  }

  for (int r = 0; r < budget.restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<CVector> x(static_cast<std::size_t>(m), CVector(nn));
    for (auto& xk : x) {
      for (auto& v : xk) v = F.p().is_infinite() ? rng.unit_phase() : rng.complex_normal();
      project_to_sphere(xk, F.p());
    }
    consider(std::move(x));
  }
  return best;
}

}  // namespace bohrlab
