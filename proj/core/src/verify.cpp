#include "bohrlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bohrlab/multiindex.hpp"
#include "bohrlab/polynomial.hpp"
#include "bohrlab/rng.hpp"
#include "bohrlab/symmetric_form.hpp"

namespace bohrlab {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { r_.suite = std::move(suite); }

  void add(const std::string& name, const std::string& p, int n, int m, double lhs, double rhs, bool passed,
           const std::string& detail = "") {
    r_.rows.add_row({name, p, std::to_string(n), std::to_string(m), "", "", format_double(lhs), format_double(rhs),
                     passed ? "1" : "0", detail});
    ++r_.checks;
    if (!passed) ++r_.failures;
    const double rel = (lhs - rhs) / std::max(1.0, std::abs(rhs));
    r_.worst = std::max(r_.worst, rel);
  }
  SuiteReport take() { return std::move(r_); }

 private:
  SuiteReport r_;
};

const Exponent kP3[] = {Exponent(1.0), Exponent(2.0), Exponent::infinity()};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"combinatorics", "lemma31", "bombal", "sandwich", "arithmetic_lemma"};
  return names;
}

SuiteReport suite_combinatorics() {
  Recorder rec("combinatorics");
  // Pascal triangle up to row 40, built by addition only
  std::vector<std::vector<std::uint64_t>> C(41);
  for (std::size_t r = 0; r <= 40; ++r) {
    C[r].assign(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) C[r][k] = C[r - 1][k - 1] + C[r - 1][k];
  }
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto J = enumerate_J(m, n);
      const std::uint64_t want = C[static_cast<std::size_t>(n + m - 1)][static_cast<std::size_t>(m)];
      rec.add("card_J", "", n, m, static_cast<double>(J.size()), static_cast<double>(want), J.size() == want);
      std::uint64_t total = 0;
      for (const auto& j : J) total += multiplicity(j);
      std::uint64_t nm = 1;
      for (int k = 0; k < m; ++k) nm *= static_cast<std::uint64_t>(n);
      rec.add("sum_multiplicity", "", n, m, static_cast<double>(total), static_cast<double>(nm), total == nm);
    }
  }
  for (int m = 1; m <= 20; ++m) {
    for (int n = 1; n <= 20; ++n) {
      const auto c = count_Jm1(m, n);
      const std::uint64_t want = C[static_cast<std::size_t>(n + m - 2)][static_cast<std::size_t>(m - 1)];
      rec.add("count_Jm1_exact", "", n, m, static_cast<double>(c.exact), static_cast<double>(want), c.exact == want);
      rec.add("count_Jm1_envelope", "", n, m, static_cast<double>(c.exact), c.envelope,
              static_cast<double>(c.exact) <= c.envelope);
    }
  }
  return rec.take();
}

SuiteReport suite_lemma31(int instances, const Budget& budget, std::uint64_t seed) {
  Recorder rec("lemma31");
  for (int i = 0; i < instances; ++i) {
    const int m = 1 + i % 4;
    const int n = 1 + (i / 4) % 4;
    const Exponent p = kP3[(i / 16) % 3];
    const RandomPolynomialSpec spec{m, n, 1, p, Exponent(2.0), Ensemble::unimodular};
    const auto P = random_polynomial(spec, derive_seed(seed, "lemma31/" + std::to_string(i)));
    const double norm = supnorm_refined(P, budget, derive_seed(seed, "lemma31/norm/" + std::to_string(i)), 1e-4).value;
    const Exponent pd = p.dual();
    const double e_factor = m * std::exp(1.0 + (m - 1) * p.reciprocal());
    for (const auto& j : enumerate_J(m - 1, n)) {
      const int first = j.empty() ? 1 : j.back();
      std::vector<double> c;
      for (int k = first; k <= n; ++k) {
        auto jk = j;
        jk.push_back(k);
        const MultiIndex alpha = j_to_alpha(jk, n);
        double v = 0.0;
        for (const auto& t : P.terms()) {
          if (t.alpha == alpha) v = std::abs(t.coeff[0]);
        }
        c.push_back(v);
      }
      const double lhs = lp_norm(std::span<const double>(c), pd);
      const double mult = static_cast<double>(multiplicity(j));
      const double rhs = e_factor * std::pow(mult, p.reciprocal()) * norm;
      std::string tag = "j=(";
      for (std::size_t k = 0; k < j.size(); ++k) tag += (k ? "," : "") + std::to_string(j[k]);
      tag += ")";
      rec.add("lemma31", p.to_string(), n, m, lhs, rhs, lhs <= rhs * (1.0 + 1e-6), tag);
    }
  }
  return rec.take();
}

SuiteReport suite_bombal(int instances, const Budget& budget, std::uint64_t seed) {
  Recorder rec("bombal");
  // diagonal identity A(z,...,z) = P(z)
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 4;
    const int n = 1 + (i / 4) % 4;
    const int d = 1 + (i / 16) % 2;
    const Exponent p = kP3[(i / 32) % 3];
    const RandomPolynomialSpec spec{m, n, d, p, Exponent(2.0), Ensemble::complex_gaussian};
    const auto P = random_polynomial(spec, derive_seed(seed, "polar/" + std::to_string(i)));
    const SymmetricForm A(P);
    Rng rng(derive_seed(seed, "polar/z/" + std::to_string(i)));
    CVector z(static_cast<std::size_t>(n));
    for (auto& v : z) v = rng.complex_normal();
    const std::vector<CVector> args(static_cast<std::size_t>(m), z);
    const CVector a = A(args);
    const CVector b = P.evaluate(z);
    double diff = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      diff = std::max(diff, std::abs(a[k] - b[k]));
      scale = std::max(scale, std::abs(b[k]));
    }
    rec.add("polarization_diagonal", p.to_string(), n, m, diff, 1e-12 * scale, diff <= 1e-12 * scale);
  }
  // coefficient inequality at p = inf into l_2^d, C_2 = 1
  const Exponent inf = Exponent::infinity();
  for (int i = 0; i < instances; ++i) {
    const int m = 1 + i % 3;
    const int n = 1 + (i / 3) % 3;
    const int d = 1 + (i / 9) % 3;
    const RandomPolynomialSpec spec{m, n, d, inf, Exponent(2.0), Ensemble::complex_gaussian};
    const auto P = random_polynomial(spec, derive_seed(seed, "bombal/" + std::to_string(i)));
    const SymmetricForm A(P);
    const double lhs = multilinear_coefficient_norm(A, Exponent(2.0));
    const double a_lower =
        multilinear_supnorm_lower(A, budget, derive_seed(seed, "bombal/norm/" + std::to_string(i))).value;
    const double a_upper = polarization_constant(m) * supnorm_upper(P);
    const std::string tag = "d=" + std::to_string(d);
    rec.add("bombal_sound", inf.to_string(), n, m, lhs, a_upper, lhs <= a_upper * (1.0 + 1e-9), tag);
    rec.add("polarization_bound", inf.to_string(), n, m, a_lower, a_upper, a_lower <= a_upper * (1.0 + 1e-9), tag);
    if (n * m <= 12) {
      // sign vertices are searched exhaustively here, so the lower value
      // already dominates the Rademacher average on the left
      rec.add("bombal_strong", inf.to_string(), n, m, lhs, a_lower, lhs <= a_lower * (1.0 + 1e-9), tag);
    }
  }
  return rec.take();
}

ExperimentConfig default_suite_grid() {
  ExperimentConfig c;
  c.seed = 7;
  c.p = {Exponent(1.0), Exponent(2.0), Exponent::infinity()};
  c.n = {1, 2, 3};
  c.lambda = {1.5, 2.0};
  c.operators = {"scalar"};
  CorpusSpec mob;
  mob.family = "mobius_axis";
  mob.a = a_grid(0.1, 0.9, 0.1);
  CorpusSpec rnd;
  rnd.family = "random";
  rnd.degrees = {1, 2};
  rnd.count = 2;
  c.corpus = {mob, rnd};
  return c;
}

SuiteReport suite_from_grid(const std::string& suite, const std::string& prefix, const ExperimentConfig& grid) {
  const auto res = run_experiment(grid);
  SuiteReport r;
  r.suite = suite;
  const auto& cols = res.checks.columns();
  const auto col = [&](const char* name) {
    return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), name) - cols.begin());
  };
  const std::size_t c_name = col("check"), c_lhs = col("lhs"), c_rhs = col("rhs"), c_pass = col("passed");
  for (const auto& row : res.checks.rows()) {
    if (row[c_name].rfind(prefix, 0) != 0) continue;
    r.rows.add_row(row);
    ++r.checks;
    if (row[c_pass] != "1") ++r.failures;
    const double lhs = std::stod(row[c_lhs]), rhs = std::stod(row[c_rhs]);
    r.worst = std::max(r.worst, (lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return r;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& o) {
  if (suite == "combinatorics") return suite_combinatorics();
  if (suite == "lemma31") return suite_lemma31(o.instances > 0 ? o.instances : 500, o.budget, o.seed);
  if (suite == "bombal") return suite_bombal(o.instances > 0 ? o.instances : 81, o.budget, o.seed);
  if (suite == "sandwich" || suite == "arithmetic_lemma") {
    ExperimentConfig g = o.grid ? *o.grid : default_suite_grid();
    if (suite == "sandwich") {
      g.sandwich = true;
      g.arithmetic = false;
      return suite_from_grid(suite, "sandwich", g);
    }
    g.arithmetic = true;
    return suite_from_grid(suite, "arithmetic", g);
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace bohrlab
