#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/corpus.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/rng.hpp"

using namespace bohrlab;

namespace {
const auto kScalar = OperatorModel::scalar();
}

TEST(Majorant, SpecExamples) {
  const auto P = scalar_polynomial(SpaceSpec(Exponent(2.0), 2), {{MultiIndex({1, 1}), 1.0}});
  const std::vector<double> r{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  EXPECT_NEAR(majorant(P, kScalar, r), 0.5, 1e-15);

  const auto Q = random_polynomial({2, 2, 1, Exponent(2.0), Exponent(2.0), Ensemble::unimodular}, 1);
  std::vector<Term> terms = Q.terms();
  terms.push_back({MultiIndex::zero(2), {Complex(0.0, -0.75)}});
  const VectorPolynomial Qc(Q.domain(), Q.codomain(), terms);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_DOUBLE_EQ(majorant(Qc, kScalar, zero), 0.75);
}

TEST(Majorant, MobiusTruncationClosedForm) {
  for (double a : {0.1, 0.5, 0.9}) {
    const auto f = mobius_axis(Exponent(2.0), 1, SpaceSpec(Exponent(2.0), 1), a, 60);
    for (double r : {0.0, 0.2, 1.0 / 3.0, 0.9}) {
      double want = a, ak = 1.0, rk = 1.0;
      for (int k = 1; k <= 60; ++k) {
        rk *= r;
        want += (1 - a * a) * ak * rk;
        ak *= a;
      }
      const std::vector<double> x{r};
      EXPECT_NEAR(majorant(f.polynomial, kScalar, x), want, 1e-14);
    }
  }
}

TEST(Majorant, OperatorWeights) {
  // c = (1, 1) in l_1^2 pushed into l_2^2 has norm sqrt 2
  const auto V = OperatorModel::inclusion(Exponent(1.0), Exponent(2.0), 2);
  const VectorPolynomial P(SpaceSpec(Exponent(2.0), 1), SpaceSpec(Exponent(1.0), 2), {{MultiIndex({1}), {1.0, 1.0}}});
  const std::vector<double> r{1.0};
  EXPECT_NEAR(majorant(P, V, r), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(majorant(P, kScalar, r), std::invalid_argument);
}

TEST(Majorant, RejectsBadPoints) {
  const MajorantForm F(2, Exponent(2.0), {{MultiIndex({1, 0}), 1.0}});
  const std::vector<double> neg{-1.0, 0.0}, shortv{1.0};
  EXPECT_THROW(F(neg), std::invalid_argument);
  EXPECT_THROW(F(shortv), std::invalid_argument);
}

TEST(Majorant, GradientMatchesFiniteDifference) {
  const MajorantForm F(3, Exponent(2.0),
                       {{MultiIndex({2, 1, 0}), 0.7}, {MultiIndex({0, 1, 3}), 1.3}, {MultiIndex({1, 0, 0}), 0.2}});
  const std::vector<double> x{0.4, 0.5, 0.6};
  std::vector<double> g;
  const double v = F.value_and_gradient(x, 0.8, g);
  EXPECT_NEAR(v, F.at_scale(x, 0.8), 1e-15);
  for (std::size_t k = 0; k < 3; ++k) {
    auto xp = x, xm = x;
    xp[k] += 1e-6;
    xm[k] -= 1e-6;
    EXPECT_NEAR((F.at_scale(xp, 0.8) - F.at_scale(xm, 0.8)) / 2e-6, g[k], 1e-7);
  }
}

TEST(Majorant, SupExactAtInfinity) {
  const MajorantForm F(3, Exponent::infinity(), {{MultiIndex({1, 1, 0}), 2.0}, {MultiIndex({0, 0, 2}), 1.0}});
  EXPECT_DOUBLE_EQ(majorant_sup_lower(F, 0.5, 4, 50, 1).value, 0.75);
}

TEST(Majorant, SupOfLinearFormIsDualNorm) {
  // sup over the positive part of the l_p ball of sum b_k x_k is ||b||_{p'}
  const std::vector<double> b{0.3, 1.2, 0.7, 2.0};
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    std::vector<MajorantForm::Weight> w;
    for (int k = 0; k < 4; ++k) w.push_back({MultiIndex::unit(4, k), b[static_cast<std::size_t>(k)]});
    const MajorantForm F(4, Exponent(p), w);
    const double want = lp_norm(std::span<const double>(b), Exponent(p).dual());
    const double got = majorant_sup_lower(F, 1.0, 8, 200, 3).value;
    EXPECT_LE(got, want * (1 + 1e-12));
    EXPECT_GE(got, want * (1 - 1e-6)) << p;
  }
}

TEST(Majorant, SupOfMonomialIsMonomialMax) {
  const MajorantForm F(3, Exponent(2.0), {{MultiIndex({2, 1, 1}), 1.0}});
  const double want = monomial_max(MultiIndex({2, 1, 1}), Exponent(2.0));
  const double got = majorant_sup_lower(F, 1.0, 8, 300, 4).value;
  EXPECT_LE(got, want * (1 + 1e-12));
  EXPECT_GE(got, want * (1 - 1e-6));
}

TEST(Majorant, SearchNeverBelowUniformPoint) {
  const auto P = random_polynomial({3, 4, 1, Exponent(3.0), Exponent(2.0), Ensemble::complex_gaussian}, 8);
  const MajorantForm F(P, kScalar);
  MajorantSearch S(F, 4, 50, 2);
  const double u = std::pow(4.0, -1.0 / 3.0);
  const std::vector<double> uni(4, u);
  for (double t : {1.0, 0.5, 0.75, 0.2}) {
    EXPECT_GE(S(t), F.at_scale(uni, t) * (1 - 1e-15));
    EXPECT_LE(lp_norm(std::span<const double>(S.argmax()), Exponent(3.0)), 1 + 1e-12);
  }
}
