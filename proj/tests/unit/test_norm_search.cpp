#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/norm_search.hpp"
#include "bohrlab/rng.hpp"

using namespace bohrlab;

namespace {

SpaceSpec dom(double p, int n) { return SpaceSpec(std::isinf(p) ? Exponent::infinity() : Exponent(p), n); }
const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST(NormSearch, SpecExamplesLower) {
  const Budget b{16, 100};
  const auto P = scalar_polynomial(dom(2, 2), {{MultiIndex({1, 1}), 1.0}});
  EXPECT_GE(supnorm_lower(P, b, 1).value, 0.4999);
  EXPECT_LE(supnorm_lower(P, b, 1).value, 0.5 + 1e-12);

  for (double p : {1.0, 2.0, 3.0, kInf}) {
    const auto Z = scalar_polynomial(dom(p, 3), {{MultiIndex({1, 0, 0}), 1.0}});
    EXPECT_GE(supnorm_lower(Z, b, 2).value, 1.0 - 1e-9);
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<MultiIndex, Complex>> t;
    for (int k = 0; k < n; ++k) t.push_back({MultiIndex::unit(n, k), 1.0});
    EXPECT_GE(supnorm_lower(scalar_polynomial(dom(kInf, n), t), b, 3).value, n - 1e-6);
  }
}

TEST(NormSearch, SpecExamplesUpper) {
  EXPECT_DOUBLE_EQ(supnorm_upper(scalar_polynomial(dom(2, 2), {{MultiIndex({1, 1}), 1.0}})), 0.5);
  EXPECT_DOUBLE_EQ(
      supnorm_upper(scalar_polynomial(dom(kInf, 2), {{MultiIndex({1, 0}), 1.0}, {MultiIndex({0, 1}), 1.0}})), 2.0);
  // z1 - z2 on l_1: true sup 1; exact Hoelder value for linear forms is max|c| = 1
  const auto L = scalar_polynomial(dom(1, 2), {{MultiIndex({1, 0}), 1.0}, {MultiIndex({0, 1}), -1.0}});
  EXPECT_GE(supnorm_upper(L), 1.0 - 1e-15);
  EXPECT_GE(supnorm_lower(L, {8, 50}, 1).value, 1.0 - 1e-9);
  // a non-linear member shows the loose coefficient bound
  const auto Q = scalar_polynomial(dom(1, 2), {{MultiIndex({2, 0}), 1.0}, {MultiIndex({0, 2}), -1.0}});
  EXPECT_DOUBLE_EQ(supnorm_upper(Q), 2.0);
}

TEST(NormSearch, LinearFormsHitHoelder) {
  Rng rng(12);
  for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
    std::vector<std::pair<MultiIndex, Complex>> t;
    CVector c;
    for (int k = 0; k < 4; ++k) {
      c.push_back(rng.complex_normal());
      t.push_back({MultiIndex::unit(4, k), c.back()});
    }
    const Exponent pd = std::isinf(p) ? Exponent(1.0) : Exponent(p).dual();
    const double want = lp_norm(c, pd);
    const auto P = scalar_polynomial(dom(p, 4), t);
    EXPECT_NEAR(supnorm_upper(P), want, 1e-12 * want);
    EXPECT_GE(supnorm_lower(P, {8, 100}, 5).value, want * (1 - 1e-6));
  }
}

TEST(NormSearch, LowerNeverExceedsUpper) {
  const Exponent ps[] = {Exponent(1.0), Exponent(2.0), Exponent(3.0), Exponent::infinity()};
  int count = 0;
  for (int i = 0; i < 1000; ++i) {
    const int m = 1 + i % 4, n = 1 + (i / 4) % 4;
    const Ensemble e = (i / 16) % 2 ? Ensemble::complex_gaussian : Ensemble::unimodular;
    const auto P = random_polynomial({m, n, 1 + (i / 32) % 2, ps[(i / 64) % 4], Exponent(2.0), e},
                                     derive_seed(77, static_cast<std::uint64_t>(i)));
    const double lo = supnorm_lower(P, {2, 20}, static_cast<std::uint64_t>(i)).value;
    const double up = supnorm_upper(P);
    ASSERT_LE(lo, up * (1 + 1e-12)) << i;
    ++count;
  }
  EXPECT_EQ(count, 1000);
}

TEST(NormSearch, ArgmaxIsFeasibleAndAttains) {
  const auto P = random_polynomial({3, 3, 2, Exponent(3.0), Exponent(2.0), Ensemble::complex_gaussian}, 3);
  const auto r = supnorm_lower(P, {8, 100}, 1);
  EXPECT_LE(lp_norm(r.argmax, Exponent(3.0)), 1.0 + 1e-12);
  EXPECT_NEAR(lp_norm(P.evaluate(r.argmax), Exponent(2.0)), r.value, 1e-12 * r.value);
}

TEST(NormSearch, HomogeneousScaling) {
  // sup over rB of P is r^m times the sup over B: evaluate the argmax scaled
  const auto P = random_polynomial({3, 2, 1, Exponent(2.0), Exponent(2.0), Ensemble::unimodular}, 21);
  const auto r = supnorm_lower(P, {8, 100}, 2);
  CVector z = r.argmax;
  for (auto& v : z) v *= 0.5;
  EXPECT_NEAR(std::abs(P.evaluate(z)[0]), 0.125 * r.value, 1e-12);
}

TEST(NormSearch, RefinedIsMonotone) {
  const auto P = random_polynomial({4, 4, 1, Exponent(2.0), Exponent(2.0), Ensemble::unimodular}, 5);
  const double a = supnorm_lower(P, {4, 50}, 9).value;
  const double b = supnorm_refined(P, {4, 50}, 9).value;
  EXPECT_GE(b, a);
  EXPECT_EQ(supnorm_lower(P, {4, 50}, 9).value, a);  // deterministic
}

TEST(NormSearch, ZeroPolynomial) {
  const VectorPolynomial Z(dom(2, 2), SpaceSpec(Exponent(2.0), 1), {});
  EXPECT_EQ(supnorm_lower(Z, {4, 10}, 1).value, 0.0);
  EXPECT_EQ(supnorm_upper(Z), 0.0);
}

TEST(NormSearch, HelpersRespectGeometry) {
  const CVector y{{1.0, 1.0}, {0.0, -2.0}};
  for (double q : {1.0, 2.0, 3.0, kInf}) {
    const Exponent Q = std::isinf(q) ? Exponent::infinity() : Exponent(q);
    const auto phi = norming_functional(y, Q);
    Complex s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += phi[i] * y[i];
    EXPECT_NEAR(s.real(), lp_norm(y, Q), 1e-12);
    EXPECT_NEAR(s.imag(), 0.0, 1e-12);
    EXPECT_LE(lp_norm(phi, Q.dual()), 1.0 + 1e-12);
  }
  CVector z{3.0, {0.0, 4.0}};
  project_to_sphere(z, Exponent(2.0));
  EXPECT_NEAR(lp_norm(z, Exponent(2.0)), 1.0, 1e-15);
}
