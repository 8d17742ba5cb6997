#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/bounds.hpp"
#include "bohrlab/radii.hpp"

using namespace bohrlab;

namespace {

const SpaceSpec kC(Exponent(2.0), 1);
const auto kScalar = OperatorModel::scalar();

// radius of the untruncated Moebius atom: a + (1-a^2) r / (1 - a r) = lambda
double mobius_radius(double a, double lambda) { return (lambda - a) / (1.0 + a * lambda - 2.0 * a * a); }

// root of the truncated series by plain bisection
double truncated_radius(double a, double lambda, int T) {
  auto S = [&](double r) {
    double s = a, ak = 1.0, rk = 1.0;
    for (int k = 1; k <= T; ++k) {
      rk *= r;
      s += (1 - a * a) * ak * rk;
      ak *= a;
    }
    return s;
  };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (S(mid) <= lambda ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

TEST(Radii, CoordinateIsCapped) {
  const auto f = coordinate_member(Exponent(2.0), 3, kC);
  const auto r = function_bohr_radius(f, kScalar, 1.0, {});
  EXPECT_EQ(r.radius, 1.0);
  EXPECT_TRUE(r.capped);
}

TEST(Radii, MobiusMatchesClosedForm) {
  for (double a : {0.3, 0.6, 0.9}) {
    for (double lambda : {1.0, 1.2}) {
      const auto f = mobius_axis(Exponent(2.0), 1, kC, a, 60);
      const auto r = function_bohr_radius(f, kScalar, lambda, {});
      EXPECT_NEAR(r.radius, truncated_radius(a, lambda, 60), 2e-9);
      // the truncated series is a bit smaller, so its radius is not below the full one
      EXPECT_GE(r.radius, mobius_radius(a, lambda) - 1e-9);
      EXPECT_NEAR(r.radius, mobius_radius(a, lambda), 2e-3);
      EXPECT_LE(r.hi - r.lo, 1e-9);
    }
  }
  const auto f = mobius_axis(Exponent(2.0), 1, kC, 0.9, 60);
  EXPECT_NEAR(function_bohr_radius(f, kScalar, 1.0, {}).radius, 1.0 / 2.8, 2e-3);
}

TEST(Radii, AxisAtomsIgnoreDimension) {
  const double want = function_bohr_radius(mobius_axis(Exponent(2.0), 1, kC, 0.5, 60), kScalar, 1.0, {}).radius;
  for (int n : {2, 4})
    for (Exponent p : {Exponent(1.0), Exponent(3.0), Exponent::infinity()}) {
      const auto f = mobius_axis(p, n, kC, 0.5, 60, n - 1);
      EXPECT_NEAR(function_bohr_radius(f, kScalar, 1.0, {}).radius, want, 1e-9);
    }
}

TEST(Radii, LargeLambdaCaps) {
  const auto f = mobius_axis(Exponent(2.0), 1, kC, 0.5, 60);
  // S(1) = 0.5 + 0.75 * sum 0.5^(k-1) < 2
  const auto r = function_bohr_radius(f, kScalar, 2.0, {});
  EXPECT_TRUE(r.capped);
  EXPECT_EQ(r.radius, 1.0);
}

TEST(Radii, ConstantAboveRhsGivesZero) {
  // 2 + z on the disk: norm 3, lambda 0.5 gives rhs 1.5 < 2
  CorpusMember f{"c", scalar_polynomial(kC, {{MultiIndex({0}), 2.0}, {MultiIndex({1}), 1.0}}), {3.0, 3.0, "exact"}, {}};
  EXPECT_EQ(function_bohr_radius(f, kScalar, 0.5, {}).radius, 0.0);
}

TEST(Radii, Rejects) {
  const auto f = mobius_axis(Exponent(2.0), 1, kC, 0.5, 60);
  RadiusOptions o;
  o.tol = 0.0;
  EXPECT_THROW(function_bohr_radius(f, kScalar, 1.0, o), std::invalid_argument);
  EXPECT_THROW(function_bohr_radius(f, kScalar, 0.0, {}), std::invalid_argument);
  CorpusMember z{"z", f.polynomial, {0.0, 0.0, "none"}, {}};
  EXPECT_THROW(function_bohr_radius(z, kScalar, 1.0, {}), std::invalid_argument);
  EXPECT_THROW(estimate_K_upper({}, kScalar, 1.0, {}), std::invalid_argument);
}

TEST(Radii, CorpusMinimumAndMonotone) {
  std::vector<CorpusMember> corpus;
  for (double a : a_grid(0.1, 0.99, 0.01)) corpus.push_back(mobius_axis(Exponent(2.0), 1, kC, a, 60));
  const auto est = estimate_K_upper(corpus, kScalar, 1.0, {});
  double m = 1.0;
  for (const auto& r : est.members) m = std::min(m, r.radius);
  EXPECT_EQ(est.value, m);
  EXPECT_GE(est.value, 1.0 / 3.0);
  EXPECT_LE(est.value, 1.0 / 3.0 + 5e-3);
  // adding members never raises the estimate, larger lambda never lowers it
  auto sub = std::vector<CorpusMember>(corpus.begin(), corpus.begin() + 40);
  EXPECT_GE(estimate_K_upper(sub, kScalar, 1.0, {}).value, est.value);
  double prev = 0.0;
  for (double lambda : {1.0, 1.1, 1.2, 1.3, std::sqrt(2.0)}) {
    const double v = estimate_K_upper(corpus, kScalar, lambda, {}).value;
    EXPECT_GE(v, prev);
    EXPECT_GE(v, bombieri_closed_form(lambda) - 1e-12);
    prev = v;
  }
}

TEST(Radii, KmLinear) {
  const std::vector<CorpusMember> c{coordinate_member(Exponent(2.0), 2, kC)};
  const auto k = estimate_Km_upper(c, kScalar, 1.5, {});
  EXPECT_EQ(k.m, 1);
  EXPECT_NEAR(k.raw, 1.5, 1e-12);
  EXPECT_EQ(k.capped, 1.0);
}

TEST(Radii, KmExactLambdaScaling) {
  const auto P = random_polynomial({2, 3, 1, Exponent(2.0), Exponent(2.0), Ensemble::unimodular}, 5);
  const std::vector<CorpusMember> c{estimated_member("P", P, {4, 50}, 1)};
  const auto a = estimate_Km_upper(c, kScalar, 1.0, {});
  const auto b = estimate_Km_upper(c, kScalar, 4.0, {});
  EXPECT_DOUBLE_EQ(b.raw, 2.0 * a.raw);
}

TEST(Radii, KmProductOfCoordinates) {
  for (Exponent p : {Exponent(2.0), Exponent::infinity()}) {
    const auto P = scalar_polynomial(SpaceSpec(p, 2), {{MultiIndex({1, 1}), 1.0}});
    const std::vector<CorpusMember> c{estimated_member("z1z2", P, {8, 100}, 1)};
    const auto k = estimate_Km_upper(c, kScalar, 1.0, {});
    EXPECT_NEAR(k.raw, 1.0, 1e-6);
    EXPECT_EQ(k.m, 2);
  }
}

TEST(Radii, KmRejectsMixedDegrees) {
  const SpaceSpec D(Exponent(2.0), 2);
  const std::vector<CorpusMember> c{
      estimated_member("a", scalar_polynomial(D, {{MultiIndex({1, 0}), 1.0}}), {2, 10}, 1),
      estimated_member("b", scalar_polynomial(D, {{MultiIndex({1, 1}), 1.0}}), {2, 10}, 1)};
  EXPECT_THROW(estimate_Km_upper(c, kScalar, 1.0, {}), std::invalid_argument);
  const std::vector<CorpusMember> nh{
      estimated_member("c", scalar_polynomial(D, {{MultiIndex({1, 0}), 1.0}, {MultiIndex({0, 0}), 1.0}}), {2, 10}, 1)};
  EXPECT_THROW(estimate_Km_upper(nh, kScalar, 1.0, {}), std::invalid_argument);
}

TEST(Radii, Sandwich) {
  const auto s = sandwich_check(0.4, 0.9, 0.5, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(s.lower_main, 0.3);
  EXPECT_DOUBLE_EQ(s.lower_unit, 0.25);
  EXPECT_NEAR(s.slack, 0.1, 1e-15);
  EXPECT_TRUE(s.passed);
  EXPECT_FALSE(sandwich_check(0.2, 0.9, 0.5, 1.0, 2.0).passed);
  EXPECT_THROW(sandwich_check(0.4, 0.9, 0.5, 2.0, 2.0), std::invalid_argument);
}

TEST(Radii, QuantityNames) {
  EXPECT_EQ(to_string(Quantity::K), "K");
  EXPECT_EQ(to_string(Quantity::Km), "K_m");
  EXPECT_EQ(to_string(Quantity::A), "A");
}
