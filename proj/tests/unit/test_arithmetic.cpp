#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/arithmetic.hpp"
#include "bohrlab/radii.hpp"

using namespace bohrlab;

namespace {

const SpaceSpec kC(Exponent(2.0), 1);
const auto kScalar = OperatorModel::scalar();

std::vector<CorpusMember> mobius_corpus(Exponent p, int n) {
  std::vector<CorpusMember> c;
  for (int v = 0; v < n; ++v)
    for (double a : a_grid(0.1, 0.99, 0.01)) c.push_back(mobius_axis(p, n, kC, a, 60, v));
  return c;
}

}  // namespace

TEST(Arithmetic, RadiusVector) {
  RadiusVector r({0.5, 0.25});
  EXPECT_DOUBLE_EQ(r.mean(), 0.375);
  r.set(1, 0.75);
  EXPECT_DOUBLE_EQ(r.mean(), 0.625);
  EXPECT_THROW(r.set(0, -0.1), std::invalid_argument);
  EXPECT_THROW(RadiusVector({0.1, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(RadiusVector::constant(0, 0.1), std::invalid_argument);
  EXPECT_EQ(RadiusVector::constant(3, 0.2).values(), std::vector<double>(3, 0.2));
}

TEST(Arithmetic, CheckSlack) {
  const std::vector<CorpusMember> c{coordinate_member(Exponent(2.0), 1, kC)};
  const auto chk = feasible(RadiusVector({1.0}), c, kScalar, 1.0);
  EXPECT_TRUE(chk.feasible);
  EXPECT_DOUBLE_EQ(chk.slack, 0.0);
  EXPECT_FALSE(feasible(RadiusVector({1.01}), c, kScalar, 1.0).feasible);
}

TEST(Arithmetic, MobiusFeasibility) {
  const auto c = mobius_corpus(Exponent(2.0), 1);
  EXPECT_TRUE(feasible(RadiusVector({1.0 / 3.0 - 1e-6}), c, kScalar, 1.0).feasible);
  // a = 0.99 alone is violated a bit above its own radius
  const auto f = mobius_axis(Exponent(2.0), 1, kC, 0.99, 60);
  const double r = function_bohr_radius(f, kScalar, 1.0, {}).radius;
  const auto chk = feasible(RadiusVector({r + 1e-6}), c, kScalar, 1.0);
  EXPECT_FALSE(chk.feasible);
  EXPECT_EQ(chk.worst, f.id);
}

TEST(Arithmetic, OneVariableMatchesK) {
  const auto c = mobius_corpus(Exponent(2.0), 1);
  const ArithmeticProblem prob(c, kScalar, 1.0);
  const auto res = maximize_mean(prob, {});
  const auto k = estimate_K_upper(c, kScalar, 1.0, {});
  EXPECT_NEAR(res.mean, 1.0 / 3.0, 3e-3);
  EXPECT_NEAR(res.mean, k.value, 1e-9);
  EXPECT_EQ(res.method, "diagonal");
}

TEST(Arithmetic, ProductOnPolydiscHitsCap) {
  // z1 z2 on l_inf: sum |c| r1 r2 = r1 r2 <= 1 everywhere in the unit cube
  const auto P = scalar_polynomial(SpaceSpec(Exponent::infinity(), 2), {{MultiIndex({1, 1}), 1.0}});
  const std::vector<CorpusMember> c{estimated_member("z1z2", P, {4, 50}, 1)};
  const ArithmeticProblem prob(c, kScalar, 1.0);
  const auto res = maximize_mean(prob, {});
  EXPECT_NEAR(res.mean, 1.0, 1e-12);
  EXPECT_EQ(res.capped_coords, 2);
}

TEST(Arithmetic, AsymmetricCorpusUsesCoordinateAscent) {
  // Moebius atoms only in z1: z2 is free up to the cap
  std::vector<CorpusMember> c;
  for (double a : {0.5, 0.9}) c.push_back(mobius_axis(Exponent(2.0), 2, kC, a, 60, 0));
  const ArithmeticProblem prob(c, kScalar, 1.0);
  ArithmeticOptions o;
  o.r_cap = 1.0;
  const auto res = maximize_mean(prob, o);
  EXPECT_TRUE(prob.check(res.r).feasible);
  EXPECT_NEAR(res.r[1], 1.0, 1e-12);
  EXPECT_NEAR(res.r[0], 1.0 / 2.8, 2e-3);
  EXPECT_EQ(res.method, "coordinate_ascent");
}

TEST(Arithmetic, MeanMonotoneInLambda) {
  const auto c = mobius_corpus(Exponent(2.0), 2);
  double prev = 0.0;
  for (double lambda : {1.0, 1.2, 1.4}) {
    const ArithmeticProblem prob(c, kScalar, lambda);
    const auto res = maximize_mean(prob, {2, 2, 1.0, 1e-10, 3});
    EXPECT_GE(res.mean, prev - 1e-9);
    EXPECT_TRUE(prob.check(res.r).feasible);
    prev = res.mean;
  }
}

TEST(Arithmetic, ScaleInvariance) {
  // scaling every member and its norm by 2 leaves the constraints unchanged
  auto c = mobius_corpus(Exponent(2.0), 1);
  auto s = c;
  for (auto& f : s) {
    f.polynomial = f.polynomial.scaled(2.0);
    f.norm.lower *= 2.0;
    f.norm.upper *= 2.0;
  }
  const auto a = maximize_mean(ArithmeticProblem(c, kScalar, 1.1), {});
  const auto b = maximize_mean(ArithmeticProblem(s, kScalar, 1.1), {});
  EXPECT_EQ(a.mean, b.mean);
}

TEST(Arithmetic, InfeasibleAtZero) {
  CorpusMember f{"c", scalar_polynomial(kC, {{MultiIndex({0}), 2.0}, {MultiIndex({1}), 1.0}}), {3.0, 3.0, "exact"}, {}};
  const auto res = maximize_mean(ArithmeticProblem({f}, kScalar, 0.5), {});
  EXPECT_TRUE(res.infeasible_at_zero);
  EXPECT_EQ(res.mean, 0.0);
}

TEST(Arithmetic, ConstructiveLower) {
  const double k = 1.0 / 3.0, t = k * (1 - 1e-6);
  EXPECT_EQ(constructive_lower(k, Exponent::infinity(), 4).values(), std::vector<double>(4, t));
  EXPECT_NEAR(constructive_lower(k, Exponent(1.0), 5).mean(), t / 5, 1e-16);
  EXPECT_NEAR(constructive_lower(k, Exponent(2.0), 4).mean(), t / 2, 1e-16);
  EXPECT_THROW(constructive_lower(0.0, Exponent(2.0), 4), std::invalid_argument);
}

TEST(Arithmetic, ConstructiveVectorIsFeasible) {
  for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::infinity()}) {
    const auto c = mobius_corpus(p, 3);
    const auto k = estimate_K_upper(c, kScalar, 1.5, {});
    const auto r = constructive_lower(k.value, p, 3);
    EXPECT_TRUE(feasible(r, c, kScalar, 1.5).feasible);
    const auto res = maximize_mean(ArithmeticProblem(c, kScalar, 1.5), {2, 2, 1.0, 1e-10, 1});
    EXPECT_GE(res.mean, r.mean() - 1e-12);
  }
}
