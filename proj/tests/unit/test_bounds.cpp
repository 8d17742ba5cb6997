#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/bounds.hpp"

using namespace bohrlab;

namespace {
const Exponent kInf = Exponent::infinity();
const double e = std::numbers::e;
}  // namespace

TEST(Bounds, Prop22Constant) {
  EXPECT_DOUBLE_EQ(prop22_constant(1.0, 2.0), 0.5);
  // ||V|| < 1: max(gap/(gap+1), gap/(2 lambda - ||V||))
  EXPECT_DOUBLE_EQ(prop22_constant(0.5, 1.0), std::max(0.5 / 1.5, 0.5 / 1.5));
  EXPECT_DOUBLE_EQ(prop22_constant(0.25, 2.0), std::max(1.75 / 2.75, 1.75 / 3.75));
  // large ||V||: the second branch wins
  EXPECT_DOUBLE_EQ(prop22_constant(3.0, 3.5), std::max(0.5 / (1.5 * 3.0), 0.5 / 4.0));
  EXPECT_THROW(prop22_constant(2.0, 2.0), std::invalid_argument);
  EXPECT_THROW(prop22_constant(0.0, 2.0), std::invalid_argument);
}

TEST(Bounds, GeneralAndCorollary) {
  EXPECT_DOUBLE_EQ(lower_bound_general(Exponent(1.0), 7, 2.0, 1.0), 0.5);
  EXPECT_NEAR(lower_bound_general(Exponent(2.0), 4, 2.0, 1.0), 0.25, 1e-15);
  EXPECT_NEAR(corollary_identity_lower(kInf, 3, 1.5), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(corollary_identity_lower(Exponent(2.0), 9, 2.0), 0.5 / 3.0, 1e-15);
  EXPECT_THROW(corollary_identity_lower(Exponent(2.0), 2, 1.0), std::invalid_argument);
  EXPECT_THROW(lower_bound_general(Exponent(2.0), 0.5, 2.0, 1.0), std::invalid_argument);
}

TEST(Bounds, CotypeBranches) {
  const Exponent q(2.0);  // r = 2
  EXPECT_EQ(cotype_dual(Exponent(4.0)), Exponent(4.0 / 3.0));
  EXPECT_THROW(cotype_dual(Exponent(1.5)), std::invalid_argument);
  // upper
  EXPECT_NEAR(cotype_bounds(Exponent(2.0), 16, 1.5, q, 1.0, Direction::upper), 1.5 / 4.0, 1e-15);
  EXPECT_NEAR(cotype_bounds(kInf, 16, 1.5, q, 1.0, Direction::upper), 1.5 / 4.0, 1e-15);
  EXPECT_NEAR(cotype_bounds(Exponent(1.0), 16, 1.5, q, 1.0, Direction::upper), 1.5, 1e-15);
  // lower, p <= r: no n dependence and no constant
  EXPECT_NEAR(cotype_bounds(Exponent(1.5), 100, 2.0, q, 99.0, Direction::lower), 0.5 / e, 1e-15);
  EXPECT_FALSE(cotype_lower_needs_constant(Exponent(2.0), q));
  EXPECT_TRUE(cotype_lower_needs_constant(kInf, q));
  // lower, p = inf: n^-(1/2)/C_q
  EXPECT_NEAR(cotype_bounds(kInf, 4, 2.0, q, 2.0, Direction::lower), 0.5 / (2.0 * e * 2.0), 1e-15);
  EXPECT_THROW(cotype_bounds(kInf, 4, 2.0, q, 0.5, Direction::lower), std::invalid_argument);
  EXPECT_THROW(cotype_bounds(kInf, 4, 1.0, q, 1.0, Direction::lower), std::invalid_argument);
}

TEST(Bounds, CotypeOperatorLower) {
  // lambda / ||V|| = 2
  EXPECT_NEAR(cotype_operator_lower(Exponent(1.0), 3, 3.0, 1.5, Exponent(2.0), 1.0), 0.5 / e, 1e-15);
  EXPECT_THROW(cotype_operator_lower(Exponent(1.0), 3, 1.0, 1.5, Exponent(2.0), 1.0), std::invalid_argument);
}

TEST(Bounds, ArithmeticCotype) {
  const Exponent q(2.0);
  EXPECT_NEAR(arithmetic_cotype_bounds(Exponent(2.0), 4, 1.5, q, 1.0, Direction::upper), 1.5 / 4, 1e-15);
  EXPECT_NEAR(arithmetic_cotype_bounds(Exponent(4.0), 16, 1.5, q, 1.0, Direction::upper),
              1.5 * std::pow(16.0, -0.75), 1e-15);
  EXPECT_NEAR(arithmetic_cotype_bounds(Exponent(1.0), 4, 2.0, q, 1.0, Direction::lower), 0.5 / e / 4, 1e-15);
  EXPECT_NEAR(arithmetic_cotype_bounds(kInf, 4, 2.0, q, 3.0, Direction::lower), 0.5 / e / 3 / 2, 1e-15);
}

TEST(Bounds, RhoExponent) {
  EXPECT_DOUBLE_EQ(rho_exponent(Exponent(2.0), Exponent(1.0), 2), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(rho_exponent(Exponent(4.0), Exponent(2.0), 1), 2.0);
  // m -> inf tends to q
  EXPECT_NEAR(rho_exponent(Exponent(4.0), Exponent(2.0), 100000), 4.0, 1e-4);
  EXPECT_THROW(rho_exponent(kInf, Exponent(2.0), 1), std::invalid_argument);
  EXPECT_THROW(rho_exponent(Exponent(2.0), Exponent(3.0), 1), std::invalid_argument);
  EXPECT_THROW(rho_exponent(Exponent(2.0), Exponent(1.0), 0), std::invalid_argument);
}

TEST(Bounds, Envelopes) {
  const double n = 100, L = std::log(n);
  EnvelopeParams ep;
  EXPECT_NEAR(envelope(kInf, n, 2.0, EnvelopeKind::main_lower, ep), (1.0 / 3.0) * std::sqrt(L / n), 1e-15);
  EXPECT_NEAR(envelope(Exponent(1.5), n, 2.0, EnvelopeKind::main_upper, ep), 4.0 * std::pow(L / n, 1.0 / 3.0), 1e-14);
  EXPECT_NEAR(envelope(Exponent(1.0), n, 2.0, EnvelopeKind::main_upper, ep), 4.0, 1e-15);
  EXPECT_NEAR(envelope(Exponent(4.0), n, 2.0, EnvelopeKind::arithmetic_upper, ep),
              std::sqrt(L) / std::pow(n, 0.75), 1e-15);
  EXPECT_NEAR(envelope(Exponent(1.0), n, 2.0, EnvelopeKind::arithmetic_upper, ep), 1.0 / n, 1e-15);
  ep.q = Exponent(4.0);
  EXPECT_NEAR(envelope(Exponent(2.0), n, 2.0, EnvelopeKind::arithmetic_lower, ep),
              0.1 * std::pow(L / n, 0.75), 1e-15);
  EXPECT_NEAR(envelope(Exponent(2.0), n, 2.0, EnvelopeKind::operator_theorem12, ep), std::pow(L / n, 0.75), 1e-15);
  ep.opnorm = 1.0;
  ep.C = 2.0;
  EXPECT_NEAR(envelope(Exponent(2.0), n, 2.0, EnvelopeKind::concave_operator_lower, ep),
              2.0 / 3.0 * std::pow(L / n, 0.75), 1e-15);
  EXPECT_THROW(envelope(Exponent(2.0), 1.5, 2.0, EnvelopeKind::main_upper), std::invalid_argument);
  for (auto k : {EnvelopeKind::main_lower, EnvelopeKind::main_upper, EnvelopeKind::arithmetic_lower,
                 EnvelopeKind::arithmetic_upper, EnvelopeKind::concave_operator_lower,
                 EnvelopeKind::operator_theorem12})
    EXPECT_EQ(parse_envelope_kind(to_string(k)), k);
  EXPECT_THROW(parse_envelope_kind("x"), std::invalid_argument);
}

TEST(Bounds, EmbeddingBranches) {
  EXPECT_EQ(embedding_branch(Exponent(3.0), Exponent(1.5)), "1<=r<2");
  EXPECT_EQ(embedding_branch(Exponent(2.0), Exponent(2.0)), "p<=r,r>=2");
  EXPECT_EQ(embedding_branch(Exponent(3.0), Exponent(2.0)), "r<p,r>=2");
  const double n = 64;
  // r = 2 sits in the cotype branch
  EXPECT_NEAR(embedding_bounds(Exponent(1.0), Exponent(2.0), Exponent(4.0), n, 1.5, Direction::lower), 1.0 / e, 1e-15);
  EXPECT_NEAR(embedding_bounds(kInf, Exponent(2.0), Exponent(4.0), n, 1.5, Direction::lower), 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(embedding_bounds(kInf, Exponent(2.0), Exponent(4.0), n, 1.5, Direction::upper), 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(embedding_bounds(Exponent(1.5), Exponent(1.0), Exponent(2.0), n, 1.5, Direction::lower),
              std::sqrt(std::log(n) / n), 1e-15);
  EXPECT_NEAR(embedding_bounds(Exponent(2.0), Exponent(2.0), Exponent(4.0), n, 1.5, Direction::upper, RadiusKind::A),
              1.0 / n, 1e-15);
  EXPECT_THROW(embedding_bounds(Exponent(2.0), Exponent(4.0), Exponent(2.0), n, 1.5, Direction::upper),
               std::invalid_argument);
  EXPECT_THROW(embedding_bounds(Exponent(2.0), Exponent(1.0), Exponent(2.0), 1, 1.5, Direction::upper),
               std::invalid_argument);
}

TEST(Bounds, BombieriClosedForm) {
  EXPECT_DOUBLE_EQ(bombieri_closed_form(1.0), 1.0 / 3.0);
  EXPECT_NEAR(bombieri_closed_form(std::sqrt(2.0)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(bombieri_closed_form(1.2), 1.0 / (3.6 - 2.0 * std::sqrt(0.88)), 1e-15);
  double prev = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double v = bombieri_closed_form(1.0 + (std::sqrt(2.0) - 1.0) * i / 40.0);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_THROW(bombieri_closed_form(0.9), std::invalid_argument);
  EXPECT_THROW(bombieri_closed_form(1.5), std::invalid_argument);
}

TEST(Bounds, SandwichFactors) {
  EXPECT_DOUBLE_EQ(sandwich_factor(1.0, 2.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(sandwich_factor_unit(1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(sandwich_factor(0.0, 2.0), 0.5);
  EXPECT_THROW(sandwich_factor(2.0, 2.0), std::invalid_argument);
}

TEST(Bounds, KmLowerCauchy) {
  // m = 1: (lambda/(||V|| n))
  EXPECT_NEAR(km_lower_cauchy_degree(4, 1, 2.0, 1.0), 0.5, 1e-14);
  // m = 2, n = 3: card 6
  EXPECT_NEAR(km_lower_cauchy_degree(3, 2, 1.5, 1.0), std::sqrt(1.5 / 6.0), 1e-14);
  EXPECT_DOUBLE_EQ(km_lower_cauchy_degree(1, 3, 2.0, 1.0), 1.0);
  for (int n : {1, 2, 5}) {
    double want = 1.0;
    for (int m = 1; m <= 64; ++m) want = std::min(want, km_lower_cauchy_degree(n, m, 1.5, 1.0));
    EXPECT_DOUBLE_EQ(km_lower_cauchy(n, 1.5, 1.0), want);
  }
  EXPECT_THROW(km_lower_cauchy(2, 1.5, 0.0), std::invalid_argument);
}

TEST(Bounds, ArithmeticFromK) {
  EXPECT_DOUBLE_EQ(arithmetic_from_k(0.5, Exponent(2.0), 4), 0.25);
  EXPECT_DOUBLE_EQ(arithmetic_from_k(0.5, kInf, 4), 0.5);
}

TEST(Bounds, LowerBoundListRespectsHypotheses) {
  BoundContext ctx;
  ctx.p = Exponent(2.0);
  ctx.n = 4;
  ctx.lambda = 1.0;
  ctx.source = SpaceSpec(Exponent(2.0), 1);
  ctx.target = ctx.source;
  // lambda = 1 with ||V|| = 1: nothing applies
  EXPECT_TRUE(k_lower_bounds(ctx).empty());
  ctx.lambda = 2.0;
  const auto b = k_lower_bounds(ctx);
  ASSERT_FALSE(b.empty());
  for (const auto& v : b) {
    EXPECT_EQ(v.direction, Direction::lower);
    EXPECT_GT(v.value, 0.0);
  }
  for (const auto& v : formula_table(ctx)) EXPECT_TRUE(std::isfinite(v.value)) << v.theorem;
}
