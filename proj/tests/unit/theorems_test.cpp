#include <gtest/gtest.h>

#include "gpg/errors.hpp"
#include "gpg/sampler.hpp"
#include "gpg/theorems.hpp"

using gpg::GParams;
using gpg::Rational;

namespace {
GParams sample_params() {
  GParams p;
  p.k = 2;
  p.alpha = 1;
  p.rho = Rational(-1, 3);
  p.lambda = Rational(2, 3);
  p.u = Rational(3, 2);
  p.log_a = Rational(1, 2);
  p.log_b = -1;
  return p;
}

Rational oracle(std::size_t n, const GParams& p, const gpg::Point& pt) {
  const std::size_t a = static_cast<std::size_t>(p.alpha);
  Rational falling(1);
  for (std::size_t i = 1; i <= a; ++i) falling = falling * Rational(static_cast<long>(n + i));
  return gpg::ghat(n + a, p, pt.x, pt.y, pt.z) / falling;
}
}  // namespace

TEST(ExplicitOrder1, MatchesOracle) {
  const GParams p = sample_params();
  const gpg::Point pt{Rational(1, 2), 2, Rational(-1, 3)};
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(gpg::explicit_order1(n, p, pt.x, pt.y, pt.z), oracle(n, p, pt)) << n;
}

TEST(ExplicitOrder1, ZeroFrobeniusParameterUsesTheOtherExpansion) {
  GParams p = sample_params();
  p.u = 0;
  const gpg::Point pt{1, 0, 1};
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(gpg::explicit_order1(n, p, pt.x, pt.y, pt.z), oracle(n, p, pt)) << n;
}

TEST(ExplicitHigher, MatchesOracleForEachOrder) {
  for (int alpha = 1; alpha <= 3; ++alpha) {
    GParams p = sample_params();
    p.alpha = alpha;
    const gpg::Point pt{Rational(-1, 2), 1, Rational(1, 3)};
    for (std::size_t n = 0; n <= 6; ++n)
      EXPECT_EQ(gpg::explicit_higher(n, p, pt.x, pt.y, pt.z), oracle(n, p, pt)) << alpha << " " << n;
  }
  GParams p = sample_params();
  p.alpha = 2;
  p.lambda = 0;
  EXPECT_EQ(gpg::explicit_higher(4, p, 1, 1, 1), oracle(4, p, {1, 1, 1}));
}

TEST(Explicit, PreconditionErrors) {
  GParams p = sample_params();
  p.alpha = 2;
  EXPECT_THROW(gpg::explicit_order1(2, p, 0, 0, 0), std::invalid_argument);
  p.alpha = 1;
  p.lambda = p.u;
  EXPECT_THROW(gpg::explicit_order1(2, p, 0, 0, 0), gpg::PoleAtOne);
  EXPECT_THROW(gpg::explicit_higher(2, p, 0, 0, 0), gpg::PoleAtOne);
  p = sample_params();
  p.k = 0;
  EXPECT_THROW(gpg::explicit_higher(2, p, 0, 0, 0), std::invalid_argument);
}

TEST(Explicit, LiteralReadingsDisagreeWithTheOracle) {
  const GParams p = sample_params();
  const gpg::Point pt{Rational(1, 2), 2, Rational(-1, 3)};
  int misses = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    if (gpg::literal::explicit_order1(n, p, pt.x, pt.y, pt.z) != oracle(n, p, pt)) ++misses;
  EXPECT_GT(misses, 0);
}

TEST(Addition, MatchesValueAtSummedPoint) {
  GParams p = sample_params();
  p.alpha = 2;
  const gpg::Point a{Rational(1, 2), -1, 2}, b{Rational(-1, 3), Rational(3, 2), 1};
  for (std::size_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(gpg::addition(n, p, a, b), gpg::ghat(n, p, a.x + b.x, a.y + b.y, a.z + b.z)) << n;
    EXPECT_EQ(gpg::addition(n, p, a, gpg::Point{}), gpg::ghat(n, p, a.x, a.y, a.z)) << n;
  }
}

TEST(PolyExpand, BothStagesMatchThePolynomialOracle) {
  GParams p = sample_params();
  p.alpha = 2;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto want = gpg::ghat_poly(n, p);
    EXPECT_EQ(gpg::poly_expand_stage1(n, p), want) << n;
    EXPECT_EQ(gpg::poly_expand(n, p), want) << n;
  }
  EXPECT_TRUE(gpg::poly_expand(1, p).is_zero());
}

TEST(Suites, DeterministicAndPassing) {
  const auto a = gpg::run_suite("explicit", 6, 4, 11);
  const auto b = gpg::run_suite("explicit", 6, 4, 11);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(gpg::to_json(a).dump(), gpg::to_json(b).dump());
  EXPECT_EQ(a.deviations.size(), 4u);
  EXPECT_THROW(gpg::run_suite("nosuch", 4, 1, 1), gpg::UnknownSuite);
  EXPECT_THROW(gpg::run_suite("anchor", 4, 0, 1), std::invalid_argument);
}

TEST(Sampler, DrawsAreReproducibleAndAdmissible) {
  gpg::Sampler s1(99), s2(99);
  for (int i = 0; i < 50; ++i) {
    const GParams a = s1.params(2), b = s2.params(2);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_NE(a.lambda, a.u);
    EXPECT_GE(a.k, 1);
    EXPECT_LE(a.k, 3);
    EXPECT_FALSE(s1.nonzero_rational(3, 3).is_zero());
    s2.nonzero_rational(3, 3);
  }
}
