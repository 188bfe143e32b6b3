#include <gtest/gtest.h>

#include "gpg/errors.hpp"
#include "gpg/families.hpp"

using gpg::FamilyId;
using gpg::GParams;
using gpg::Rational;

namespace {
std::vector<Rational> table(FamilyId id, const gpg::FamilyParams& f, std::size_t n) {
  return gpg::family_series(id, f, n).egf_all();
}
}  // namespace

// Reference values below come from an external computer-algebra expansion of
// the defining generating function.
TEST(Ghat, MatchesExternalOracle) {
  GParams p;
  p.k = 2;
  p.alpha = 2;
  p.lambda = 2;
  p.rho = Rational(1, 3);
  p.u = Rational(1, 2);
  p.log_a = 1;
  p.log_b = Rational(1, 2);
  const std::vector<Rational> expected{0, 0, Rational(1, 2), Rational(-15, 8), Rational(2129, 96),
                                       Rational(-50125, 288)};
  EXPECT_EQ(gpg::ghat_row(5, p, 1, 2, -1), expected);

  GParams q;
  q.k = 3;
  q.lambda = Rational(-1, 2);
  q.rho = Rational(-1, 2);
  q.u = 0;
  q.log_a = Rational(1, 3);
  q.log_b = -1;
  const std::vector<Rational> expected_q{0, Rational(4, 3), 5, Rational(2579, 162), Rational(3991, 27)};
  EXPECT_EQ(gpg::ghat_row(4, q, Rational(1, 2), 0, 3), expected_q);
}

TEST(Ghat, ClassicalGenocchiAnchor) {
  const std::vector<Rational> expected{0, 1, -1, 0, 1, 0, -3, 0, 17};
  EXPECT_EQ(gpg::ghat_row(8, GParams{}, 0, 0, 0), expected);
  EXPECT_EQ(gpg::ghat(2, GParams{}, 0, 0, 0), Rational(-1));
}

TEST(Ghat, ZeroNumeratorAtUnitFrobeniusParameter) {
  GParams p;
  p.u = 1;
  p.lambda = 2;
  for (const auto& v : gpg::ghat_row(6, p, 1, 2, 3)) EXPECT_TRUE(v.is_zero());
}

TEST(Ghat, PolynomialAgreesWithPointValues) {
  GParams p;
  p.k = 2;
  p.alpha = 2;
  p.rho = Rational(-1, 2);
  p.lambda = 3;
  p.u = Rational(1, 3);
  const auto row = gpg::ghat_row(6, p, Rational(2, 3), -1, Rational(1, 2));
  for (std::size_t n = 0; n <= 6; ++n)
    EXPECT_EQ(gpg::tripoly_eval(gpg::ghat_poly(n, p), Rational(2, 3), -1, Rational(1, 2)), row[n]) << n;
}

TEST(Ghat, DomainErrors) {
  GParams p;
  p.lambda = p.u = Rational(1, 2);
  EXPECT_THROW(gpg::ghat(3, p, 0, 0, 0), gpg::NonInvertibleConstantTerm);
  GParams q;
  q.alpha = 0;
  EXPECT_THROW(gpg::ghat(3, q, 0, 0, 0), std::invalid_argument);
}

TEST(Families, RegistryNamesRoundTrip) {
  EXPECT_EQ(gpg::all_families().size(), 18u);
  for (auto id : gpg::all_families()) EXPECT_EQ(gpg::family_from_name(gpg::family_name(id)), id);
  EXPECT_FALSE(gpg::family_from_name("nosuch").has_value());
}

TEST(Families, ClassicalTables) {
  gpg::FamilyParams f;
  EXPECT_EQ(table(FamilyId::genocchi, f, 4), (std::vector<Rational>{0, 1, -1, 0, 1}));
  f.x = f.y = f.z = 1;
  EXPECT_EQ(table(FamilyId::hermite3, f, 3), (std::vector<Rational>{1, 1, 3, 13}));
  // H_n(x, y) with x = 1, y = 1: 1, 1, 3, 7
  EXPECT_EQ(table(FamilyId::hermite2, f, 3), (std::vector<Rational>{1, 1, 3, 7}));
}

TEST(Families, PolyGenocchiOrderOneIsGenocchi) {
  gpg::FamilyParams f;
  f.x = Rational(1, 2);
  f.k = 1;
  EXPECT_EQ(table(FamilyId::poly_genocchi, f, 8), table(FamilyId::genocchi, f, 8));
}

TEST(Families, DegenerateFamiliesMatchExternalOracle) {
  gpg::FamilyParams f;
  f.lambda_deg = Rational(1, 2);
  EXPECT_EQ(table(FamilyId::deg_genocchi, f, 4), (std::vector<Rational>{0, 1, -1, Rational(3, 4), 0}));
  f.x = 2;
  EXPECT_EQ(table(FamilyId::carlitz_deg_bernoulli, f, 3),
            (std::vector<Rational>{1, Rational(7, 4), Rational(17, 8), Rational(45, 32)}));
}

TEST(Families, DegenerateLimitIsClassical) {
  gpg::FamilyParams f;
  f.x = Rational(1, 3);
  f.lambda_deg = 0;
  EXPECT_EQ(table(FamilyId::deg_genocchi, f, 8), table(FamilyId::genocchi, f, 8));
}

TEST(Families, SingularDenominatorsAreReported) {
  gpg::FamilyParams f;
  f.lambda = -1;
  EXPECT_THROW(gpg::family_series(FamilyId::apostol_genocchi, f, 4), gpg::NonInvertibleConstantTerm);
  f.u = 1;
  EXPECT_THROW(gpg::family_series(FamilyId::deg_frobenius_euler, f, 4), gpg::NonInvertibleConstantTerm);
}

TEST(Reductions, EveryItemPassesOnAFixedParameterSet) {
  GParams p;
  p.k = 2;
  p.alpha = 2;
  p.rho = Rational(1, 3);
  p.lambda = Rational(3, 2);
  p.u = Rational(-1, 2);
  p.log_a = Rational(1, 2);
  p.log_b = Rational(2, 3);
  for (int item = 1; item <= 6; ++item) {
    const auto rep = gpg::reduce_check(item, p, Rational(1, 2), -1, 2, 8);
    EXPECT_TRUE(rep.passed()) << item;
    EXPECT_GT(rep.cases.size(), 0u) << item;
  }
  EXPECT_THROW(gpg::reduce_check(7, p, 0, 0, 0, 4), std::invalid_argument);
}

TEST(Reductions, CollisionIsAPreconditionNotAFailure) {
  GParams p;
  p.u = 1;
  p.lambda = 2;
  const auto rep = gpg::reduce_check(5, p, 0, 0, 0, 4);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.skipped(), 1u);
}
