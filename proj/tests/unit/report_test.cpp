#include <gtest/gtest.h>

#include "gpg/report.hpp"

using gpg::Rational;

TEST(Report, CountsAndSerializes) {
  gpg::VerifyReport r;
  r.suite = "demo";
  EXPECT_TRUE(r.check("a", "p", 0, Rational(1, 2), Rational(1, 2)));
  EXPECT_FALSE(r.check("b", "p", 1, Rational(1), Rational(2)));
  gpg::CaseRecord skip;
  skip.label = "c";
  skip.status = gpg::CaseStatus::precondition;
  skip.note = "lambda = u";
  r.add(skip);
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_EQ(r.skipped(), 1u);
  EXPECT_FALSE(r.passed());

  const gpg::Deviation d{"t", "printed", "fixed", "why"};
  r.add_deviation(d);
  r.add_deviation(d);
  EXPECT_EQ(r.deviations.size(), 1u);

  const auto j = gpg::to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["case_count"], 3);
  EXPECT_EQ(j["cases"][0]["oracle"], "1/2");
  EXPECT_EQ(j["cases"][2]["status"], "precondition");
  EXPECT_EQ(j["deviations"].size(), 1u);
}

TEST(Report, MergeKeepsDeviationsUnique) {
  gpg::VerifyReport a, b;
  a.add_deviation({"t", "p", "r", "n"});
  b.add_deviation({"t", "p", "r", "n"});
  b.check("x", "", 0, 1, 1);
  a.merge(b);
  EXPECT_EQ(a.cases.size(), 1u);
  EXPECT_EQ(a.deviations.size(), 1u);
}
