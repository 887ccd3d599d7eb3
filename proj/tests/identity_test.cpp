#include <gtest/gtest.h>

#include "cylindric/identity.hpp"
#include "support.hpp"

namespace cylindric {
namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

IdentityOptions eval_options(int n, QtPoint p = {R(2, 7), R(3, 5)}) {
  IdentityOptions o;
  o.max_weight = n;
  o.mode = CoefficientMode::eval(std::move(p));
  return o;
}

IdentityOptions series_options(int n, int qt) {
  IdentityOptions o;
  o.max_weight = n;
  o.mode = CoefficientMode::series(qt);
  return o;
}

TEST(Lhs, WeightOneCoefficient) {
  const QtPoint p{R(2, 7), R(3, 5)};
  const Series lhs = lhs_series(Profile("10"), eval_options(1, p));
  EXPECT_EQ(lhs.coefficient({0}), 1);
  EXPECT_EQ(lhs.coefficient({1}), (1 - p.t) / (1 - p.q));
  const Series empty = lhs_series(Profile("1010"), eval_options(0));
  EXPECT_EQ(empty, Series::constant(empty.space(), 1));
}

TEST(Lhs, CountsAtQEqualsT) {
  for (const char* p : {"110", "0110"}) {
    const Series lhs = lhs_series(Profile(p), eval_options(8, {R(3, 7), R(3, 7)}));
    EXPECT_EQ(lhs, count_series(Profile(p), 8)) << p;
  }
}

TEST(Lhs, IndependentOfThreads) {
  auto o = series_options(6, 5);
  const Series one = lhs_series(Profile("1010"), o);
  o.threads = 3;
  EXPECT_EQ(lhs_series(Profile("1010"), o), one);
}

TEST(Rhs, WeightOneCoefficient) {
  const auto o = series_options(1, 6);
  const Series rhs = rhs_series(Profile("10"), o);
  const Series expected = Series::constant(rhs.space(), 1) +
                          factor_series(FactorList::ratio({0, 1}, {1, 0}), rhs.space(), o.mode)
                              .shifted({1, {0, 0, 1}});
  EXPECT_EQ(rhs, expected);
}

// With no (i, j) pairs at all only the partition product is left: a constant
// profile is a sequence of equal partitions, one per mu[0].
TEST(Identity, NoInversionsAtAll) {
  const auto o = eval_options(8);
  const Series rhs = rhs_series(Profile("11"), o);
  Series expected = Series::constant(rhs.space(), 1);
  for (int m = 1; 2 * m <= 8; ++m) expected.div_one_minus({1, {2 * m}});
  EXPECT_EQ(rhs, expected);
  EXPECT_TRUE(verify(Profile("11"), o).passed());
  EXPECT_TRUE(verify(Profile("000"), o).passed());
}

TEST(Identity, RotatedProfilesBothPass) {
  EXPECT_TRUE(verify(Profile("01"), eval_options(8)).passed());
  EXPECT_TRUE(verify(Profile("10"), eval_options(8)).passed());
  EXPECT_EQ(rhs_series(Profile("01"), eval_options(8)), rhs_series(Profile("10"), eval_options(8)));
}

TEST(Identity, AllShortProfilesEvalMode) {
  for (const auto& profile : testing::all_profiles(5))
    for (const auto& point : default_points()) {
      const auto r = verify(profile, eval_options(8, point));
      EXPECT_TRUE(r.passed()) << profile.str();
    }
}

TEST(Identity, SeriesMode) {
  for (const char* p : {"10", "110", "1010", "11010"})
    EXPECT_TRUE(verify(Profile(p), series_options(8, 8)).passed()) << p;
}

TEST(Identity, NegativeControlIsCaught) {
  const WeightFunction corrupted = [](const CylindricPlanePartition& c) {
    const FactorList w = macdonald_weight(c);
    return weight(c) == 1 ? w.inverse() : w;
  };
  for (const auto& options : {eval_options(3), series_options(3, 4)}) {
    const auto r = verify(Profile("10"), options, corrupted);
    ASSERT_FALSE(r.passed());
    const auto& e = r.first_mismatch->exponents;
    EXPECT_EQ(e.back(), 1) << "first mismatch should sit at z^1";
  }
  auto refined = eval_options(3);
  refined.refined = true;
  const auto r = verify(Profile("10"), refined, corrupted);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_mismatch->exponents[0] + r.first_mismatch->exponents[1], 1);
}

TEST(Refined, PassesAndUnrefines) {
  for (const auto& profile : testing::all_profiles(4)) {
    auto o = eval_options(6);
    o.refined = true;
    const auto r = verify(profile, o);
    EXPECT_TRUE(r.passed()) << profile.str();
    const auto plain = eval_options(6);
    EXPECT_EQ(unrefine(r.lhs, profile, o), lhs_series(profile, plain)) << profile.str();
    EXPECT_EQ(unrefine(r.rhs, profile, o), rhs_series(profile, plain)) << profile.str();
  }
  auto s = series_options(4, 4);
  s.refined = true;
  EXPECT_TRUE(verify(Profile("110"), s).passed());
}

TEST(Refined, ExponentsTrackEachPartition) {
  auto o = eval_options(2);
  o.refined = true;
  const Series lhs = lhs_series(Profile("10"), o);
  ASSERT_EQ(lhs.space()->names(), (std::vector<std::string>{"z0", "z1"}));
  // ((), (1), ()) has |mu[0]| = 0, |mu[1]| = 1.
  EXPECT_EQ(lhs.coefficient({0, 1}), (1 - R(3, 5)) / (1 - R(2, 7)));
  EXPECT_EQ(lhs.coefficient({1, 0}), 0);
}

TEST(ReversePlane, Identity) {
  for (const char* p : {"10", "110", "1010", "11010", "0110"}) {
    for (const auto& o : {eval_options(7), series_options(5, 5)}) {
      const auto [lhs, rhs] = rpp_series(Profile(p), o);
      EXPECT_EQ(lhs, rhs) << p;
    }
  }
  const auto [lhs, rhs] = rpp_series(Profile("01"), eval_options(5));
  EXPECT_EQ(lhs, Series::constant(lhs.space(), 1));
  EXPECT_EQ(rhs, Series::constant(rhs.space(), 1));
}

TEST(ReversePlane, LhsIsTheRestrictedSum) {
  const auto o = eval_options(6);
  const Profile p("1100");
  const Series lhs = rpp_series(p, o).first;
  Series expected(lhs.space());
  for (const auto& c : enumerate(p, 6))
    if (c.mu[0].empty()) expected.add_term(std::vector<int>{weight(c)}, macdonald_weight(c).value(o.mode.point()));
  EXPECT_EQ(lhs, expected);
}

TEST(Specializations, StanleyAndBorodin) {
  for (const char* p : {"10", "110", "1010", "11010"}) {
    EXPECT_EQ(count_series(Profile(p), 8, true), stanley_product(Profile(p), 8)) << p;
    EXPECT_EQ(count_series(Profile(p), 8), borodin_product(Profile(p), 8)) << p;
    EXPECT_EQ(rhs_series(Profile(p), eval_options(8, {R(2, 7), R(2, 7)})), borodin_product(Profile(p), 8));
  }
}

TEST(MacMahon, Counts) {
  const std::vector<long> pp{1, 1, 3, 6, 13, 24, 48};
  EXPECT_EQ(plane_partition_counts(6), pp);
  std::vector<Rational> product = z_coefficients(macmahon_product(6));
  EXPECT_EQ(product, std::vector<Rational>(pp.begin(), pp.end()));
  const auto r = macmahon_check(5, 5, 5);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.direct, std::vector<long>(pp.begin(), pp.begin() + 6));
  EXPECT_TRUE(macmahon_check(1, 1, 1).passed());
  EXPECT_TRUE(macmahon_check(6, 4, 4).passed());
}

TEST(MacMahon, RefusesUnstableTruncation) {
  EXPECT_THROW(macmahon_check(3, 5, 5), std::invalid_argument);
  EXPECT_THROW(macmahon_check(5, 2, 5), std::invalid_argument);
}

}  // namespace
}  // namespace cylindric
