#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cylindric/partition.hpp"
#include "cylindric/series.hpp"

namespace cylindric {
namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SpacePtr qt_space(int deg) { return make_space({"q", "t"}, {deg, deg}); }

LaurentMonomial mono(std::vector<int> e, Rational c = 1) { return {std::move(c), std::move(e)}; }

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("2/7"), R(2, 7));
  EXPECT_EQ(parse_rational("-3"), R(-3));
  EXPECT_EQ(parse_rational("4/6"), R(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
}

TEST(FactorList, CanonicalFormCancels) {
  EXPECT_EQ(FactorList({{1, 0}, {0, 1}}, {{1, 0}}), FactorList({{0, 1}}, {}));
  EXPECT_TRUE((FactorList({{2, 3}}, {{2, 3}}).is_one()));
  EXPECT_THROW(FactorList({{0, 0}}, {}), std::invalid_argument);
}

TEST(FactorList, ValueAndSpecializations) {
  const auto f = FactorList::ratio({0, 1}, {1, 0});  // (1-t)/(1-q)
  EXPECT_EQ(f.value({R(1, 2), R(1, 3)}), R(4, 3));
  EXPECT_THROW(f.value({R(1), R(1, 2)}), std::domain_error);
  EXPECT_EQ(f.at_q_zero(), FactorList({{0, 1}}, {}));
  EXPECT_TRUE(f.cancels_at_q_equals_t());
  EXPECT_FALSE(FactorList::ratio({1, 1}, {1, 0}).cancels_at_q_equals_t());
  EXPECT_EQ(f * f.inverse(), FactorList());
}

TEST(Alphabet, CanonicalForm) {
  SignedAlphabet a{{1, 1, 0}, {2, 1, 0}, {-3, 1, 0}};
  EXPECT_TRUE(a.empty());
  SignedAlphabet b{{1, 2, 0}, {1, 0, 1}, {1, 2, 0}};
  EXPECT_EQ(b.terms(), (std::vector<SignedAlphabet::Term>{{1, 0, 1}, {2, 2, 0}}));
  EXPECT_EQ(b - b, SignedAlphabet());
}

TEST(Alphabet, ScaleExamples) {
  EXPECT_EQ(scale_alphabet(q_minus_t(), SignedAlphabet{{1, 2, 3}}), (SignedAlphabet{{1, 3, 3}, {-1, 2, 4}}));
  EXPECT_TRUE(scale_alphabet(q_minus_t(), SignedAlphabet()).empty());
  const auto unit = scale_alphabet(q_minus_t(), SignedAlphabet{{1, 0, 0}});
  EXPECT_EQ(unit, (SignedAlphabet{{1, 1, 0}, {-1, 0, 1}}));
  EXPECT_EQ(omega_factors(unit), FactorList::ratio({0, 1}, {1, 0}));
}

TEST(Omega, GeometricSeries) {
  const auto sp = qt_space(6);
  const Series f = omega(SignedAlphabet{{1, 1, 0}}, sp);
  for (int a = 0; a <= 6; ++a) {
    EXPECT_EQ(f.coefficient({a, 0}), 1);
    EXPECT_EQ(f.coefficient({a, 1}), 0);
  }
}

TEST(Omega, QMinusT) {
  const auto sp = qt_space(6);
  const Series f = omega(q_minus_t(), sp);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_EQ(f.coefficient({a, b}), b == 0 ? 1 : b == 1 ? -1 : 0);
  EXPECT_EQ(omega_value(q_minus_t(), {R(1, 2), R(1, 3)}), R(4, 3));
}

TEST(Omega, EmptyAndInvalid) {
  const auto sp = qt_space(4);
  EXPECT_EQ(omega(SignedAlphabet(), sp), Series::constant(sp, 1));
  EXPECT_THROW(omega(SignedAlphabet{{1, 0, 0}}, sp), std::invalid_argument);
  EXPECT_THROW(omega_factors(SignedAlphabet{{-2, 0, 0}}), std::invalid_argument);
}

SignedAlphabet random_alphabet(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 4), c(-2, 2), n(0, 4);
  SignedAlphabet a;
  for (int k = n(rng); k > 0; --k) {
    const int qa = e(rng), tb = e(rng);
    if (qa == 0 && tb == 0) continue;
    a.add(c(rng), qa, tb);
  }
  return a;
}

TEST(Omega, IsAHomomorphism) {
  std::mt19937 rng(20241015);
  const auto sp = qt_space(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_alphabet(rng), b = random_alphabet(rng);
    EXPECT_EQ(omega(a + b, sp), omega(a, sp) * omega(b, sp)) << a.to_string() << " | " << b.to_string();
    EXPECT_EQ(omega(a, sp) * omega(-a, sp), Series::constant(sp, 1)) << a.to_string();
    EXPECT_EQ(factor_series(omega_factors(a), sp, CoefficientMode::series(6)), omega(a, sp));
  }
}

TEST(Pochhammer, DegreeOneCoefficient) {
  const auto mode = CoefficientMode::series(6);
  const auto sp = make_mode_space(mode, {"z"}, 1, false);
  const auto z = mono({0, 0, 1});
  const Series expected =
      Series::constant(sp, 1) + factor_series(FactorList::ratio({0, 1}, {1, 0}), sp, mode).shifted(z);
  EXPECT_EQ(pochhammer_ratio(z, sp, mode), expected);
}

TEST(Pochhammer, TelescopesAtQEqualsT) {
  const auto mode = CoefficientMode::eval({R(2, 5), R(2, 5)});
  const auto sp = make_mode_space(mode, {"z"}, 8, false);
  const Series f = pochhammer_ratio(mono({1}), sp, mode);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(f.coefficient({n}), 1);
}

TEST(Pochhammer, OutOfRangeAndConstant) {
  const auto mode = CoefficientMode::series(4);
  const auto sp = make_mode_space(mode, {"z"}, 1, false);
  EXPECT_EQ(pochhammer_ratio(mono({0, 0, 2}), sp, mode), Series::constant(sp, 1));
  EXPECT_THROW(pochhammer_ratio(mono({1, 0, 0}), sp, mode), std::invalid_argument);
}

// Against the product of (1 - t q^n m) / (1 - q^n m) built factor by factor.
TEST(Pochhammer, MatchesTheInfiniteProduct) {
  const auto mode = CoefficientMode::series(6);
  const auto sp = make_mode_space(mode, {"z"}, 5, false);
  for (int k = 1; k <= 3; ++k) {
    Series direct = Series::constant(sp, 1);
    for (int n = 0; n <= 6; ++n) {
      direct.mul_one_minus(mono({n, 1, k}));
      direct.div_one_minus(mono({n, 0, k}));
    }
    EXPECT_EQ(pochhammer_ratio(mono({0, 0, k}), sp, mode), direct) << "k=" << k;
  }
}

TEST(QBinomial, Values) {
  const QtPoint p{R(1, 2), R(1, 3)};
  EXPECT_TRUE(q_binomial_coefficient(0).is_one());
  // (1-t)(1-tq) / ((1-q)(1-q^2))
  EXPECT_EQ(q_binomial_coefficient(2).value(p), R(2, 3) * R(5, 6) / (R(1, 2) * R(3, 4)));
  EXPECT_EQ(q_binomial_coefficient(3).value({R(3, 7), R(3, 7)}), 1);
}

TEST(SeriesArith, InversePairs) {
  const auto sp = make_space({"z"}, {10});
  Series one_minus_z = Series::constant(sp, 1) - Series::variable(sp, "z");
  Series geometric = Series::constant(sp, 1);
  geometric.div_one_minus(mono({1}));
  EXPECT_EQ(one_minus_z * geometric, Series::constant(sp, 1));
  EXPECT_EQ(one_minus_z.inverse(), geometric);
  EXPECT_THROW(Series::variable(sp, "z").inverse(), std::domain_error);
  EXPECT_THROW(Series::variable(sp, "w"), std::invalid_argument);
}

TEST(SeriesArith, InvertOneMinusQT) {
  const auto sp = qt_space(5);
  const Series f = Series::constant(sp, 1) - Series::monomial(sp, mono({1, 1}));
  const Series g = f.inverse();
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) EXPECT_EQ(g.coefficient({a, b}), a == b ? 1 : 0);
}

TEST(SeriesArith, Substitution) {
  const auto refined = make_space({"z0", "z1"}, {4, 4}, {true, true}, 6);
  const auto plain = make_space({"z"}, {6}, {true});
  const Series f = Series::monomial(refined, mono({1, 2}));
  const Series g = substitute(f, plain, {mono({1}), mono({1})});
  EXPECT_EQ(g, Series::monomial(plain, mono({3})));
  EXPECT_THROW(substitute(Series::monomial(refined, mono({1, 0})), plain, {mono({-1}), mono({1})}),
               std::domain_error);
}

// Products computed in a roomier space and truncated agree with products of
// truncations.
TEST(SeriesArith, TruncationIsExact) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  const auto small = make_space({"z0", "z1"}, {4, 4}, {true, true}, 5);
  const auto big = make_space({"z0", "z1"}, {10, 10}, {true, true}, 10);
  const std::vector<LaurentMonomial> id{mono({1, 0}), mono({0, 1})};
  for (int trial = 0; trial < 10; ++trial) {
    Series f(big), g(big);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; a + b <= 5; ++b) {
        const std::vector<int> e{a, b};
        f.add_term(e, R(c(rng), 1 + std::abs(c(rng))));
        g.add_term(e, R(c(rng)));
      }
    EXPECT_EQ(substitute(f * g, small, id), substitute(f, small, id) * substitute(g, small, id));
  }
}

TEST(EvalAt, FixesVariables) {
  const auto sp = make_space({"q", "t", "z"}, {3, 3, 3}, {false, false, true});
  const Series f = Series::constant(sp, 1) + Series::variable(sp, "q") +
                   Series::variable(sp, "t") * Series::variable(sp, "z");
  const Series g = eval_at(f, {{"q", R(1, 2)}});
  ASSERT_EQ(g.space()->names(), (std::vector<std::string>{"t", "z"}));
  EXPECT_EQ(g.coefficient({0, 0}), R(3, 2));
  EXPECT_EQ(g.coefficient({1, 1}), 1);
  const Series h = eval_at(Series::constant(sp, 1), {{"q", R(5, 3)}, {"t", R(-2)}});
  EXPECT_EQ(h.coefficient({0}), 1);
}

// eval_at evaluates the truncated polynomial; exact rational-function values
// go through factor lists instead.
TEST(EvalAt, TruncatedPolynomialVersusFactorList) {
  const auto mode = CoefficientMode::series(3);
  const auto sp = make_mode_space(mode, {}, 0, false);
  const auto f = FactorList::ratio({0, 1}, {1, 0});
  const Series s = factor_series(f, sp, mode);
  EXPECT_EQ(eval_at(s, {{"q", R(1, 2)}, {"t", R(1, 3)}}).constant_term(), R(2, 3) * R(15, 8));
  const auto at = CoefficientMode::eval({R(1, 2), R(1, 3)});
  EXPECT_EQ(factor_series(f, make_mode_space(at, {}, 0, false), at).constant_term(), R(4, 3));

  const auto diag = CoefficientMode::eval({R(2, 5), R(2, 5)});
  const auto zs = make_mode_space(diag, {"z"}, 3, false);
  EXPECT_EQ(factor_series(f, zs, diag).shifted(mono({1})), Series::variable(zs, "z"));
}

TEST(Fixture, PartitionGeneratingFunction) {
  const auto sp = make_space({"w"}, {10});
  Series sum(sp);
  for (const auto& p : partitions_up_to(10)) sum.add_term(std::vector<int>{p.weight()}, 1);
  Series product = Series::constant(sp, 1);
  for (int n = 1; n <= 10; ++n) product.div_one_minus(mono({n}));
  EXPECT_EQ(sum, product);
}

TEST(Series, TermsInGradedOrder) {
  const auto mode = CoefficientMode::series(2);
  const auto sp = make_mode_space(mode, {"z"}, 2, false);
  const Series f = Series::constant(sp, 1) + Series::variable(sp, "z") * Series::variable(sp, "q") +
                   Series::variable(sp, "t") + Series::variable(sp, "z");
  const auto terms = f.terms();
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0].first, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(terms[1].first, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(terms[2].first, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(terms[3].first, (std::vector<int>{1, 0, 1}));
}

}  // namespace
}  // namespace cylindric
