#include <gtest/gtest.h>

#include <popdist/closed_forms.hpp>
#include <popdist/oracle.hpp>

using namespace popdist;
using namespace popdist::vars;

namespace {

const std::initializer_list<Var> stats{Var::p, Var::q, Var::u, Var::v, Var::s, Var::t};

TruncSeries counts(std::initializer_list<long> c) {
  Polynomial p;
  int n = 0;
  for (long v : c) p += Polynomial(v) * x().pow(n++);
  return p.truncate(n - 1);
}

}  // namespace

// Must hold before anything else built on F4 is trusted.
TEST(F4Transcription, MonomialCounts) {
  EXPECT_EQ(f4_numerator().size(), 100u);
  EXPECT_EQ(f4_denominator().size(), 19u);
}

TEST(F2, Expansion) {
  EXPECT_EQ(f2_gf().expand(1), (1 + u() * v() * s() * t() * x()).truncate(1));
  const auto e = f2_gf().expand(6);
  EXPECT_EQ(e.x_slice(3), q().pow(2) * u() * v().pow(3) * s().pow(3) * t());
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(e.x_slice(n), q().pow(n - 1) * u() * v().pow(n) * s().pow(n) * t());
  EXPECT_EQ(f2_gf().specialize(stats).expand(4), counts({1, 1, 1, 1, 1}));
}

TEST(F3, InitialTerms) {
  const auto e = f3_gf().expand(3);
  EXPECT_EQ(e.x_slice(1), u() * v() * s() * t());
  EXPECT_EQ(e.x_slice(2), p() * u().pow(2) * v() * s() * t().pow(2) + q() * u() * v().pow(2) * s().pow(2) * t());
  EXPECT_EQ(e.x_slice(3), p() * q() * u().pow(2) * v().pow(2) * s() * t().pow(2) + p() * q() * u().pow(2) * v().pow(2) * s().pow(2) * t() +
                              p() * q() * u() * v().pow(2) * s().pow(2) * t().pow(2) + q().pow(2) * u() * v().pow(3) * s().pow(3) * t());
}

TEST(F3, CountingIsPowersOfTwo) {
  EXPECT_EQ(f3_gf().specialize(stats).expand(10), counts({1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512}));
  EXPECT_TRUE(equivalent(f3_gf().specialize(stats), closed_form(ClosedFormId::F3_counting)));
}

TEST(F4, Counting) {
  const auto expected = counts({1, 1, 2, 6, 16, 42, 112, 300, 804, 2156, 5784});
  EXPECT_EQ(f4_gf().specialize(stats).expand(10), expected);
  EXPECT_EQ(closed_form(ClosedFormId::F4_counting).expand(10), expected);
}

// The corollary's printed "16x^3" sits where the x^4 coefficient belongs.
TEST(F4, FourthCoefficientIsSixteenByEnumeration) {
  EXPECT_EQ(enumerate_class(4, flat_pop(4)).size(), 16u);
  EXPECT_EQ(enumerate_class(3, flat_pop(4)).size(), 6u);
}

TEST(ClosedVsOracle, ThroughEight) {
  EXPECT_EQ(f2_gf().expand(8), oracle_series(2, 8));
  EXPECT_EQ(f3_gf().expand(8), oracle_series(3, 8));
  EXPECT_EQ(f4_gf().expand(8), oracle_series(4, 8));
}

TEST(NamedSpecializations, DisplayedForms) {
  EXPECT_EQ(closed_form(ClosedFormId::F3_xu).expand(3),
            (1 + u() * x() + (u() + u() * u()) * x().pow(2) + (2 * u() + 2 * u().pow(2)) * x().pow(3)).truncate(3));
  EXPECT_EQ(closed_form(ClosedFormId::F3_xv).expand(2), (1 + v() * x() + (v() + v() * v()) * x().pow(2)).truncate(2));
  EXPECT_TRUE(equivalent(closed_form(ClosedFormId::F3_xu).swap_vars(Var::u, Var::t), closed_form(ClosedFormId::F3_xt)));
  EXPECT_TRUE(equivalent(closed_form(ClosedFormId::F4_xu).swap_vars(Var::u, Var::t), closed_form(ClosedFormId::F4_xt)));
  EXPECT_EQ(closed_form(ClosedFormId::F4_xu).expand(10).swap_vars(Var::u, Var::t), closed_form(ClosedFormId::F4_xt).expand(10));
}

TEST(NamedSpecializations, MatchFullForms) {
  const auto f3 = f3_gf().expand(10), f4 = f4_gf().expand(10);
  EXPECT_EQ(closed_form(ClosedFormId::F3_xu).expand(10), f3.specialize({Var::p, Var::q, Var::v, Var::s, Var::t}));
  EXPECT_EQ(closed_form(ClosedFormId::F3_xt).expand(10), f3.specialize({Var::p, Var::q, Var::u, Var::v, Var::s}));
  EXPECT_EQ(closed_form(ClosedFormId::F3_xv).expand(10), f3.specialize({Var::p, Var::q, Var::u, Var::s, Var::t}));
  EXPECT_EQ(closed_form(ClosedFormId::F4_xu).expand(10), f4.specialize({Var::p, Var::q, Var::v, Var::s, Var::t}));
  EXPECT_EQ(closed_form(ClosedFormId::F4_xt).expand(10), f4.specialize({Var::p, Var::q, Var::u, Var::v, Var::s}));
}

TEST(NamedSpecializations, Lookup) {
  for (auto [id, name] : closed_form_names) EXPECT_EQ(parse_closed_form_id(name), id);
  EXPECT_FALSE(parse_closed_form_id("F5"));
  EXPECT_THROW(closed_form(ClosedFormId::S_tpq), DomainError);
  EXPECT_THROW(named_specialization(ClosedFormId::F3), DomainError);
}

TEST(LmaxSeparable, LowTerms) {
  const auto l = lmax_separable_series(9);
  EXPECT_EQ(l.x_slice(1), u());
  EXPECT_EQ(l.x_slice(2), u() + u() * u());
  EXPECT_EQ(l.x_slice(5).specialize({Var::u}), Polynomial(90L));
  EXPECT_TRUE(l.has_nonnegative_integer_coefficients());
}

TEST(LmaxSeparable, MatchesOracleThroughNine) {
  const auto sep = oracle_series(std::nullopt, 9);
  EXPECT_EQ(lmax_separable_series(9), sep.specialize({Var::p, Var::q, Var::v, Var::s, Var::t}) - TruncSeries::one(9));
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(lmax_separable_series(9).x_slice(n).specialize({Var::u}), Polynomial(mpq_class(schroder(n - 1))));
}

TEST(STpq, ResidualAndCoefficients) {
  const auto S = s_tpq_series(9);
  EXPECT_TRUE(s_tpq_residual(S).is_zero());
  EXPECT_EQ(S.x_slice(1), Polynomial(1L));
  EXPECT_EQ(S.specialize({Var::p, Var::q}), counts({0, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586}));
}

TEST(STpq, MatchesOracleAscDes) {
  const auto sep = oracle_series(std::nullopt, 9);
  EXPECT_EQ(s_tpq_series(9), sep.specialize({Var::u, Var::v, Var::s, Var::t}) - TruncSeries::one(9));
}
