#include "cayley/cayley_menger.hpp"
#include "cayley/polynomial.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace cayley {
namespace {

Polynomial var(VarId v, unsigned e = 1) { return Polynomial::variable(v, e); }

const VarId kX = VarId::dist(0, 1);
const VarId kY = VarId::dist(0, 2);
const VarId kT = VarId::tau(2);

Polynomial x(unsigned e = 1) { return var(kX, e); }
Polynomial y(unsigned e = 1) { return var(kY, e); }

TEST(VarIdTest, OrderPutsDistancesBeforeTowerVariables) {
  EXPECT_LT(VarId::dist(0, 1), VarId::dist(0, 2));
  EXPECT_LT(VarId::dist(0, 9), VarId::dist(1, 2));
  EXPECT_LT(VarId::dist(100, 200), VarId::tau(2));
  EXPECT_LT(VarId::tau(2), VarId::tau(3));
  EXPECT_EQ(VarId::dist(3, 7).name(), "d_3_7");
  EXPECT_EQ(VarId::tau(4).name(), "t_4");
}

TEST(VarIdTest, RejectsInvalidIndices) {
  EXPECT_THROW(VarId::dist(2, 2), Error);
  EXPECT_THROW(VarId::dist(3, 1), Error);
  EXPECT_THROW(VarId::tau(1), Error);
}

TEST(PolynomialTest, Addition) {
  const Polynomial p = Polynomial(2) * x(2) + y();
  EXPECT_EQ(p + Polynomial{}, p);
  EXPECT_TRUE((x() + (-x())).is_zero());
  EXPECT_TRUE((x() + (-x())).terms().empty());
  EXPECT_EQ(p + (x(2) - y()), Polynomial(3) * x(2));
}

TEST(PolynomialTest, Multiplication) {
  const Polynomial p = Polynomial(2) * x(2) + y() - Polynomial(7);
  EXPECT_EQ(p * Polynomial(1), p);
  EXPECT_EQ((x() - y()) * (x() + y()), x(2) - y(2));
  EXPECT_TRUE((p * Polynomial{}).is_zero());
  EXPECT_EQ(total_degree(p * p), total_degree(p) + total_degree(p));
}

TEST(PolynomialTest, SubstitutionRenames) {
  const Polynomial t = var(kT);
  EXPECT_EQ(substitute(x(2) + y(), {{kX, t}}), var(kT, 2) + y());
  const Polynomial p = Polynomial(3) * x(2) * y() - y(3);
  EXPECT_EQ(substitute(p, {}), p);
}

TEST(PolynomialTest, SubstitutionIsSimultaneous) {
  // x -> y and y -> x swap rather than collapsing to a single variable.
  const Polynomial p = x(2) + Polynomial(5) * y();
  EXPECT_EQ(substitute(p, {{kX, y()}, {kY, x()}}), y(2) + Polynomial(5) * x());
}

TEST(PolynomialTest, SubstitutionGivesLambda21) {
  const Polynomial t2 = var(VarId::tau(2));
  const Polynomial lambda21 = substitute(gamma(2), {{VarId::dist(0, 2), t2}, {VarId::dist(1, 2), t2}});
  // Heron's product with b = c = t2: -(d01 + 2 t2) d01 d01 (2 t2 - d01) = d01^4 - 4 d01^2 t2^2
  EXPECT_EQ(lambda21, pow(x(), 4) - Polynomial(4) * x(2) * pow(t2, 2));
  EXPECT_EQ(canonical_string(lambda21), "d_0_1^4-4*d_0_1^2*t_2^2");
}

TEST(PolynomialTest, Evaluate) {
  const Assignment ones{{VarId::dist(0, 1), 1}, {VarId::dist(0, 2), 1}, {VarId::dist(1, 2), 1}};
  EXPECT_EQ(evaluate(gamma(2), ones), Rational(-3));
  EXPECT_EQ(evaluate(gamma(1), {{VarId::dist(0, 1), 5}}), Rational(50));
  EXPECT_EQ(evaluate(Polynomial{}, {}), Rational(0));
  EXPECT_EQ(evaluate(x(2) - y(), {{kX, Rational(1, 2)}, {kY, Rational(1, 3)}}), Rational(-1, 12));
}

TEST(PolynomialTest, EvaluateMissingVariable) {
  try {
    evaluate(x() + y(), {{kX, 1}});
    FAIL() << "expected MissingVariable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingVariable);
  }
}

TEST(PolynomialTest, Content) {
  EXPECT_EQ(content(Polynomial(6) * x(2) + Polynomial(4) * y()), Integer(2));
  EXPECT_EQ(content(Polynomial(-6) * x(2) - Polynomial(4) * y()), Integer(2));
  EXPECT_EQ(content(gamma(3)), Integer(2));
  EXPECT_EQ(content(gamma(2)), Integer(1));
  EXPECT_EQ(content(Polynomial{}), Integer(0));
}

TEST(PolynomialTest, Degrees) {
  EXPECT_EQ(total_degree(gamma(2)), Degree(4));
  EXPECT_EQ(total_degree(Polynomial(7)), Degree(0));
  EXPECT_TRUE(total_degree(Polynomial{}).is_minus_infinity());
  EXPECT_TRUE(partial_degree(Polynomial{}, {kX}).is_minus_infinity());
  EXPECT_LT(Degree::minus_infinity(), Degree(0));
  EXPECT_TRUE((Degree::minus_infinity() + Degree(3)).is_minus_infinity());
  EXPECT_EQ(partial_degree(x(2) * y() + y(3), {kX}), Degree(2));
  EXPECT_EQ(partial_degree(x(2) * y() + y(3), {kX, kY}), Degree(3));
}

TEST(PolynomialTest, PartialDegreeOfGamma3MatchesTermEnumeration) {
  // Gamma_3 expanded by brute-force Leibniz expansion, then group degree read term by term.
  const Polynomial brute = testing::leibniz_determinant(cm_matrix(3));
  ASSERT_EQ(brute, gamma(3));
  const VarSet group{VarId::dist(0, 1), VarId::dist(0, 2)};
  unsigned expected = 0;
  for (const auto& t : brute.terms()) {
    unsigned g = 0;
    for (const auto& f : t.monomial.factors()) {
      if (f.var == VarId::dist(0, 1) || f.var == VarId::dist(0, 2)) g += f.exponent;
    }
    expected = std::max(expected, g);
  }
  EXPECT_EQ(expected, 4U);  // frozen from an independent sympy expansion
  EXPECT_EQ(partial_degree(gamma(3), group), Degree(expected));
}

TEST(PolynomialTest, Homogeneity) {
  const auto g2 = is_homogeneous(gamma(2));
  EXPECT_TRUE(g2.homogeneous);
  EXPECT_EQ(g2.degree, 4U);
  const auto d3 = is_homogeneous(delta(3));
  EXPECT_TRUE(d3.homogeneous);
  EXPECT_EQ(d3.degree, 8U);
  EXPECT_FALSE(is_homogeneous(x() + x(2)).homogeneous);
  const auto zero = is_homogeneous(Polynomial{});
  EXPECT_TRUE(zero.homogeneous);
  EXPECT_FALSE(zero.degree.has_value());
  const auto grouped = is_group_homogeneous(x(2) * y() + x() * y(5), {kX, kT});
  EXPECT_FALSE(grouped.homogeneous);
  EXPECT_TRUE(is_group_homogeneous(x(2) * y() + x(2) * y(5), {kX}).homogeneous);
}

TEST(PolynomialTest, ExactDivide) {
  EXPECT_EQ(exact_divide(x(2) - y(2), x() - y()), x() + y());
  const Polynomial lambda21 = lambda(2, 1);
  const Polynomial t2 = var(VarId::tau(2));
  EXPECT_EQ(exact_divide(lambda21, x()), pow(x(), 3) - Polynomial(4) * x() * pow(t2, 2));
  EXPECT_EQ(exact_divide(Polynomial(6) * x(2), Polynomial(3) * x()), Polynomial(2) * x());
}

TEST(PolynomialTest, ExactDivideFailureCarriesRemainder) {
  try {
    exact_divide(x(), y());
    FAIL() << "expected NotDivisible";
  } catch (const NotDivisible& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDivisible);
    EXPECT_EQ(e.remainder(), x());
  }
  try {
    exact_divide(x(2) + Polynomial(1), x() + Polynomial(1));
    FAIL() << "expected NotDivisible";
  } catch (const NotDivisible& e) {
    EXPECT_EQ(e.remainder(), Polynomial(2));
  }
  // Coefficient division must be exact over the integers.
  EXPECT_THROW(exact_divide(Polynomial(3) * x(), Polynomial(2)), NotDivisible);
  EXPECT_THROW(exact_divide(x(), Polynomial{}), Error);
}

TEST(PolynomialTest, HomogenizeGroup) {
  const Polynomial h = var(kT);
  const Polynomial p = x(2) + x() * y() + y(2);
  EXPECT_EQ(homogenize_group(p, {kX}, 2, kT), x(2) + x() * y() * h + y(2) * pow(h, 2));
  EXPECT_EQ(homogenize_group(Polynomial(5), {kX}, 0, kT), Polynomial(5));
  try {
    homogenize_group(p, {kX}, 1, kT);
    FAIL() << "expected TargetTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTargetTooSmall);
  }
  EXPECT_THROW(homogenize_group(p, {kX, kT}, 3, kT), Error);
  EXPECT_THROW(homogenize_group(p * h, {kX}, 3, kT), Error);
}

TEST(PolynomialTest, CanonicalString) {
  EXPECT_EQ(canonical_string(gamma(1)), "2*d_0_1^2");
  EXPECT_EQ(canonical_string(Polynomial{}), "0");
  EXPECT_EQ(canonical_string(delta(1)), "-d_0_1^4");
  EXPECT_EQ(canonical_string(Polynomial(-7)), "-7");
  EXPECT_EQ(canonical_string(x() * y() - var(kT) + Polynomial(3)), "d_0_1*d_0_2-t_2+3");
  EXPECT_EQ(canonical_string(gamma(2)),
            "d_0_1^4-2*d_0_1^2*d_0_2^2-2*d_0_1^2*d_1_2^2+d_0_2^4-2*d_0_2^2*d_1_2^2+d_1_2^4");
}

TEST(PolynomialTest, ParseAcceptsCanonicalGrammar) {
  EXPECT_EQ(parse_polynomial("0"), Polynomial{});
  EXPECT_EQ(parse_polynomial("2*d_0_1^2"), gamma(1));
  EXPECT_EQ(parse_polynomial("-d_0_1^4"), delta(1));
  EXPECT_EQ(parse_polynomial("d_0_1^4-4*d_0_1^2*t_2^2"), lambda(2, 1));
  // Non-canonical order and repeated factors are normalized.
  EXPECT_EQ(parse_polynomial("3+t_2*d_0_1*d_0_1"), x(2) * var(kT) + Polynomial(3));
}

TEST(PolynomialTest, ParseRejectsOtherText) {
  for (const char* bad : {"", " d_0_1", "d_0_1 + 1", "x", "d_1_0", "t_1", "d_0_1^0", "2*", "d_0_1^", "1++2",
                          "d_0", "2d_0_1", "-"}) {
    EXPECT_THROW(parse_polynomial(bad), Error) << bad;
  }
}

TEST(PolynomialTest, RoundTripOfCayleyMengerPolynomials) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(parse_polynomial(canonical_string(gamma(n))), gamma(n));
    EXPECT_EQ(parse_polynomial(canonical_string(delta(n))), delta(n));
    EXPECT_EQ(parse_polynomial(canonical_string(lambda(n, 1))), lambda(n, 1));
  }
}

TEST(RationalTest, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  for (const char* bad : {"", "1/0", "1.", ".5", "1e3", "a", "1/2/3", "--1", " 1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

}  // namespace
}  // namespace cayley
