#include "doctest.h"

#include "mcc/errors.hpp"
#include "mcc/lpoly.hpp"
#include "mcc/motives.hpp"
#include "mcc/rational.hpp"

using namespace mcc;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(3, 6).denominator() == 2);
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("2/0"), DomainError);
}

TEST_CASE("binomial coefficients for negative upper index") {
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(binomial(Rational(-1), 3) == Rational(-1));
  CHECK(binomial(Rational(-2), 2) == Rational(3));
  CHECK(binomial(Rational(3), 5) == Rational(0));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("canonical polynomial text") {
  const LPoly uv = LPoly::monomial(vars::hodge(), Exponents{2, 2});
  const LPoly one(vars::hodge(), Rational(1));
  CHECK((one + uv + uv * uv).to_string() == "1+uv+u^2v^2");
  CHECK((-motive_L(Rational(-3, 2))).to_string() == "-L^(-3/2)");
  CHECK((genus_y() * Rational(1, 2)).to_string() == "1/2*y");
  CHECK((motive_L(Rational(-2)) + motive_L(Rational(-1))).to_string() == "L^-2+L^-1");
  CHECK(LPoly(vars::genus()).to_string() == "0");
}

TEST_CASE("no stored zero coefficients") {
  const LPoly y = genus_y();
  const LPoly z = y - y;
  CHECK(z.is_zero());
  CHECK(z.term_count() == 0);
  CHECK(z == LPoly(vars::genus()));
}

TEST_CASE("half-integer exponents need a half-admissible variable") {
  CHECK_NOTHROW(motive_L(Rational(1, 2)));
  CHECK_THROWS_AS(LPoly::variable(vars::hodge(), "u", Rational(1, 2)), DomainError);
}

TEST_CASE("mixing variable sets is an error") {
  CHECK_THROWS_AS(motive_L() * genus_y(), MismatchError);
  CHECK_THROWS_AS(motive_L() + genus_y(), MismatchError);
}

TEST_CASE("exact division") {
  const LPoly L = motive_L();
  const LPoly one(vars::motive(), Rational(1));
  const LPoly num = L * L * L - one;
  CHECK(exact_div(num, L - one) == L * L + L + one);
  CHECK(exact_div(motive_L(Rational(-1, 2)) * (L - one) * (L + one), L + one) == motive_L(Rational(-1, 2)) * (L - one));
  CHECK_THROWS_AS(exact_div(L * L + one, L - one), InexactDivisionError);
}

TEST_CASE("Adams operations on roots") {
  const LPoly root = motive_L(Rational(1, 2));
  // -L^{1/2} is the rank-one element of the motive ring
  CHECK(adams(2, -root) == motive_L());
  CHECK(adams(3, -root) == -motive_L(Rational(3, 2)));
  CHECK(adams(2, genus_y(Rational(1, 2))) == genus_y());
  CHECK(adams(3, genus_y(Rational(-1, 2))) == genus_y(Rational(-3, 2)));
  CHECK(adams(1, root) == root);
}

TEST_CASE("substitution") {
  const Substitution to_uv = Substitution(vars::hodge()).set("L", LPoly::monomial(vars::hodge(), Exponents{2, 2}));
  CHECK(to_uv.apply(motive_L() + LPoly(vars::motive(), Rational(1))).to_string() == "1+uv");
  CHECK_THROWS_AS((void)to_uv.apply(motive_L(Rational(1, 2))), DomainError);
  CHECK(spec_chi_minus_y(motive_L(Rational(1, 2))) == -genus_y(Rational(1, 2)));
  CHECK(spec_chi(motive_L(Rational(3, 2))) == Rational(-1));
  CHECK(hodge_to_chi_minus_y(LPoly::monomial(vars::hodge(), Exponents{2, 4})) == genus_y());
}
