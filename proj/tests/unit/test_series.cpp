#include "doctest.h"

#include "mcc/errors.hpp"
#include "mcc/motives.hpp"
#include "mcc/series.hpp"

using namespace mcc;

namespace {

RSeries rs(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RSeries::from_coeffs(v);
}

}  // namespace

TEST_CASE("product and inverse") {
  CHECK(rs({1, 1, 0, 0}) * rs({1, -1, 1, -1}) == rs({1, 0, 0, 0}));
  CHECK(ts_invert(rs({1, -1, 0, 0})) == rs({1, 1, 1, 1}));
  CHECK_THROWS_AS(ts_invert(rs({0, 1})), DomainError);
}

TEST_CASE("orders never mix") {
  CHECK_THROWS_AS(rs({1, 1}) * rs({1, 1, 1}), MismatchError);
  CHECK_THROWS_AS(rs({1, 1}) + rs({1, 1, 1}), MismatchError);
  CHECK_THROWS_AS((void)rs({1, 1}).truncated(3), MismatchError);
  CHECK(rs({1, 2, 3}).truncated(1) == rs({1, 2}));
}

TEST_CASE("exp and log") {
  RSeries t(4, Rational(0));
  t.set(1, Rational(1));
  const RSeries e = ts_exp(t);
  CHECK(e[4] == Rational(1, 24));
  CHECK(ts_log(e) == t);
  // log(1 + t) = t - t^2/2 + t^3/3
  CHECK(ts_log(rs({1, 1, 0, 0}))[3] == Rational(1, 3));
  CHECK_THROWS_AS(ts_log(rs({2, 1})), DomainError);
  CHECK_THROWS_AS(ts_exp(rs({1, 1})), DomainError);
}

TEST_CASE("substitution t -> sign t^k") {
  CHECK(ts_subst(rs({1, 1, 0, 0}), 1, 2) == rs({1, 0, 1, 0}));
  CHECK(ts_subst(rs({1, 1, 3}), -1, 1) == rs({1, -1, 3}));
  CHECK(ts_subst(rs({1, 4, 5}), 1, 1) == rs({1, 4, 5}));
}

TEST_CASE("exp of a sum is the product of the exps over the motive ring") {
  PSeries a(5, LPoly(vars::motive())), b(5, LPoly(vars::motive()));
  a.set(1, motive_L());
  a.set(3, motive_L(Rational(1, 2)) * Rational(2));
  b.set(2, LPoly(vars::motive(), Rational(-1)));
  b.set(5, motive_L(Rational(-1)));
  CHECK(ts_exp(a + b) == ts_exp(a) * ts_exp(b));
  CHECK(ts_exp(ts_log(ts_exp(a))) == ts_exp(a));
}

TEST_CASE("integrality assertion") {
  CHECK_NOTHROW(assert_in_subring(rs({1, 2, 3}), Subring::IntegerPolynomial, "x"));
  CHECK_THROWS_AS(assert_in_subring(ts_log(rs({1, 1, 0})), Subring::IntegerLaurent, "log"), IntegralityError);
  const PSeries p = PSeries::from_coeffs({LPoly(vars::motive(), Rational(1)), motive_L(Rational(-1))});
  CHECK_NOTHROW(assert_in_subring(p, Subring::IntegerLaurent, "p"));
  CHECK_THROWS_AS(assert_in_subring(p, Subring::IntegerPolynomial, "p"), IntegralityError);
}
