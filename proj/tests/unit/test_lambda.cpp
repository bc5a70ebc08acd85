#include "doctest.h"

#include "mcc/errors.hpp"
#include "mcc/lambda.hpp"
#include "mcc/motives.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

PSeries from_oracle(const oracle::USeries& s, const VarSet& vs) {
  std::vector<LPoly> c;
  for (const auto& p : s) c.push_back(oracle::to_lpoly(p, vs));
  return PSeries::from_coeffs(c);
}

RSeries rs(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RSeries::from_coeffs(v);
}

}  // namespace

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
}

TEST_CASE("pre-lambda examples") {
  CHECK(pre_lambda(Rational(1), 4) == rs({1, 1, 1, 1, 1}));
  CHECK(pre_lambda(Rational(0), 4) == rs({1, 0, 0, 0, 0}));
  const PSeries ly = pre_lambda(genus_y(), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(ly[n] == genus_y(Rational(static_cast<long>(n))));
  PSeries one_minus_yt = PSeries::one(4, genus_y());
  one_minus_yt.set(1, -genus_y());
  CHECK((ly * one_minus_yt).coeffs()[4].is_zero());
}

TEST_CASE("euler_exp examples") {
  CHECK(euler_exp(EulerExponents<Rational>::from_values({1, 0, 0, 0})) == rs({1, 1, 1, 1, 1}));
  CHECK(euler_exp(EulerExponents<Rational>::from_values({1, -1, 0, 0})) == rs({1, 1, 0, 0, 0}));
  const auto b = EulerExponents<LPoly>::from_values({LPoly(vars::motive(), Rational(1)), motive_L(), motive_L(2)});
  const LPoly one(vars::motive(), Rational(1));
  CHECK(euler_exp(b) == PSeries::from_coeffs({one, one, one + motive_L(), one + motive_L() + motive_L(2)}));
}

TEST_CASE("euler_log examples") {
  CHECK(euler_log(rs({1, 1, 1, 1})) == EulerExponents<Rational>::from_values({1, 0, 0}));
  CHECK(euler_log(rs({1, 1, 0, 0, 0})) == EulerExponents<Rational>::from_values({1, -1, 0, 0}));
  CHECK(euler_log(rs({1, 2, 0})) == EulerExponents<Rational>::from_values({2, -3}));
  CHECK_THROWS_AS(euler_log(rs({2, 1})), DomainError);
}

TEST_CASE("euler_log agrees with degree-by-degree division (oracle), N = 8") {
  // A = 1 + y t - (1 + y^2) t^2 + 3 t^3 + y^3 t^5 + ...
  oracle::USeries a = oracle::one(8);
  a[1] = oracle::monomial(1);
  a[2] = oracle::add(oracle::constant(Rational(-1)), oracle::monomial(2, Rational(-1)));
  a[3] = oracle::constant(Rational(3));
  a[5] = oracle::monomial(3);
  a[6] = oracle::add(oracle::monomial(1, Rational(2)), oracle::monomial(4));
  a[8] = oracle::monomial(2, Rational(-5));
  const auto expected = oracle::euler_decompose(a);
  const auto got = euler_log(from_oracle(a, vars::genus()));
  for (std::size_t k = 1; k <= 8; ++k) CHECK(got[k] == oracle::to_lpoly(expected[k - 1], vars::genus()));
}

TEST_CASE("euler_exp agrees with the binomial-series product (oracle)") {
  std::vector<oracle::UPoly> b{oracle::add(oracle::constant(Rational(2)), oracle::monomial(1, Rational(-1))),
                               oracle::monomial(3), {}, oracle::constant(Rational(-2)), oracle::monomial(1, Rational(4))};
  std::vector<LPoly> lb;
  for (const auto& p : b) lb.push_back(oracle::to_lpoly(p, vars::genus()));
  lb.resize(7, LPoly(vars::genus()));
  CHECK(euler_exp(EulerExponents<LPoly>::from_values(lb)) == from_oracle(oracle::euler_product(b, 7), vars::genus()));
}

TEST_CASE("integrality is asserted") {
  // 1 + t/2 has no integral Euler exponents; Auto mode only checks integral inputs
  std::vector<Rational> half{Rational(1), Rational(1, 2), Rational(0)};
  CHECK_NOTHROW(euler_log(RSeries::from_coeffs(half)));
  CHECK_THROWS_AS(euler_log(RSeries::from_coeffs(half), IntegralityMode::Strict), IntegralityError);
}

TEST_CASE("power examples") {
  const RSeries one_plus_t = rs({1, 1, 0, 0, 0, 0});
  CHECK(power(one_plus_t, Rational(1)) == one_plus_t);
  CHECK(power(one_plus_t, Rational(0)) == rs({1, 0, 0, 0, 0, 0}));
  for (long m = 0; m <= 6; ++m) {
    const RSeries p = power(one_plus_t, Rational(m));
    for (long n = 0; n <= 5; ++n) CHECK(p[static_cast<std::size_t>(n)] == oracle::pascal(m, n));
  }
}

TEST_CASE("power structure on the genus ring: configuration spaces") {
  // (1 + t)^{1 + y} through the power structure vs the plain product
  const LPoly x = LPoly(vars::genus(), Rational(1)) + genus_y();
  PSeries one_plus_t = PSeries::one(4, x);
  one_plus_t.set(1, LPoly(vars::genus(), Rational(1)));
  const auto expected = oracle::configuration_genus(oracle::from_lpoly(x), 4);
  CHECK(power(one_plus_t, x) == from_oracle(expected, vars::genus()));
  CHECK(power(one_plus_t, x)[2] == genus_y(2));
}

TEST_CASE("polynomial-ring lambda structure") {
  const LPoly one(vars::hodge(), Rational(1));
  const LPoly uv = LPoly::monomial(vars::hodge(), Exponents{2, 2});
  const PSeries z = pre_lambda_polyring(one + uv, 3);
  CHECK(z[2].to_string() == "1+uv+u^2v^2");
  CHECK(z == pre_lambda(one + uv, 3));
  CHECK(pre_lambda_polyring(LPoly(vars::hodge()), 3) == PSeries::one(3, one));
  const PSeries two = pre_lambda_polyring(one * Rational(2), 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(two[n] == one * Rational(static_cast<long>(n) + 1));
}
