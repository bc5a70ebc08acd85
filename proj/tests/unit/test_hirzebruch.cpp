#include "doctest.h"

#include "mcc/errors.hpp"
#include "mcc/hirzebruch.hpp"
#include "mcc/motives.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

RSeries from_vector(const std::vector<Rational>& v) { return RSeries::from_coeffs(v); }

LPoly gc(long c) { return LPoly(vars::genus(), Rational(c)); }

}  // namespace

TEST_CASE("Todd series (Bernoulli oracle)") {
  CHECK(todd_series(8) == from_vector(oracle::todd(8)));
  CHECK(todd_series(2)[1] == Rational(1, 2));
  CHECK(todd_series(2)[2] == Rational(1, 12));
}

TEST_CASE("Q_y specializations") {
  const PSeries q = qy_series(8);
  RSeries alpha(8, Rational(0));
  alpha.set(1, Rational(1));
  CHECK(eval_y(q, Rational(-1)) == alpha);
  CHECK(eval_y(q, Rational(0)) == todd_series(8));
  CHECK(eval_y(q, Rational(1)) == from_vector(oracle::alpha_coth_half_alpha(8)));
}

TEST_CASE("normalized Q_y specializations") {
  const PSeries q = qyhat_series(8);
  RSeries one_plus_alpha = RSeries::one(8, Rational(0));
  one_plus_alpha.set(1, Rational(1));
  CHECK(eval_y(q, Rational(-1)) == one_plus_alpha);
  CHECK(eval_y(q, Rational(0)) == from_vector(oracle::todd(8)));
  CHECK(eval_y(q, Rational(1)) == from_vector(oracle::alpha_coth_alpha(8)));
  // defining relation: coefficient n is q_n (1 + y)^{n - 1}
  const PSeries qy = qy_series(8);
  const LPoly one_plus_y = gc(1) + genus_y();
  for (std::size_t n = 1; n <= 8; ++n) CHECK(q[n] == qy[n] * pow(one_plus_y, n - 1));
}

TEST_CASE("Hirzebruch class of P1") {
  const HomologyModel p1 = proj_space_model(1);
  REQUIRE(p1.size() == 2);
  CHECK(p1.basis[0].id == "P0");
  CHECK(p1.ty_class[1] == gc(1) - genus_y());
  CHECK(p1.ty_class[0] == gc(1) + genus_y());
}

TEST_CASE("degree of the Hirzebruch class of P^d") {
  for (int d = 0; d <= 4; ++d) {
    CAPTURE(d);
    const HomologyModel m = proj_space_model(d);
    LPoly expected(vars::genus());
    for (int i = 0; i <= d; ++i) expected += genus_y(i);
    CHECK(degree(m, m.ty_class) == expected);
    CHECK(hodge_to_chi_minus_y(m.e_poly) == expected);
  }
}

TEST_CASE("Chern classes of P^d from (1 + h)^{d+1} (oracle)") {
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    const auto c = oracle::one_plus_h_power(d);
    const HomologyModel m = proj_space_model(d);
    const HClass got = proj_space_chern_class(d);
    for (int j = 0; j <= d; ++j) CHECK(got[static_cast<std::size_t>(d - j)] == LPoly(vars::genus(), c[static_cast<std::size_t>(j)]));
    if (d <= 3) {
      for (long r = 1; r <= 4; ++r) CHECK(chern_limit(m, r) == got);
      CHECK(chern_limit_check(m) == got);
    }
  }
}

TEST_CASE("products") {
  const HomologyModel m = builtin_model("P1xP2");
  CHECK(m.dim == 3);
  CHECK(m.size() == 6);
  CHECK(degree(m, m.ty_class) == hodge_to_chi_minus_y(m.e_poly));
  CHECK(degree(m, m.ty_class) == (gc(1) + genus_y()) * (gc(1) + genus_y() + genus_y(2)));
  CHECK(product_model(point_model(), proj_space_model(2)) == proj_space_model(2));
  const HClass c = chern_limit_check(builtin_model("P1xP1"));
  CHECK(degree(builtin_model("P1xP1"), c) == gc(4));
}

TEST_CASE("builtin registry") {
  for (const auto& name : builtin_names()) CHECK_NOTHROW(builtin_model(name).validate());
  CHECK_THROWS_AS(builtin_model("P5"), DomainError);
  CHECK_THROWS_AS(builtin_model("cube"), DomainError);
}

TEST_CASE("homological Adams operation") {
  const HomologyModel m = proj_space_model(2);
  const HClass t2 = adams_h(m, 2, m.ty_class);
  CHECK(t2[0] == adams(2, m.ty_class[0]));
  CHECK(t2[2] == adams(2, m.ty_class[2]) * Rational(1, 4));
  CHECK(adams_h(m, 1, m.ty_class) == m.ty_class);
}

TEST_CASE("normalization at y = 1 rejects poles") {
  const HomologyModel m = proj_space_model(1);
  HClass c(2);
  c.set(1, gc(1));
  CHECK_THROWS_AS(normalized_y_to_1(m, c), DomainError);
  c.set(1, gc(1) - genus_y());
  CHECK(normalized_y_to_1(m, c)[1] == gc(1));
}
