#include "mcc/motives.hpp"

#include <string>

#include "mcc/errors.hpp"

namespace mcc {

LPoly motive_L(const Rational& power) { return LPoly::variable(vars::motive(), "L", power); }
LPoly genus_y(const Rational& power) { return LPoly::variable(vars::genus(), "y", power); }

LPoly l_factorial(long n) {
  if (n < 0) throw DomainError("l_factorial needs n >= 0");
  LPoly out(vars::motive(), Rational(1));
  const LPoly one(vars::motive(), Rational(1));
  for (long i = 1; i <= n; ++i) out = out * (motive_L(Rational(i)) - one);
  return out;
}

LPoly l_binomial(long n, long k) {
  if (k < 0 || k > n) throw DomainError("l_binomial needs 0 <= k <= n");
  try {
    return exact_div(l_factorial(n), l_factorial(k) * l_factorial(n - k));
  } catch (const InexactDivisionError& e) {
    throw InternalCheckError(std::string("L-binomial is not a polynomial: ") + e.what());
  }
}

PSeries punctual_hilb_small(int d, std::size_t order) {
  if (d < 1) throw DomainError("punctual series needs d >= 1");
  if (order > 3) {
    throw UnsupportedRangeError("closed-form punctual series is known only through t^3");
  }
  const LPoly one(vars::motive(), Rational(1));
  std::vector<LPoly> c{one, one, l_binomial(d, 1), l_binomial(d + 1, 2)};
  c.resize(order + 1);
  return PSeries::from_coeffs(std::move(c));
}

EulerExponents<LPoly> punctual_exponents_closed_form(int d) {
  if (d < 1) throw DomainError("punctual exponents need d >= 1");
  const LPoly one(vars::motive(), Rational(1));
  const LPoly l1 = motive_L() - one;
  const LPoly ld = exact_div(motive_L(Rational(d)) - one, l1);
  const LPoly a3 = exact_div((motive_L(Rational(d + 1)) - one) * (motive_L(Rational(d)) - one),
                             (motive_L(Rational(2)) - one) * l1);
  return EulerExponents<LPoly>::from_values({one, ld - one, a3 - ld});
}

EulerExponents<LPoly> punctual_exponents_small(int d) {
  auto b = euler_log(punctual_hilb_small(d, 3), IntegralityMode::Strict);
  if (!(b == punctual_exponents_closed_form(d))) {
    throw InternalCheckError("Euler inversion disagrees with the closed-form exponents at d = " +
                             std::to_string(d));
  }
  return b;
}

PSeries surface_punctual_series(std::size_t order) {
  EulerExponents<LPoly> b(order, LPoly(vars::motive()));
  for (std::size_t k = 1; k <= order; ++k) b.set(k, motive_L(Rational(static_cast<long>(k) - 1)));
  return euler_exp(b);
}

EulerExponents<LPoly> punctual_exponents(int d, std::size_t order) {
  if (d < 1) throw DomainError("punctual exponents need d >= 1");
  EulerExponents<LPoly> b(order, LPoly(vars::motive()));
  if (d <= 2) {
    for (std::size_t k = 1; k <= order; ++k) {
      if (d == 2) b.set(k, motive_L(Rational(static_cast<long>(k) - 1)));
    }
    if (d == 1 && order >= 1) b.set(1, motive_L(Rational(0)));
    return b;
  }
  if (order > 3) {
    throw UnsupportedRangeError("Euler exponents of the punctual Hilbert series of C^" + std::to_string(d) +
                                " are unknown beyond k = 3");
  }
  const auto small = punctual_exponents_small(d);
  for (std::size_t k = 1; k <= order; ++k) b.set(k, small[k]);
  return b;
}

PSeries punctual_series(int d, std::size_t order) {
  if (d < 1) throw DomainError("punctual series needs d >= 1");
  if (d == 1) {
    return PSeries::from_coeffs(std::vector<LPoly>(order + 1, LPoly(vars::motive(), Rational(1))));
  }
  if (d == 2) return surface_punctual_series(order);
  if (order > 3) {
    throw UnsupportedRangeError("punctual Hilbert series of C^" + std::to_string(d) +
                                " is unknown beyond t^3");
  }
  return punctual_hilb_small(d, order);
}

LPoly spec_e(const LPoly& m) {
  const LPoly uv = LPoly::from_terms(vars::hodge(), {{{1, 1}, 1}});
  return Substitution(vars::hodge()).set("L", uv).apply(m);
}

LPoly spec_chi_minus_y(const LPoly& m) {
  return Substitution(vars::genus()).set("L", genus_y(), -genus_y(Rational(1, 2))).apply(m);
}

Rational spec_chi(const LPoly& m) {
  return Substitution(vars::scalar()).set("L", Rational(1), Rational(-1)).apply(m).to_rational();
}

LPoly hodge_to_chi_minus_y(const LPoly& e) {
  return Substitution(vars::genus()).set("u", genus_y()).set("v", Rational(1)).apply(e);
}

Rational hodge_to_chi(const LPoly& e) {
  return Substitution(vars::scalar()).set("u", Rational(1)).set("v", Rational(1)).apply(e).to_rational();
}

namespace {

LPoly specialize(const LPoly& m, const VarSet& target) {
  if (m.vars() == target) return m;
  if (!(m.vars() == vars::motive())) {
    throw MismatchError("cannot specialize from " + m.vars().describe() + " to " + target.describe());
  }
  if (target == vars::hodge()) return spec_e(m);
  if (target == vars::genus()) return spec_chi_minus_y(m);
  if (target == vars::scalar()) return LPoly(vars::scalar(), spec_chi(m));
  throw MismatchError("no specialization from the motive ring to " + target.describe());
}

}  // namespace

PSeries specialize_series(const PSeries& s, const VarSet& target) {
  std::vector<LPoly> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(specialize(x, target));
  return PSeries::from_coeffs(std::move(c));
}

PSeries chi_minus_y_series(const PSeries& s) { return specialize_series(s, vars::genus()); }

RSeries chi_series(const PSeries& s) {
  std::vector<Rational> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(specialize(x, vars::scalar()).to_rational());
  return RSeries::from_coeffs(std::move(c));
}

PSeries hilb_motive_series(const LPoly& x, const PSeries& punctual) {
  return power(specialize_series(punctual, x.vars()), x);
}

PSeries hilb_motive_series(const LPoly& x, int d, std::size_t order) {
  return hilb_motive_series(x, punctual_series(d, order));
}

PSeries kapranov_zeta(const LPoly& e, std::size_t order) { return pre_lambda_polyring(e, order); }

PSeries config_space_series(const LPoly& x, std::size_t order) {
  PSeries one_plus_t = PSeries::one(order, x);
  if (order >= 1) one_plus_t.set(1, one_like(x));
  return power(one_plus_t, x);
}

LPoly virtual_alpha(long k) {
  if (k < 1) throw DomainError("virtual exponents start at k = 1");
  const LPoly one(vars::motive(), Rational(1));
  const LPoly root = -motive_L(Rational(1, 2));  // the rank-one element -L^{1/2}
  const LPoly root_inv = *root.unit_inverse();
  const LPoly num = pow(root_inv, static_cast<unsigned long>(k)) - pow(root, static_cast<unsigned long>(k));
  const LPoly alpha = exact_div(num, motive_L() * (one - motive_L()));

  LPoly geometric(vars::motive());
  for (long i = 0; i < k; ++i) geometric += motive_L(Rational(i));
  const LPoly closed = motive_L(Rational(-k - 2, 2)) * geometric * Rational(k % 2 == 0 ? 1 : -1);
  if (!(alpha == closed)) {
    throw InternalCheckError("virtual exponent alpha_" + std::to_string(k) +
                             " disagrees with its product form");
  }
  return alpha;
}

PSeries virtual_punctual_series(std::size_t order) {
  EulerExponents<LPoly> b(order, LPoly(vars::motive()));
  for (std::size_t k = 1; k <= order; ++k) b.set(k, virtual_alpha(static_cast<long>(k)));
  return ts_subst(euler_exp(b), -1, 1);
}

PSeries virtual_hilb_series(const LPoly& x, std::size_t order) {
  return hilb_motive_series(x, virtual_punctual_series(order));
}

RSeries macmahon_series(std::size_t order) {
  EulerExponents<Rational> b(order, Rational(0));
  for (std::size_t k = 1; k <= order; ++k) b.set(k, Rational(static_cast<long>(k)));
  return euler_exp(b);
}

}  // namespace mcc
