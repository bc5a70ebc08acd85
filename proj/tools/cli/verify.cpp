#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "mcc/hirzebruch.hpp"
#include "mcc/lambda.hpp"
#include "mcc/motives.hpp"
#include "mcc/pontrjagin.hpp"

namespace mcc::cli {

namespace {

constexpr std::size_t kInstances = 100;
// Free-model products grow with partitions of N times the basis size.
constexpr std::size_t kPontOrderCap = 5;

using Failure = std::optional<std::string>;

class Runner {
 public:
  Runner(std::size_t order, std::uint64_t seed) : order_(order), rng_(seed) {}

  [[nodiscard]] std::size_t order() const { return order_; }
  std::mt19937_64& rng() { return rng_; }

  /// Runs f for instances 0..count-1; f returns a counterexample description on failure.
  void property(const std::string& name, std::size_t count, const std::function<Failure(std::size_t)>& f) {
    CheckOutcome c{name, true, 0, {}};
    for (std::size_t i = 0; i < count; ++i) {
      Failure fail;
      try {
        fail = f(i);
      } catch (const std::exception& e) {
        fail = std::string("exception: ") + e.what();
      }
      ++c.instances;
      if (fail) {
        c.ok = false;
        c.counterexample = "instance " + std::to_string(i) + ": " + *fail;
        break;
      }
    }
    out_.push_back(std::move(c));
  }

  void random_property(const std::string& name, const std::function<Failure()>& f) {
    property(name, kInstances, [&](std::size_t) { return f(); });
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range = 5, long max_den = 4) { return Rational(uniform(-range, range), uniform(1, max_den)); }

  /// Random polynomial with up to max_terms terms; exponents in [lo, hi] (undoubled units),
  /// half-integers allowed when `halves` is set.
  LPoly poly(const VarSet& vs, std::size_t max_terms, int lo, int hi, bool halves, long coeff_range = 3) {
    LPoly p(vs);
    const auto terms = static_cast<std::size_t>(uniform(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      Exponents e(vs.size());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const bool half = halves && vs[i].half_admissible;
        e[i] = half ? static_cast<int>(uniform(2L * lo, 2L * hi)) : 2 * static_cast<int>(uniform(lo, hi));
      }
      p += LPoly::monomial(vs, e, Rational(uniform(-coeff_range, coeff_range)));
    }
    return p;
  }

  LPoly genus_int_poly(std::size_t max_terms = 2) { return poly(vars::genus(), max_terms, 0, 3, false); }

  /// 1 + random integer coefficients through t^N.
  PSeries normalized_series(const std::function<LPoly()>& coeff, std::size_t order) {
    PSeries s = PSeries::one(order, coeff());
    for (std::size_t n = 1; n <= order; ++n) s.set(n, coeff());
    return s;
  }

  PSeries series_without_constant(const std::function<LPoly()>& coeff, std::size_t order) {
    PSeries s(order, coeff());
    for (std::size_t n = 1; n <= order; ++n) s.set(n, coeff());
    return s;
  }

  HClass hclass(const HomologyModel& m) {
    HClass c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c.set(i, poly(vars::genus(), 2, -1, 2, true));
    return c;
  }

  PontElement pont_element(const HomologyModel& m, std::size_t n, std::size_t max_terms) {
    PontElement e(n);
    if (n == 0) {
      e.add({}, LPoly(vars::genus(), rational()));
      return e;
    }
    const auto terms = static_cast<std::size_t>(uniform(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      AtomMultiset atoms;
      long left = static_cast<long>(n);
      while (left > 0) {
        const long k = uniform(1, left);
        atoms.push_back({static_cast<int>(k), static_cast<int>(uniform(0, static_cast<long>(m.size()) - 1))});
        left -= k;
      }
      e.add(std::move(atoms), poly(vars::genus(), 2, -1, 2, true));
    }
    return e;
  }

  PontSeries pont_series(const ModelPtr& m, std::size_t order, bool with_constant = true) {
    PontSeries s(m, order);
    for (std::size_t n = with_constant ? 0 : 1; n <= order; ++n) s.set(n, pont_element(*m, n, 2));
    return s;
  }

  const ModelPtr& model() {
    return models_[static_cast<std::size_t>(uniform(0, static_cast<long>(models_.size()) - 1))];
  }
  [[nodiscard]] const std::vector<ModelPtr>& models() const { return models_; }

  std::vector<CheckOutcome> take() { return std::move(out_); }

 private:
  std::size_t order_;
  std::mt19937_64 rng_;
  std::vector<CheckOutcome> out_;
  std::vector<ModelPtr> models_{share(point_model()), share(proj_space_model(1)), share(proj_space_model(2)),
                                share(builtin_model("P1xP1"))};
};

template <class T>
Failure differ(const T& lhs, const T& rhs, const std::string& context) {
  if (lhs == rhs) return std::nullopt;
  return context + "; lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
}

std::string exps_text(const EulerExponents<LPoly>& b) {
  std::string s = "[";
  for (std::size_t k = 1; k <= b.order(); ++k) s += (k > 1 ? ", " : "") + b[k].to_string();
  return s + "]";
}

std::string hclass_text(const HomologyModel& m, const HClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    s += (s.empty() ? "" : " + ") + ("(" + c[i].to_string() + ")[" + m.basis[i].id + "]");
  }
  return s.empty() ? "0" : s;
}

std::string pont_text(const PontSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    for (const auto& [m, c] : s[n].terms()) {
      out += (out.empty() ? "" : " + ") + ("(" + c.to_string() + ")" + atom_text(s.model(), m));
    }
  }
  return out.empty() ? "0" : out;
}

Failure pont_differ(const PontSeries& a, const PontSeries& b, const std::string& context) {
  if (a == b) return std::nullopt;
  return context + "; lhs = " + pont_text(a) + ", rhs = " + pont_text(b);
}

// ---------------------------------------------------------------------------

void algebra_suite(Runner& r) {
  const std::size_t n = r.order();
  r.random_property("rational_field_laws", [&]() -> Failure {
    const Rational a = r.rational(), b = r.rational(), c = r.rational();
    if (!((a + b) * c == a * c + b * c)) return "distributivity fails for " + a.to_string() + ", " + b.to_string();
    if (!b.is_zero() && !(a / b * b == a)) return "division fails for " + a.to_string() + " / " + b.to_string();
    if (!(Rational::parse(a.to_string()) == a)) return "text round trip fails for " + a.to_string();
    return std::nullopt;
  });
  r.random_property("lpoly_ring_laws", [&]() -> Failure {
    const VarSet& vs = r.uniform(0, 1) ? vars::genus() : vars::hodge();
    const LPoly a = r.poly(vs, 3, -2, 2, true), b = r.poly(vs, 3, -2, 2, true), c = r.poly(vs, 3, -2, 2, true);
    if (auto f = differ(a * b, b * a, "commutativity a = " + a.to_string() + ", b = " + b.to_string())) return f;
    if (auto f = differ((a * b) * c, a * (b * c), "associativity")) return f;
    return differ(a * (b + c), a * b + a * c, "distributivity");
  });
  r.random_property("exact_division_round_trip", [&]() -> Failure {
    const LPoly a = r.poly(vars::genus(), 3, -2, 3, true);
    LPoly b = r.poly(vars::genus(), 3, -2, 3, true);
    if (b.is_zero()) b = LPoly(vars::genus(), Rational(1));
    return differ(exact_div(a * b, b), a, "a = " + a.to_string() + ", b = " + b.to_string());
  });
  r.random_property("adams_composition_and_homomorphism", [&]() -> Failure {
    const VarSet& vs = r.uniform(0, 1) ? vars::motive() : vars::genus();
    const LPoly a = r.poly(vs, 3, -2, 2, true), b = r.poly(vs, 3, -2, 2, true);
    const long p = r.uniform(1, 4), q = r.uniform(1, 4);
    const std::string ctx = "a = " + a.to_string() + ", b = " + b.to_string() + ", r = " + std::to_string(p) +
                            ", s = " + std::to_string(q);
    if (auto f = differ(adams(1, a), a, "Psi_1 " + ctx)) return f;
    if (auto f = differ(adams(p, adams(q, a)), adams(p * q, a), "Psi_r Psi_s " + ctx)) return f;
    if (auto f = differ(adams(p, a * b), adams(p, a) * adams(p, b), "multiplicativity " + ctx)) return f;
    return differ(adams(p, a + b), adams(p, a) + adams(p, b), "additivity " + ctx);
  });
  r.random_property("series_exp_log_round_trip", [&]() -> Failure {
    const PSeries a = r.series_without_constant([&] { return r.genus_int_poly(); }, n);
    const PSeries b = r.normalized_series([&] { return r.genus_int_poly(); }, n);
    if (auto f = differ(ts_log(ts_exp(a)), a, "log(exp(a)), a = " + a.to_string())) return f;
    return differ(ts_exp(ts_log(b)), b, "exp(log(b)), b = " + b.to_string());
  });
  r.random_property("series_exp_additive", [&]() -> Failure {
    const PSeries a = r.series_without_constant([&] { return r.genus_int_poly(); }, n);
    const PSeries b = r.series_without_constant([&] { return r.genus_int_poly(); }, n);
    return differ(ts_exp(a + b), ts_exp(a) * ts_exp(b), "a = " + a.to_string() + ", b = " + b.to_string());
  });
  r.random_property("series_inverse", [&]() -> Failure {
    const PSeries a = r.normalized_series([&] { return r.genus_int_poly(); }, n);
    return differ(a * ts_invert(a), PSeries::one(n, a[0]), "a = " + a.to_string());
  });
  r.random_property("series_substitution_composition", [&]() -> Failure {
    const PSeries a = r.normalized_series([&] { return r.genus_int_poly(); }, n);
    const auto j = static_cast<std::size_t>(r.uniform(1, 3)), k = static_cast<std::size_t>(r.uniform(1, 3));
    const int sign = r.uniform(0, 1) ? 1 : -1;
    if (auto f = differ(ts_subst(ts_subst(a, 1, j), 1, k), ts_subst(a, 1, j * k), "a = " + a.to_string())) return f;
    return differ(ts_subst(ts_subst(a, sign, 1), sign, 1), a, "double sign flip, a = " + a.to_string());
  });
}

// ---------------------------------------------------------------------------

/// b_k read off degree by degree: divide A by the product of the factors found so far.
EulerExponents<LPoly> euler_log_by_division(const PSeries& a) {
  const std::size_t n = a.order();
  EulerExponents<LPoly> b(n, a[0]);
  PSeries rest = a;
  for (std::size_t k = 1; k <= n; ++k) {
    b.set(k, rest[k]);
    const PSeries factor = ts_subst(pre_lambda(rest[k], n), 1, k);
    rest = rest * ts_invert(factor);
  }
  return b;
}

void lambda_suite(Runner& r) {
  const std::size_t n = r.order();
  auto series = [&] { return r.normalized_series([&] { return r.genus_int_poly(); }, n); };
  auto elem = [&] { return r.genus_int_poly(3); };

  r.random_property("euler_log_of_euler_exp", [&]() -> Failure {
    std::vector<LPoly> v;
    for (std::size_t k = 1; k <= n; ++k) v.push_back(elem());
    const auto b = EulerExponents<LPoly>::from_values(v);
    const auto back = euler_log(euler_exp(b));
    if (back == b) return std::nullopt;
    return "b = " + exps_text(b) + ", recovered " + exps_text(back);
  });
  r.random_property("euler_exp_of_euler_log", [&]() -> Failure {
    const PSeries a = series();
    return differ(euler_exp(euler_log(a)), a, "A = " + a.to_string());
  });
  r.random_property("euler_log_matches_division", [&]() -> Failure {
    const PSeries a = series();
    const auto lhs = euler_log(a);
    const auto rhs = euler_log_by_division(a);
    if (lhs == rhs) return std::nullopt;
    return "A = " + a.to_string() + ": " + exps_text(lhs) + " vs " + exps_text(rhs);
  });
  r.random_property("axiom_i_power_zero", [&]() -> Failure {
    const PSeries a = series();
    return differ(power(a, LPoly(vars::genus())), PSeries::one(n, a[0]), "A = " + a.to_string());
  });
  r.random_property("axiom_ii_power_one", [&]() -> Failure {
    const PSeries a = series();
    return differ(power(a, LPoly(vars::genus(), Rational(1))), a, "A = " + a.to_string());
  });
  r.random_property("axiom_iii_product_base", [&]() -> Failure {
    const PSeries a = series(), b = series();
    const LPoly m = elem();
    return differ(power(a * b, m), power(a, m) * power(b, m),
                  "A = " + a.to_string() + ", B = " + b.to_string() + ", m = " + m.to_string());
  });
  r.random_property("axiom_iv_sum_exponent", [&]() -> Failure {
    const PSeries a = series();
    const LPoly m = elem(), k = elem();
    return differ(power(a, m + k), power(a, m) * power(a, k),
                  "A = " + a.to_string() + ", m = " + m.to_string() + ", n = " + k.to_string());
  });
  r.random_property("axiom_v_product_exponent", [&]() -> Failure {
    const PSeries a = series();
    const LPoly m = elem(), k = elem();
    return differ(power(a, m * k), power(power(a, k), m),
                  "A = " + a.to_string() + ", m = " + m.to_string() + ", n = " + k.to_string());
  });
  r.random_property("axiom_vi_linear_term", [&]() -> Failure {
    const LPoly m = elem();
    PSeries one_plus_t = PSeries::one(n, m);
    one_plus_t.set(1, LPoly(vars::genus(), Rational(1)));
    const PSeries p = power(one_plus_t, m);
    if (p[0].is_one() && p[1] == m) return std::nullopt;
    return "m = " + m.to_string() + ", (1+t)^m = " + p.to_string();
  });
  r.random_property("axiom_vii_substitution", [&]() -> Failure {
    const PSeries a = series();
    const LPoly m = elem();
    const auto k = static_cast<std::size_t>(r.uniform(2, 3));
    return differ(power(ts_subst(a, 1, k), m), ts_subst(power(a, m), 1, k),
                  "A = " + a.to_string() + ", m = " + m.to_string() + ", k = " + std::to_string(k));
  });
  r.random_property("power_of_one_plus_t_is_binomial", [&]() -> Failure {
    const long m = r.uniform(0, 9);
    RSeries one_plus_t = RSeries::one(n, Rational(0));
    one_plus_t.set(1, Rational(1));
    const RSeries p = power(one_plus_t, Rational(m));
    for (std::size_t i = 0; i <= n; ++i) {
      if (!(p[i] == binomial(Rational(m), static_cast<long>(i)))) return "m = " + std::to_string(m) + ": " + p.to_string();
    }
    return std::nullopt;
  });
  r.random_property("polynomial_ring_lambda_matches_adams", [&]() -> Failure {
    const LPoly p = r.poly(vars::hodge(), 4, 0, 3, false, 4);
    return differ(pre_lambda_polyring(p, n), pre_lambda(p, n), "p = " + p.to_string());
  });
}

// ---------------------------------------------------------------------------

void motives_suite(Runner& r) {
  const std::size_t n = r.order();
  auto motive_elem = [&] { return r.poly(vars::motive(), 3, -1, 2, true); };

  r.random_property("chi_minus_y_respects_power", [&]() -> Failure {
    const PSeries a = r.normalized_series(motive_elem, n);
    const LPoly m = motive_elem();
    return differ(chi_minus_y_series(power(a, m)), power(chi_minus_y_series(a), spec_chi_minus_y(m)),
                  "A = " + a.to_string() + ", m = " + m.to_string());
  });
  r.random_property("chi_respects_power", [&]() -> Failure {
    const PSeries a = r.normalized_series(motive_elem, n);
    const LPoly m = motive_elem();
    return differ(chi_series(power(a, m)), power(chi_series(a), spec_chi(m)),
                  "A = " + a.to_string() + ", m = " + m.to_string());
  });
  r.random_property("hodge_specialization_respects_power", [&]() -> Failure {
    auto integral = [&] { return r.poly(vars::motive(), 3, 0, 2, false); };
    const PSeries a = r.normalized_series(integral, n);
    const LPoly m = integral();
    return differ(specialize_series(power(a, m), vars::hodge()), power(specialize_series(a, vars::hodge()), spec_e(m)),
                  "A = " + a.to_string() + ", m = " + m.to_string());
  });
  r.random_property("kapranov_zeta_multiplicative", [&]() -> Failure {
    const LPoly x = r.poly(vars::hodge(), 3, 0, 2, false), y = r.poly(vars::hodge(), 3, 0, 2, false);
    return differ(kapranov_zeta(x + y, n), kapranov_zeta(x, n) * kapranov_zeta(y, n),
                  "x = " + x.to_string() + ", y = " + y.to_string());
  });
  r.random_property("hilbert_series_exponent_additive", [&]() -> Failure {
    const LPoly x = motive_elem(), y = motive_elem();
    const int d = static_cast<int>(r.uniform(1, 2));
    return differ(hilb_motive_series(x + y, d, n), hilb_motive_series(x, d, n) * hilb_motive_series(y, d, n),
                  "d = " + std::to_string(d) + ", x = " + x.to_string() + ", y = " + y.to_string());
  });
  r.property("punctual_exponents_closed_form", 4, [&](std::size_t i) -> Failure {
    const int d = static_cast<int>(i) + 1;
    const auto small = punctual_exponents_small(d);
    const auto closed = punctual_exponents_closed_form(d);
    if (small == closed) return std::nullopt;
    return "d = " + std::to_string(d) + ": " + exps_text(small) + " vs " + exps_text(closed);
  });
  r.property("punctual_series_round_trip", 4, [&](std::size_t i) -> Failure {
    const int d = static_cast<int>(i) + 1;
    const std::size_t order = d <= 2 ? n : std::min<std::size_t>(n, 3);
    return differ(euler_exp(punctual_exponents(d, order)), punctual_series(d, order), "d = " + std::to_string(d));
  });
  r.property("virtual_exponents_euler_characteristic", 6, [&](std::size_t i) -> Failure {
    const long k = static_cast<long>(i) + 1;
    const Rational chi = spec_chi(virtual_alpha(k));
    if (chi == Rational(k)) return std::nullopt;
    return "chi(alpha_" + std::to_string(k) + ") = " + chi.to_string();
  });
}

// ---------------------------------------------------------------------------

std::vector<Rational> bernoulli(std::size_t n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0, B_1 = -1/2
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j) acc += binomial(Rational(static_cast<long>(m) + 1), static_cast<long>(j)) * b[j];
    b[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  return b;
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

void hirzebruch_suite(Runner& r) {
  const std::size_t n = r.order();
  const auto b = bernoulli(n);
  RSeries todd(n, Rational(0)), coth_half(n, Rational(0)), coth(n, Rational(0)), alpha(n, Rational(0)),
      one_plus_alpha(n, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    // a / (1 - e^{-a}) uses B_1 = +1/2
    todd.set(i, (i == 1 ? -b[i] : b[i]) / factorial(i));
    if (i % 2 == 0) {
      coth_half.set(i, Rational(2) * b[i] / factorial(i));
      coth.set(i, Rational(2).pow(static_cast<long>(i)) * b[i] / factorial(i));
    }
  }
  if (n >= 1) {
    alpha.set(1, Rational(1));
    one_plus_alpha.set(1, Rational(1));
  }
  one_plus_alpha.set(0, Rational(1));

  r.property("qy_specializations", 2, [&](std::size_t i) -> Failure {
    const PSeries q = qy_series(n);
    return i == 0 ? differ(eval_y(q, Rational(-1)), alpha, "y = -1") : differ(eval_y(q, Rational(1)), coth_half, "y = 1");
  });
  r.property("qyhat_specializations", 3, [&](std::size_t i) -> Failure {
    const PSeries q = qyhat_series(n);
    if (i == 0) return differ(eval_y(q, Rational(-1)), one_plus_alpha, "y = -1");
    if (i == 1) return differ(eval_y(q, Rational(0)), todd, "y = 0");
    return differ(eval_y(q, Rational(1)), coth, "y = 1");
  });
  r.property("degree_equals_chi_minus_y", 8, [&](std::size_t i) -> Failure {
    const HomologyModel m = i <= 4 ? proj_space_model(static_cast<int>(i))
                                   : builtin_model(std::vector<std::string>{"P1xP1", "P1xP2", "P2xP2"}[i - 5]);
    return differ(degree(m, m.ty_class), hodge_to_chi_minus_y(m.e_poly), m.name);
  });
  r.property("chern_limit_independent_of_r", 16, [&](std::size_t i) -> Failure {
    const int d = static_cast<int>(i / 4) + 1;
    const long rr = static_cast<long>(i % 4) + 1;
    const HomologyModel m = proj_space_model(d);
    const HClass got = chern_limit(m, rr), want = proj_space_chern_class(d);
    if (got == want) return std::nullopt;
    return m.name + ", r = " + std::to_string(rr) + ": " + hclass_text(m, got) + " vs " + hclass_text(m, want);
  });
  r.random_property("homological_adams_composition", [&]() -> Failure {
    const ModelPtr& m = r.model();
    const HClass c = r.hclass(*m);
    const long p = r.uniform(1, 4), q = r.uniform(1, 4);
    if (adams_h(*m, p, adams_h(*m, q, c)) == adams_h(*m, p * q, c)) return std::nullopt;
    return m->name + ", c = " + hclass_text(*m, c) + ", r = " + std::to_string(p) + ", s = " + std::to_string(q);
  });
}

// ---------------------------------------------------------------------------

void pontrjagin_suite(Runner& r) {
  const std::size_t n = std::min(r.order(), kPontOrderCap);
  auto series = [&](const ModelPtr& m) { return r.pont_series(m, n); };

  r.random_property("product_commutative", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m), b = series(m);
    return pont_differ(pont_mul(a, b), pont_mul(b, a), m->name);
  });
  r.random_property("product_associative", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m), b = series(m), c = series(m);
    return pont_differ(pont_mul(pont_mul(a, b), c), pont_mul(a, pont_mul(b, c)), m->name);
  });
  r.random_property("product_unit", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m);
    return pont_differ(pont_mul(PontSeries::unit(m, n), a), a, m->name);
  });
  r.random_property("product_distributive", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m), b = series(m), c = series(m);
    return pont_differ(pont_mul(a, b + c), pont_mul(a, b) + pont_mul(a, c), m->name);
  });
  r.random_property("power_op_ring_homomorphism", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m), b = series(m);
    const auto k = static_cast<std::size_t>(r.uniform(1, 3));
    if (auto f = pont_differ(power_op(k, pont_mul(a, b)), pont_mul(power_op(k, a), power_op(k, b)), "product")) return f;
    return pont_differ(power_op(k, a + b), power_op(k, a) + power_op(k, b), "sum");
  });
  r.random_property("power_op_composition", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m);
    const auto j = static_cast<std::size_t>(r.uniform(1, 3)), k = static_cast<std::size_t>(r.uniform(1, 3));
    return pont_differ(power_op(j, power_op(k, a)), power_op(j * k, a), m->name);
  });
  r.random_property("power_op_on_pushforward", [&]() -> Failure {
    const ModelPtr m = r.model();
    const HClass g = r.hclass(*m);
    const auto k = static_cast<std::size_t>(r.uniform(1, 3)), j = static_cast<std::size_t>(r.uniform(1, 2));
    PontSeries lhs(m, n * k * j), rhs(m, n * k * j);
    lhs.set(j, d_push(j, g));
    rhs.set(j * k, d_push(j * k, g));
    return pont_differ(power_op(k, lhs), rhs, "gamma = " + hclass_text(*m, g));
  });
  r.random_property("power_op_of_exp_inv", [&]() -> Failure {
    const ModelPtr m = r.model();
    const HClass g = r.hclass(*m);
    const auto k = static_cast<std::size_t>(r.uniform(2, 3));
    return pont_differ(power_op(k, hom_exp_inv(m, g, 1, n)), hom_exp_inv(m, g, k, n), "gamma = " + hclass_text(*m, g));
  });
  r.random_property("exp_inv_additive", [&]() -> Failure {
    const ModelPtr m = r.model();
    const HClass g1 = r.hclass(*m), g2 = r.hclass(*m);
    const auto k = static_cast<std::size_t>(r.uniform(1, 3));
    return pont_differ(hom_exp_inv(m, g1 + g2, k, n), pont_mul(hom_exp_inv(m, g1, k, n), hom_exp_inv(m, g2, k, n)),
                       "gamma1 = " + hclass_text(*m, g1) + ", gamma2 = " + hclass_text(*m, g2));
  });
  r.random_property("degree_ring_homomorphism", [&]() -> Failure {
    const ModelPtr m = r.model();
    const PontSeries a = series(m), b = series(m);
    return differ(pont_degree(pont_mul(a, b)), pont_degree(a) * pont_degree(b), m->name);
  });
  r.random_property("degree_intertwines_lambda", [&]() -> Failure {
    const ModelPtr m = r.model();
    const HClass g = r.hclass(*m);
    const auto k = static_cast<std::size_t>(r.uniform(1, 3));
    return differ(pont_degree(hom_exp_inv(m, g, k, n)), ts_subst(pre_lambda(degree(*m, g), n), 1, k),
                  m->name + ", gamma = " + hclass_text(*m, g));
  });
  r.random_property("exponentiation_single_exp_vs_factors", [&]() -> Failure {
    const ModelPtr m = r.model();
    const HClass g = r.hclass(*m);
    const PSeries a = r.normalized_series([&] { return r.genus_int_poly(); }, n);
    return pont_differ(hom_exponentiation(m, a, g), hom_exponentiation_product(m, a, g),
                       "A = " + a.to_string() + ", gamma = " + hclass_text(*m, g));
  });

  const std::size_t n3 = std::min<std::size_t>(n, 3);
  const auto& models = r.models();
  r.property("mt2_route_surface", models.size(), [&](std::size_t i) -> Failure {
    const ModelPtr& m = models[i];
    return pont_differ(mt2_series(m, punctual_series(2, n3)), hilb_class_series(m, 2, n3), m->name);
  });
  r.property("config_equals_mt2_one_plus_t", models.size(), [&](std::size_t i) -> Failure {
    const ModelPtr& m = models[i];
    PSeries one_plus_t = PSeries::one(n3, LPoly(vars::motive()));
    one_plus_t.set(1, LPoly(vars::motive(), Rational(1)));
    return pont_differ(config_class_series(m, n3), mt2_series(m, one_plus_t), m->name);
  });
  r.property("chern_is_normalized_limit", 3 * models.size(), [&](std::size_t i) -> Failure {
    const ModelPtr& m = models[i % models.size()];
    const int d = static_cast<int>(i / models.size()) + 1;
    return pont_differ(normalized_y_to_1(hilb_class_series(m, d, n3)), chern_class_series(m, d, n3),
                       m->name + ", d = " + std::to_string(d));
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"algebra", "lambda", "motives", "hirzebruch", "pontrjagin", "all"}; }

std::vector<CheckOutcome> run_suite(const std::string& suite, std::size_t order, std::uint64_t seed) {
  const std::vector<std::pair<std::string, void (*)(Runner&)>> suites{
      {"algebra", algebra_suite},       {"lambda", lambda_suite},         {"motives", motives_suite},
      {"hirzebruch", hirzebruch_suite}, {"pontrjagin", pontrjagin_suite},
  };
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (order < 1) throw InputError("verify needs --order >= 1");
  std::vector<CheckOutcome> out;
  for (const auto& [name, fn] : suites) {
    if (suite != "all" && suite != name) continue;
    Runner r(order, seed);
    fn(r);
    for (auto& c : r.take()) {
      c.name = name + "." + c.name;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace mcc::cli
