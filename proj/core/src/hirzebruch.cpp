#include "mcc/hirzebruch.hpp"

#include <regex>

#include "mcc/errors.hpp"
#include "mcc/lambda.hpp"

namespace mcc {

namespace {

LPoly y_poly() { return LPoly::variable(vars::genus(), "y"); }
LPoly genus_const(const Rational& c) { return LPoly(vars::genus(), c); }

Rational factorial(long n) {
  Rational f(1);
  for (long i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

LPoly hodge_uv_power(long i) { return LPoly::monomial(vars::hodge(), Exponents{2 * static_cast<int>(i), 2 * static_cast<int>(i)}); }

}  // namespace

RSeries todd_series(std::size_t order) {
  // (1 - e^{-a}) / a = sum_n (-1)^n a^n / (n+1)!
  RSeries g(order, Rational(0));
  for (std::size_t n = 0; n <= order; ++n) {
    g.set(n, Rational(n % 2 == 0 ? 1 : -1) / factorial(static_cast<long>(n) + 1));
  }
  return ts_invert(g);
}

PSeries qy_series(std::size_t order) {
  const RSeries td = todd_series(order);
  PSeries out(order, LPoly(vars::genus()));
  for (std::size_t n = 0; n <= order; ++n) {
    // Td * (1 + y e^{-a})
    Rational with_exp(0);
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t m = n - j;
      with_exp += td[j] * Rational(m % 2 == 0 ? 1 : -1) / factorial(static_cast<long>(m));
    }
    out.set(n, genus_const(td[n]) + y_poly() * with_exp);
  }
  return out;
}

PSeries qyhat_series(std::size_t order) {
  const PSeries q = qy_series(order);
  const LPoly one_plus_y = genus_const(Rational(1)) + y_poly();
  PSeries out(order, LPoly(vars::genus()));
  for (std::size_t n = 0; n <= order; ++n) {
    out.set(n, exact_div(q[n] * pow(one_plus_y, n), one_plus_y));
  }
  return out;
}

RSeries eval_y(const PSeries& s, const Rational& y) {
  const Substitution at = Substitution(vars::scalar()).set("y", y);
  std::vector<Rational> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(at.apply(x).to_rational());
  return RSeries::from_coeffs(std::move(c));
}

HomologyModel proj_space_model(int d) {
  if (d < 0) throw DomainError("projective space needs d >= 0");
  HomologyModel m;
  m.name = "P" + std::to_string(d);
  m.dim = d;
  m.proper = true;
  for (int k = 0; k <= d; ++k) m.basis.push_back({"P" + std::to_string(k), k});
  m.zero_degree_index = 0;

  const auto n = static_cast<std::size_t>(d);
  const PSeries q = qy_series(n);
  PSeries qpow = PSeries::one(n, LPoly(vars::genus()));
  for (int i = 0; i <= d; ++i) qpow = qpow * q;

  const LPoly one_plus_y = genus_const(Rational(1)) + y_poly();
  const Substitution flip = Substitution(vars::genus()).set("y", -y_poly());
  m.ty_class = HClass(n + 1);
  HClass chern(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    // h^j caps [P^d] to [P^{d-j}]
    try {
      exact_div(qpow[j], pow(one_plus_y, n + 1 - j));
    } catch (const InexactDivisionError&) {
      throw InternalCheckError("Q_y(h)^{d+1} coefficient of h^" + std::to_string(j) +
                               " is not divisible by the expected power of (1+y)");
    }
    m.ty_class.set(n - j, flip.apply(exact_div(qpow[j], one_plus_y)));
    chern.set(n - j, genus_const(binomial(Rational(d + 1), static_cast<long>(j))));
  }
  m.chern_class = chern;

  LPoly e(vars::hodge());
  for (int i = 0; i <= d; ++i) e += hodge_uv_power(i);
  m.e_poly = e;
  return m;
}

HomologyModel point_model() {
  HomologyModel m = proj_space_model(0);
  m.name = "point";
  return m;
}

namespace {

bool is_point(const HomologyModel& m) { return m.dim == 0 && m.size() == 1 && m.ty_class[0].is_one(); }

}  // namespace

HomologyModel product_model(const HomologyModel& a, const HomologyModel& b) {
  if (!a.proper || !b.proper) throw DomainError("products are formed of proper models only");
  if (is_point(a)) return b;
  if (is_point(b)) return a;
  HomologyModel m;
  m.name = a.name + "x" + b.name;
  m.dim = a.dim + b.dim;
  m.proper = true;
  const bool with_chern = a.chern_class && b.chern_class;
  std::vector<LPoly> ty;
  std::vector<LPoly> chern;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == *a.zero_degree_index && j == *b.zero_degree_index) m.zero_degree_index = m.basis.size();
      m.basis.push_back({a.basis[i].id + "x" + b.basis[j].id, a.basis[i].deg + b.basis[j].deg});
      ty.push_back(a.ty_class[i] * b.ty_class[j]);
      if (with_chern) chern.push_back((*a.chern_class)[i] * (*b.chern_class)[j]);
    }
  }
  m.ty_class = HClass(std::move(ty));
  if (with_chern) m.chern_class = HClass(std::move(chern));
  m.e_poly = a.e_poly * b.e_poly;
  return m;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"point"};
  for (int a = 1; a <= 4; ++a) names.push_back("P" + std::to_string(a));
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) names.push_back("P" + std::to_string(a) + "xP" + std::to_string(b));
  }
  return names;
}

HomologyModel builtin_model(const std::string& name) {
  if (name == "point") return point_model();
  static const std::regex single("P([1-4])");
  static const std::regex pair("P([1-4])xP([1-4])");
  std::smatch m;
  if (std::regex_match(name, m, single)) return proj_space_model(std::stoi(m[1]));
  if (std::regex_match(name, m, pair)) {
    return product_model(proj_space_model(std::stoi(m[1])), proj_space_model(std::stoi(m[2])));
  }
  throw DomainError("unknown builtin model '" + name + "'");
}

HClass proj_space_chern_class(int d) { return *proj_space_model(d).chern_class; }

HClass chern_limit(const HomologyModel& model, long r) {
  return normalized_y_to_1(model, adams_h(model, r, model.ty_class));
}

HClass chern_limit_check(const HomologyModel& model, long max_r) {
  if (!model.chern_class) {
    throw DomainError("model '" + model.name + "' has no independently known Chern class");
  }
  for (long r = 1; r <= max_r; ++r) {
    if (!(chern_limit(model, r) == *model.chern_class)) {
      throw InternalCheckError("y -> 1 limit of the normalized T class of '" + model.name +
                               "' differs from its Chern class at r = " + std::to_string(r));
    }
  }
  return *model.chern_class;
}

HClass chern_class_of(const HomologyModel& model) {
  if (model.chern_class) return *model.chern_class;
  return chern_limit(model, 1);
}

}  // namespace mcc
