#include "mcc/pontrjagin.hpp"

#include <algorithm>

#include "mcc/errors.hpp"
#include "mcc/hirzebruch.hpp"
#include "mcc/motives.hpp"

namespace mcc {

// ---------------------------------------------------------------------------
// PontElement

PontElement PontElement::unit() {
  PontElement e(0);
  e.terms_.emplace(AtomMultiset{}, LPoly(vars::genus(), Rational(1)));
  return e;
}

void PontElement::add(AtomMultiset m, const LPoly& c) {
  if (c.is_zero()) return;
  std::size_t total = 0;
  for (const auto& a : m) {
    if (a.k < 1) throw DomainError("atom pushforward index must be positive");
    total += static_cast<std::size_t>(a.k);
  }
  if (total != n_) throw MismatchError("monomial of degree " + std::to_string(total) + " added in degree " + std::to_string(n_));
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PontElement& PontElement::operator+=(const PontElement& o) {
  if (o.n_ != n_) throw MismatchError("adding Pontrjagin elements of different degrees");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PontElement& PontElement::operator-=(const PontElement& o) {
  if (o.n_ != n_) throw MismatchError("subtracting Pontrjagin elements of different degrees");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PontElement& PontElement::operator*=(const LPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

PontElement& PontElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

PontElement pont_mul(const PontElement& a, const PontElement& b) {
  PontElement out(a.grading() + b.grading());
  AtomMultiset merged;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      merged.clear();
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      out.add(merged, ca * cb);
    }
  }
  return out;
}

PontElement d_push(std::size_t k, const HClass& gamma) {
  if (k < 1) throw DomainError("d_push needs k >= 1");
  PontElement out(k);
  for (std::size_t b = 0; b < gamma.size(); ++b) {
    out.add({Atom{static_cast<int>(k), static_cast<int>(b)}}, gamma[b]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PontSeries

ModelPtr share(HomologyModel model) { return std::make_shared<const HomologyModel>(std::move(model)); }

PontSeries::PontSeries(std::shared_ptr<const HomologyModel> model, std::size_t order) : model_(std::move(model)) {
  if (!model_) throw DomainError("Pontrjagin series needs a model");
  c_.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c_.emplace_back(n);
}

PontSeries PontSeries::unit(std::shared_ptr<const HomologyModel> model, std::size_t order) {
  PontSeries s(std::move(model), order);
  s.c_[0] = PontElement::unit();
  return s;
}

void PontSeries::set(std::size_t n, PontElement e) {
  if (e.grading() != n) throw MismatchError("component grading does not match its t-degree");
  c_.at(n) = std::move(e);
}

void PontSeries::add(std::size_t n, const PontElement& e) { c_.at(n) += e; }

void PontSeries::require_compatible(const PontSeries& o) const {
  if (o.order() != order()) {
    throw MismatchError("series orders differ (" + std::to_string(order()) + " vs " + std::to_string(o.order()) + ")");
  }
  if (o.model_ != model_ && !(*o.model_ == *model_)) {
    throw MismatchError("series over different models ('" + model_->name + "' vs '" + o.model_->name + "')");
  }
}

PontSeries& PontSeries::operator+=(const PontSeries& o) {
  require_compatible(o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

PontSeries& PontSeries::operator-=(const PontSeries& o) {
  require_compatible(o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

PontSeries& PontSeries::operator*=(const LPoly& c) {
  for (auto& e : c_) e *= c;
  return *this;
}

bool operator==(const PontSeries& a, const PontSeries& b) {
  if (a.order() != b.order()) return false;
  if (a.model_ != b.model_ && !(*a.model_ == *b.model_)) return false;
  return a.c_ == b.c_;
}

PontSeries pont_mul(const PontSeries& a, const PontSeries& b) {
  a.require_compatible(b);
  const std::size_t n = a.order();
  PontSeries out(a.model_ptr(), n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out.add(i + j, pont_mul(a[i], b[j]));
    }
  }
  return out;
}

PontSeries power_op(std::size_t k, const PontSeries& s) {
  if (k < 1) throw DomainError("power operation index must be positive");
  PontSeries out(s.model_ptr(), s.order());
  for (std::size_t n = 0; n * k <= s.order(); ++n) {
    PontElement e(n * k);
    for (const auto& [m, c] : s[n].terms()) {
      AtomMultiset scaled = m;
      for (auto& a : scaled) a.k *= static_cast<int>(k);
      e.add(std::move(scaled), c);
    }
    out.set(n * k, std::move(e));
  }
  return out;
}

PontSeries pont_exp(const PontSeries& s) {
  if (!s[0].is_zero()) throw DomainError("exp needs a series without constant term");
  const std::size_t n = s.order();
  PontSeries out = PontSeries::unit(s.model_ptr(), n);
  // n S_n = sum_{j=1..n} j s_j S_{n-j}
  for (std::size_t k = 1; k <= n; ++k) {
    PontElement acc(k);
    for (std::size_t j = 1; j <= k; ++j) {
      if (s[j].is_zero() || out[k - j].is_zero()) continue;
      PontElement term = pont_mul(s[j], out[k - j]);
      term *= Rational(static_cast<long>(j));
      acc += term;
    }
    acc *= Rational(1, static_cast<long>(k));
    out.set(k, std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homological exponentiation

PontSeries hom_log_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order) {
  if (k < 1) throw DomainError("hom_exp_inv needs k >= 1");
  PontSeries out(model, order);
  if (gamma.is_zero()) return out;
  for (std::size_t r = 1; r * k <= order; ++r) {
    PontElement e = d_push(r * k, adams_h(*model, static_cast<long>(r), gamma));
    e *= Rational(1, static_cast<long>(r));
    out.add(r * k, e);
  }
  return out;
}

PontSeries hom_exp_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order) {
  return pont_exp(hom_log_inv(model, gamma, k, order));
}

namespace {

EulerExponents<LPoly> genus_exponents(const PSeries& a) {
  for (const auto& c : a.coeffs()) {
    if (!(c.vars() == vars::genus())) throw MismatchError("homological exponentiation needs a series in y");
  }
  return euler_log(a);
}

}  // namespace

PontSeries hom_exponentiation(const ModelPtr& model, const PSeries& a, const HClass& gamma) {
  const auto b = genus_exponents(a);
  PontSeries log_sum(model, a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    if (b[k].is_zero()) continue;
    log_sum += hom_log_inv(model, b[k] * gamma, k, a.order());
  }
  return pont_exp(log_sum);
}

PontSeries hom_exponentiation_product(const ModelPtr& model, const PSeries& a, const HClass& gamma) {
  const auto b = genus_exponents(a);
  PontSeries out = PontSeries::unit(model, a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    out = pont_mul(out, hom_exp_inv(model, b[k] * gamma, k, a.order()));
  }
  return out;
}

namespace {

PontSeries plain_log_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order) {
  PontSeries out(model, order);
  if (gamma.is_zero()) return out;
  for (std::size_t r = 1; r * k <= order; ++r) {
    PontElement e = d_push(r * k, gamma);
    e *= Rational(1, static_cast<long>(r));
    out.add(r * k, e);
  }
  return out;
}

}  // namespace

PontSeries plain_exp_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order) {
  if (k < 1) throw DomainError("plain_exp_inv needs k >= 1");
  return pont_exp(plain_log_inv(model, gamma, k, order));
}

PontSeries plain_exponentiation(const ModelPtr& model, const RSeries& a, const HClass& gamma) {
  const auto b = euler_log(a);
  PontSeries log_sum(model, a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    if (b[k].is_zero()) continue;
    log_sum += plain_log_inv(model, b[k] * gamma, k, a.order());
  }
  return pont_exp(log_sum);
}

// ---------------------------------------------------------------------------
// Class-level generating series

PontSeries sym_prod_class_series(const ModelPtr& model, std::size_t order) {
  return hom_exp_inv(model, model->ty_class, 1, order);
}

PontSeries hilb_class_series(const ModelPtr& model, int d, std::size_t order) {
  const auto alpha = punctual_exponents(d, order);
  PontSeries log_sum(model, order);
  for (std::size_t k = 1; k <= order; ++k) {
    const LPoly scalar = spec_chi_minus_y(alpha[k]);
    if (scalar.is_zero()) continue;
    log_sum += hom_log_inv(model, scalar * model->ty_class, k, order);
  }
  return pont_exp(log_sum);
}

PontSeries mt2_series(const ModelPtr& model, const PSeries& a) {
  return hom_exponentiation(model, chi_minus_y_series(a), model->ty_class);
}

PontSeries config_class_series(const ModelPtr& model, std::size_t order) {
  const HClass minus_t = Rational(-1) * model->ty_class;
  return pont_mul(power_op(2, hom_exp_inv(model, minus_t, 1, order)), hom_exp_inv(model, model->ty_class, 1, order));
}

Rational chi_punctual_exponent(int d, std::size_t k) {
  if (d < 1) throw DomainError("punctual exponents need d >= 1");
  if (k < 1) throw DomainError("Euler exponents start at k = 1");
  if (d == 1) return Rational(k == 1 ? 1 : 0);
  if (d == 2) return Rational(1);
  if (d == 3) return Rational(static_cast<long>(k));
  if (k > 3) {
    throw UnsupportedRangeError("Euler characteristics of the punctual exponents of C^" + std::to_string(d) +
                                " are unknown beyond k = 3");
  }
  return spec_chi(punctual_exponents_small(d)[k]);
}

PontSeries chern_class_series(const ModelPtr& model, int d, std::size_t order) {
  const HClass c = chern_class_of(*model);
  PontSeries log_sum(model, order);
  for (std::size_t k = 1; k <= order; ++k) {
    const Rational chi = chi_punctual_exponent(d, k);
    if (chi.is_zero()) continue;
    log_sum += plain_log_inv(model, chi * c, k, order);
  }
  return pont_exp(log_sum);
}

VirtualClassSeries virtual_class_series(const ModelPtr& model, std::size_t order) {
  PontSeries t_form = mt2_series(model, virtual_punctual_series(order));
  PontSeries log_sum(model, order);
  for (std::size_t k = 1; k <= order; ++k) {
    const LPoly scalar = spec_chi_minus_y(virtual_alpha(static_cast<long>(k)));
    log_sum += hom_log_inv(model, scalar * model->ty_class, k, order);
  }
  return {std::move(t_form), pont_exp(log_sum)};
}

PontSeries aluffi_series(const ModelPtr& model, std::size_t order) {
  return plain_exponentiation(model, chi_series(virtual_punctual_series(order)), chern_class_of(*model));
}

PSeries pont_degree(const PontSeries& s) {
  const HomologyModel& m = s.model();
  if (!m.proper) throw DomainError("degree needs a proper model; '" + m.name + "' is not proper");
  PSeries out(s.order(), LPoly(vars::genus()));
  for (std::size_t n = 0; n <= s.order(); ++n) {
    LPoly acc(vars::genus());
    for (const auto& [mult, c] : s[n].terms()) {
      const bool point_class = std::all_of(mult.begin(), mult.end(), [&](const Atom& a) {
        return m.basis.at(static_cast<std::size_t>(a.basis)).deg == 0;
      });
      if (point_class) acc += c;
    }
    out.set(n, std::move(acc));
  }
  return out;
}

PontSeries normalized_y_to_1(const PontSeries& s) {
  const HomologyModel& m = s.model();
  const LPoly one_minus_y = LPoly(vars::genus(), Rational(1)) - LPoly::variable(vars::genus(), "y");
  const Substitution at_one = Substitution(vars::genus()).set("y", Rational(1), Rational(1));
  PontSeries out(s.model_ptr(), s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) {
    PontElement e(n);
    for (const auto& [mult, c] : s[n].terms()) {
      int deg = 0;
      for (const auto& a : mult) deg += m.basis.at(static_cast<std::size_t>(a.basis)).deg;
      LPoly p = c;
      for (int j = 0; j < deg; ++j) {
        try {
          p = exact_div(p, one_minus_y);
        } catch (const InexactDivisionError&) {
          throw DomainError("pole at y = 1 in the coefficient of " + atom_text(m, mult));
        }
      }
      e.add(mult, at_one.apply(p));
    }
    out.set(n, std::move(e));
  }
  return out;
}

PontSeries pont_neg_t(const PontSeries& s) {
  PontSeries out = s;
  for (std::size_t n = 1; n <= s.order(); n += 2) {
    PontElement e = s[n];
    e *= Rational(-1);
    out.set(n, std::move(e));
  }
  return out;
}

std::string atom_text(const HomologyModel& model, const AtomMultiset& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& a : m) {
    if (!out.empty()) out += " ";
    out += "d" + std::to_string(a.k) + "*[" + model.basis.at(static_cast<std::size_t>(a.basis)).id + "]";
  }
  return out;
}

}  // namespace mcc
