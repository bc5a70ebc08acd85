#include "mcc/lpoly.hpp"

#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "mcc/errors.hpp"

namespace mcc {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet() : vars_(std::make_shared<const std::vector<Variable>>()) {}

VarSet::VarSet(std::vector<Variable> variables) {
  if (variables.size() > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.name.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v.name).second) throw DomainError("duplicate variable '" + v.name + "'");
  }
  vars_ = std::make_shared<const std::vector<Variable>>(std::move(variables));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i].name == name) return i;
  }
  return std::nullopt;
}

std::string VarSet::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += (*vars_)[i].name;
  }
  return out + "}";
}

namespace vars {

const VarSet& scalar() {
  static const VarSet v;
  return v;
}

const VarSet& motive() {
  static const VarSet v({Variable{"L", true, RootConvention::NegativeRoot}});
  return v;
}

const VarSet& hodge() {
  static const VarSet v({Variable{"u"}, Variable{"v"}});
  return v;
}

const VarSet& genus() {
  static const VarSet v({Variable{"y", true, RootConvention::Plain}});
  return v;
}

}  // namespace vars

// ---------------------------------------------------------------------------
// Exponents

Exponents::Exponents(std::initializer_list<int> doubled) : n_(static_cast<std::uint8_t>(doubled.size())) {
  if (doubled.size() > VarSet::kMaxVars) throw DomainError("too many exponents");
  std::copy(doubled.begin(), doubled.end(), e_.begin());
}

// ---------------------------------------------------------------------------
// LPoly

namespace {

void require_same_vars(const LPoly& a, const LPoly& b, const char* op) {
  if (!(a.vars() == b.vars())) {
    throw MismatchError(std::string(op) + ": variable sets differ (" + a.vars().describe() + " vs " +
                        b.vars().describe() + ")");
  }
}

int doubled_from_rational(const Rational& r) {
  const Rational twice = r * Rational(2);
  if (!twice.is_integer()) throw DomainError("exponent " + r.to_string() + " is not a half-integer");
  return static_cast<int>(twice.numerator().get_si());
}

}  // namespace

LPoly::LPoly(VarSet vars) : vars_(std::move(vars)) {}

LPoly::LPoly(VarSet vars, const Rational& constant) : vars_(std::move(vars)) {
  if (!constant.is_zero()) terms_.emplace(Exponents(vars_.size()), constant);
}

LPoly LPoly::monomial(VarSet vars, const Exponents& doubled, const Rational& c) {
  LPoly p(std::move(vars));
  if (doubled.size() != p.vars_.size()) throw DomainError("exponent vector length mismatch");
  p.check_exponents(doubled);
  if (!c.is_zero()) p.terms_.emplace(doubled, c);
  return p;
}

LPoly LPoly::variable(VarSet vars, std::string_view name, const Rational& power, const Rational& c) {
  const auto idx = vars.index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "' in " + vars.describe());
  Exponents e(vars.size());
  e[*idx] = doubled_from_rational(power);
  return monomial(std::move(vars), e, c);
}

LPoly LPoly::from_terms(VarSet vars,
                        std::initializer_list<std::pair<std::vector<Rational>, Rational>> terms) {
  LPoly p(std::move(vars));
  for (const auto& [exps, c] : terms) {
    if (exps.size() != p.vars_.size()) throw DomainError("exponent vector length mismatch");
    Exponents e(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] = doubled_from_rational(exps[i]);
    p.check_exponents(e);
    p.add_term(e, c);
  }
  return p;
}

void LPoly::check_exponents(const Exponents& e) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] % 2 != 0 && !vars_[i].half_admissible) {
      throw DomainError("variable '" + vars_[i].name + "' does not admit half-integer exponents");
    }
  }
}

void LPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second.is_one();
}

bool LPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool LPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

bool LPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0 || x % 2 != 0) return false;
    }
  }
  return true;
}

Rational LPoly::constant_term() const { return coefficient(Exponents(vars_.size())); }

Rational LPoly::to_rational() const {
  if (!is_constant()) throw DomainError("polynomial '" + to_string() + "' is not a constant");
  return constant_term();
}

Rational LPoly::coefficient(const Exponents& doubled) const {
  auto it = terms_.find(doubled);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<LPoly> LPoly::unit_inverse() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  Exponents neg(e.size());
  neg = neg - e;
  return monomial(vars_, neg, Rational(1) / c);
}

LPoly& LPoly::operator+=(const LPoly& o) {
  require_same_vars(*this, o, "addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  require_same_vars(*this, o, "subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LPoly& LPoly::operator*=(const LPoly& o) { return *this = poly_mul(*this, o); }

LPoly& LPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) { return poly_mul(a, b); }

LPoly poly_mul(const LPoly& a, const LPoly& b) {
  require_same_vars(a, b, "multiplication");
  LPoly out(a.vars());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LPoly pow(const LPoly& p, unsigned long n) {
  LPoly result(p.vars(), Rational(1));
  LPoly base = p;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

Exponents min_exponents(const LPoly& p) {
  Exponents m(p.vars().size());
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

LPoly shift(const LPoly& p, const Exponents& by) {
  LPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) out += LPoly::monomial(p.vars(), e + by, c);
  return out;
}

}  // namespace

LPoly exact_div(const LPoly& a, const LPoly& b) {
  require_same_vars(a, b, "exact division");
  if (b.is_zero()) throw DomainError("exact division by zero");
  if (a.is_zero()) return LPoly(a.vars());

  // Shift both operands into the polynomial ring, where lex-order division terminates.
  const Exponents zero(a.vars().size());
  const Exponents ma = min_exponents(a);
  const Exponents mb = min_exponents(b);
  LPoly rem = shift(a, zero - ma);
  const LPoly divisor = shift(b, zero - mb);
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();

  LPoly quotient(a.vars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    const Exponents qe = re - lead_e;
    if (std::any_of(qe.begin(), qe.end(), [](int x) { return x < 0; })) {
      throw InexactDivisionError("'" + b.to_string() + "' does not divide '" + a.to_string() + "'");
    }
    const LPoly step = LPoly::monomial(a.vars(), qe, rc / lead_c);
    quotient += step;
    rem -= step * divisor;
  }
  return shift(quotient, ma - mb);
}

LPoly adams(long r, const LPoly& p) {
  if (r < 1) throw DomainError("Adams operation index must be positive");
  if (r == 1) return p;
  LPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents scaled(e.size());
    bool negate = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      scaled[i] = static_cast<int>(r * e[i]);
      if (e[i] % 2 != 0 && p.vars()[i].root == RootConvention::NegativeRoot && r % 2 == 0) {
        negate = !negate;
      }
    }
    out += LPoly::monomial(p.vars(), scaled, negate ? -c : c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

std::string monomial_text(const VarSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += vars[i].name;
    if (e[i] != 2) out += "^" + exponent_text(e[i]);
  }
  return out;
}

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

}  // namespace

std::string LPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const long dx = total_degree(x->first);
    const long dy = total_degree(y->first);
    if (dx != dy) return dx < dy;
    return x->first > y->first;
  });

  std::string out;
  for (const auto* t : order) {
    const std::string mono = monomial_text(vars_, t->first);
    const Rational& c = t->second;
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c == Rational(1)) {
      term = mono;
    } else if (c == Rational(-1)) {
      term = "-" + mono;
    } else if (c.is_integer()) {
      term = c.to_string() + mono;
    } else {
      term = c.to_string() + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Substitution

Substitution& Substitution::set(std::string_view name, LPoly value) {
  if (!(value.vars() == target_)) throw MismatchError("substitution value lives over the wrong variables");
  assignments_.insert_or_assign(std::string(name), Assignment{std::move(value), std::nullopt});
  return *this;
}

Substitution& Substitution::set(std::string_view name, LPoly value, LPoly root) {
  if (!(value.vars() == target_) || !(root.vars() == target_)) {
    throw MismatchError("substitution value lives over the wrong variables");
  }
  if (!(root * root == value)) {
    throw DomainError("declared root of '" + std::string(name) + "' does not square to its value");
  }
  assignments_.insert_or_assign(std::string(name), Assignment{std::move(value), std::move(root)});
  return *this;
}

Substitution& Substitution::set(std::string_view name, const Rational& value) {
  return set(name, LPoly(target_, value));
}

Substitution& Substitution::set(std::string_view name, const Rational& value, const Rational& root) {
  return set(name, LPoly(target_, value), LPoly(target_, root));
}

LPoly Substitution::apply(const LPoly& p) const {
  const VarSet& src = p.vars();

  // Per-variable image of x^{1/2}-steps: either a carried-over target index or an assignment.
  struct Slot {
    const Assignment* assignment = nullptr;
    std::size_t target_index = 0;
  };
  std::vector<Slot> slots(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto it = assignments_.find(src[i].name);
    if (it != assignments_.end()) {
      slots[i].assignment = &it->second;
      continue;
    }
    const auto idx = target_.index_of(src[i].name);
    if (!idx) {
      throw DomainError("variable '" + src[i].name + "' is neither assigned nor present in " +
                        target_.describe());
    }
    if (src[i].half_admissible && !target_[*idx].half_admissible) {
      throw DomainError("variable '" + src[i].name + "' loses half-integer admissibility");
    }
    slots[i].target_index = *idx;
  }

  auto power_of = [&](const Assignment& a, const std::string& name, int doubled) -> LPoly {
    const bool half = doubled % 2 != 0;
    const LPoly* base = &a.value;
    long n = doubled / 2;
    if (half) {
      if (!a.root) {
        throw DomainError("half-integer power of '" + name + "' needs a declared square root");
      }
      base = &*a.root;
      n = doubled;
    }
    if (n >= 0) return pow(*base, static_cast<unsigned long>(n));
    if (base->is_zero()) throw DomainError("negative power of '" + name + "' substituted at 0");
    const auto inv = base->unit_inverse();
    if (!inv) throw DomainError("negative power of '" + name + "' needs a unit value");
    return pow(*inv, static_cast<unsigned long>(-n));
  };

  LPoly out(target_);
  for (const auto& [e, c] : p.terms()) {
    Exponents carried(target_.size());
    LPoly term = LPoly(target_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slots[i].assignment) {
        term = term * power_of(*slots[i].assignment, src[i].name, e[i]);
      } else {
        carried[slots[i].target_index] += e[i];
      }
    }
    out += term * LPoly::monomial(target_, carried);
  }
  return out;
}

LPoly substitute(const LPoly& p, const Substitution& s) { return s.apply(p); }

}  // namespace mcc
