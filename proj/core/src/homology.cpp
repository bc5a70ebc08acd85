#include "mcc/homology.hpp"

#include <set>

#include "mcc/errors.hpp"

namespace mcc {

HClass::HClass(std::vector<LPoly> coeffs) : c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.vars() == vars::genus())) throw MismatchError("homology coefficients live in the genus ring");
  }
}

void HClass::set(std::size_t i, LPoly value) {
  if (!(value.vars() == vars::genus())) throw MismatchError("homology coefficients live in the genus ring");
  c_.at(i) = std::move(value);
}

bool HClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const LPoly& c) { return c.is_zero(); });
}

HClass& HClass::operator+=(const HClass& o) {
  if (o.size() != size()) throw MismatchError("homology classes over different bases");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HClass& HClass::operator-=(const HClass& o) {
  if (o.size() != size()) throw MismatchError("homology classes over different bases");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HClass operator*(const LPoly& s, const HClass& a) {
  HClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.c_[i] = s * a.c_[i];
  return out;
}

HClass operator*(const Rational& s, const HClass& a) {
  HClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.c_[i] = s * a.c_[i];
  return out;
}

std::optional<std::size_t> HomologyModel::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].id == id) return i;
  }
  return std::nullopt;
}

void HomologyModel::validate() const {
  if (dim < 0) throw DomainError("model dimension must be nonnegative");
  if (basis.empty()) throw DomainError("model basis is empty");
  std::set<std::string> seen;
  for (const auto& b : basis) {
    if (b.id.empty()) throw DomainError("empty basis id");
    if (!seen.insert(b.id).second) throw DomainError("duplicate basis id '" + b.id + "'");
    if (b.deg < 0 || b.deg > dim) {
      throw DomainError("basis element '" + b.id + "' has degree outside 0.." + std::to_string(dim));
    }
  }
  if (zero_degree_index) {
    if (*zero_degree_index >= basis.size()) throw DomainError("zero-degree basis index out of range");
    if (basis[*zero_degree_index].deg != 0) throw DomainError("zero-degree basis element has positive degree");
  }
  if (proper && !zero_degree_index) throw DomainError("a proper model needs a zero-degree basis element");
  if (ty_class.size() != basis.size()) throw DomainError("T class does not match the basis");
  if (chern_class && chern_class->size() != basis.size()) {
    throw DomainError("Chern class does not match the basis");
  }
  if (!(e_poly.vars() == vars::hodge())) throw DomainError("e-polynomial must be in u, v");
}

LPoly degree(const HomologyModel& model, const HClass& c) {
  if (!model.proper || !model.zero_degree_index) {
    throw DomainError("degree needs a proper model; '" + model.name + "' is not proper");
  }
  if (c.size() != model.size()) throw MismatchError("class does not belong to model '" + model.name + "'");
  LPoly out(vars::genus());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (model.basis[i].deg == 0) out += c[i];
  }
  return out;
}

HClass adams_h(const HomologyModel& model, long r, const HClass& c) {
  if (r < 1) throw DomainError("Adams operation index must be positive");
  if (c.size() != model.size()) throw MismatchError("class does not belong to model '" + model.name + "'");
  HClass out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.set(i, adams(r, c[i]) * (Rational(1) / Rational(r).pow(model.basis[i].deg)));
  }
  return out;
}

HClass normalized_y_to_1(const HomologyModel& model, const HClass& c) {
  if (c.size() != model.size()) throw MismatchError("class does not belong to model '" + model.name + "'");
  const LPoly one_minus_y = LPoly(vars::genus(), Rational(1)) - LPoly::variable(vars::genus(), "y");
  const Substitution at_one = Substitution(vars::genus()).set("y", Rational(1), Rational(1));
  HClass out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    LPoly p = c[i];
    for (int j = 0; j < model.basis[i].deg && !p.is_zero(); ++j) {
      try {
        p = exact_div(p, one_minus_y);
      } catch (const InexactDivisionError&) {
        throw DomainError("pole at y = 1 in the coefficient of '" + model.basis[i].id + "'");
      }
    }
    out.set(i, at_one.apply(p));
  }
  return out;
}

}  // namespace mcc
