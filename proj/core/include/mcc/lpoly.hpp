#pragma once

// Sparse multivariate Laurent polynomials with half-integer exponents over Q.
//
// Exponents are stored doubled, so L^{3/2} is the exponent 3 and L^{-1} is -2.
// Only variables declared half-admissible may carry odd stored exponents.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcc/rational.hpp"

namespace mcc {

/// How Adams operations act on the square root of a half-admissible variable.
enum class RootConvention {
  /// Psi_r(x^{1/2}) = x^{r/2}.
  Plain,
  /// -x^{1/2} is the rank-one element: Psi_r(x^{1/2}) = (-1)^{r-1} x^{r/2}.
  NegativeRoot,
};

struct Variable {
  std::string name;
  bool half_admissible = false;
  RootConvention root = RootConvention::Plain;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered, immutable set of distinct variables. Cheap to copy.
class VarSet {
 public:
  static constexpr std::size_t kMaxVars = 6;

  VarSet();
  explicit VarSet(std::vector<Variable> variables);

  [[nodiscard]] std::size_t size() const { return vars_->size(); }
  [[nodiscard]] bool empty() const { return vars_->empty(); }
  [[nodiscard]] const Variable& operator[](std::size_t i) const { return (*vars_)[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<Variable>> vars_;
};

/// Canonical variable sets used throughout the library.
namespace vars {
/// No variables: the rationals.
const VarSet& scalar();
/// {L}, L = [C], half-admissible with -L^{1/2} as the rank-one root.
const VarSet& motive();
/// {u, v}, the Hodge-Deligne variables.
const VarSet& hodge();
/// {y}, half-admissible with the plain root convention.
const VarSet& genus();
}  // namespace vars

/// Doubled exponent vector with inline storage.
class Exponents {
 public:
  Exponents() = default;
  explicit Exponents(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {}
  Exponents(std::initializer_list<int> doubled);

  [[nodiscard]] std::size_t size() const { return n_; }
  int& operator[](std::size_t i) { return e_[i]; }
  int operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] const int* begin() const { return e_.data(); }
  [[nodiscard]] const int* end() const { return e_.data() + n_; }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
  }

  Exponents& operator+=(const Exponents& o) {
    for (std::size_t i = 0; i < n_; ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) {
    for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<int, VarSet::kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

class LPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit LPoly(VarSet vars = vars::scalar());
  LPoly(VarSet vars, const Rational& constant);

  /// c * prod x_i^{doubled_i / 2}.
  static LPoly monomial(VarSet vars, const Exponents& doubled, const Rational& c = Rational(1));
  /// c * name^{power}; power may be a half-integer for half-admissible variables.
  static LPoly variable(VarSet vars, std::string_view name, const Rational& power = Rational(1),
                        const Rational& c = Rational(1));
  /// Builds from (exponent-vector, coefficient) pairs, exponents in ordinary (undoubled) units.
  static LPoly from_terms(VarSet vars,
                          std::initializer_list<std::pair<std::vector<Rational>, Rational>> terms);

  [[nodiscard]] const VarSet& vars() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] bool has_integer_coefficients() const;
  /// No negative and no half-integer exponents.
  [[nodiscard]] bool is_polynomial() const;
  [[nodiscard]] Rational constant_term() const;
  /// The value of a constant polynomial; throws DomainError otherwise.
  [[nodiscard]] Rational to_rational() const;
  /// Coefficient of the monomial with the given doubled exponents.
  [[nodiscard]] Rational coefficient(const Exponents& doubled) const;
  /// Multiplicative inverse of a nonzero monomial.
  [[nodiscard]] std::optional<LPoly> unit_inverse() const;

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  LPoly& operator*=(const Rational& c);

  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly poly_mul(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const Rational& c) { return a *= c; }
  friend LPoly operator*(const Rational& c, LPoly a) { return a *= c; }
  friend LPoly operator-(LPoly a) { return a *= Rational(-1); }

  friend bool operator==(const LPoly& a, const LPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "1+uv+u^2v^2", "-L^(-3/2)", "1/2*y-y^2".
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_exponents(const Exponents& e) const;

  VarSet vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LPoly& p);

/// Distributive product; throws MismatchError on differing variable sets.
LPoly poly_mul(const LPoly& a, const LPoly& b);

/// Returns q with q * b == a; throws InexactDivisionError when b does not divide a.
LPoly exact_div(const LPoly& a, const LPoly& b);

/// Adams operation Psi_r: every exponent scaled by r, with the sign rule of the
/// variable's RootConvention on odd (half-integer) exponents.
LPoly adams(long r, const LPoly& p);

LPoly pow(const LPoly& p, unsigned long n);

/// Variable-by-variable ring map into a target variable set.
///
/// Unassigned variables are carried over by name. Half-integer powers of an
/// assigned variable need an explicitly declared square root; negative powers
/// need a value (and root) that is a unit of the target Laurent ring.
class Substitution {
 public:
  explicit Substitution(VarSet target) : target_(std::move(target)) {}

  Substitution& set(std::string_view name, LPoly value);
  Substitution& set(std::string_view name, LPoly value, LPoly root);
  Substitution& set(std::string_view name, const Rational& value);
  Substitution& set(std::string_view name, const Rational& value, const Rational& root);

  [[nodiscard]] const VarSet& target() const { return target_; }
  [[nodiscard]] LPoly apply(const LPoly& p) const;

 private:
  struct Assignment {
    LPoly value;
    std::optional<LPoly> root;
  };

  VarSet target_;
  std::map<std::string, Assignment, std::less<>> assignments_;
};

LPoly substitute(const LPoly& p, const Substitution& s);

}  // namespace mcc
