#pragma once

// Truncated power series in t over a coefficient ring (Rational or LPoly).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcc/errors.hpp"
#include "mcc/lpoly.hpp"
#include "mcc/rational.hpp"

namespace mcc {

// Coefficient-ring glue. Every ring element knows how to build its own zero and one.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline LPoly zero_like(const LPoly& p) { return LPoly(p.vars()); }
inline LPoly one_like(const LPoly& p) { return LPoly(p.vars(), Rational(1)); }

inline std::optional<Rational> ring_inverse(const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  return Rational(1) / x;
}
inline std::optional<LPoly> ring_inverse(const LPoly& p) { return p.unit_inverse(); }

inline std::string ring_text(const Rational& x) { return x.to_string(); }
inline std::string ring_text(const LPoly& p) { return p.to_string(); }

/// Subrings a coefficient may be asserted to lie in.
enum class Subring {
  Rationals,
  /// Integer coefficients, any half-integer exponents.
  IntegerLaurent,
  /// Integer coefficients, nonnegative integral exponents.
  IntegerPolynomial,
};

inline bool in_subring(const Rational& x, Subring s) { return s == Subring::Rationals || x.is_integer(); }

inline bool in_subring(const LPoly& p, Subring s) {
  switch (s) {
    case Subring::Rationals:
      return true;
    case Subring::IntegerLaurent:
      return p.has_integer_coefficients();
    case Subring::IntegerPolynomial:
      return p.has_integer_coefficients() && p.is_polynomial();
  }
  return false;
}

inline const char* subring_name(Subring s) {
  switch (s) {
    case Subring::Rationals:
      return "rationals";
    case Subring::IntegerLaurent:
      return "integer Laurent polynomials";
    case Subring::IntegerPolynomial:
      return "integer polynomials";
  }
  return "?";
}

template <class R>
class TSeries {
 public:
  using Coeff = R;

  /// The zero series through t^order; `zero` fixes the coefficient ring.
  TSeries(std::size_t order, const R& zero) : c_(order + 1, zero_like(zero)) {}

  /// Series with the given coefficients; order = coeffs.size() - 1.
  static TSeries from_coeffs(std::vector<R> coeffs) {
    if (coeffs.empty()) throw DomainError("a series needs at least the constant coefficient");
    TSeries s(coeffs.size() - 1, coeffs.front());
    s.c_ = std::move(coeffs);
    return s;
  }

  static TSeries one(std::size_t order, const R& sample) {
    TSeries s(order, sample);
    s.c_[0] = one_like(sample);
    return s;
  }

  [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
  [[nodiscard]] const R& operator[](std::size_t n) const { return c_.at(n); }
  [[nodiscard]] const std::vector<R>& coeffs() const { return c_; }
  [[nodiscard]] R zero() const { return zero_like(c_[0]); }

  void set(std::size_t n, R value) { c_.at(n) = std::move(value); }

  /// Re-truncation to a smaller or equal order.
  [[nodiscard]] TSeries truncated(std::size_t order) const {
    if (order > this->order()) throw MismatchError("cannot extend a truncated series");
    return from_coeffs(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  [[nodiscard]] bool is_normalized() const {
    return c_[0] == one_like(c_[0]);
  }

  TSeries& operator+=(const TSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TSeries& operator*=(const Rational& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const Rational& k) { return a *= k; }
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }

  void require_same_order(const TSeries& o) const {
    if (o.order() != order()) {
      throw MismatchError("series orders differ (" + std::to_string(order()) + " vs " +
                          std::to_string(o.order()) + ")");
    }
  }

  /// "[c0, c1, ...]" with each coefficient in canonical text form.
  [[nodiscard]] std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += ring_text(c_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<R> c_;
};

using RSeries = TSeries<Rational>;
using PSeries = TSeries<LPoly>;

template <class R>
TSeries<R> ts_mul(const TSeries<R>& a, const TSeries<R>& b) {
  a.require_same_order(b);
  const std::size_t n = a.order();
  TSeries<R> out(n, a[0]);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == a.zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == b.zero()) continue;
      R acc = out[i + j];
      acc += a[i] * b[j];
      out.set(i + j, std::move(acc));
    }
  }
  return out;
}

template <class R>
TSeries<R> operator*(const TSeries<R>& a, const TSeries<R>& b) {
  return ts_mul(a, b);
}

/// Multiplies every coefficient by a ring element.
template <class R>
TSeries<R> ts_scale(const TSeries<R>& a, const R& m) {
  TSeries<R> out(a.order(), a[0]);
  for (std::size_t i = 0; i <= a.order(); ++i) out.set(i, a[i] * m);
  return out;
}

template <class R>
TSeries<R> ts_invert(const TSeries<R>& a) {
  const auto inv0 = ring_inverse(a[0]);
  if (!inv0) throw DomainError("series constant term " + ring_text(a[0]) + " is not a unit");
  const std::size_t n = a.order();
  TSeries<R> out(n, a[0]);
  out.set(0, *inv0);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a.zero();
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out.set(k, -(acc * *inv0));
  }
  return out;
}

template <class R>
TSeries<R> ts_exp(const TSeries<R>& a) {
  if (!(a[0] == a.zero())) throw DomainError("exp needs a series without constant term");
  const std::size_t n = a.order();
  TSeries<R> out = TSeries<R>::one(n, a[0]);
  // n S_n = sum_{j=1..n} j a_j S_{n-j}
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a.zero();
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] == a.zero()) continue;
      acc += (a[j] * out[k - j]) * Rational(static_cast<long>(j));
    }
    out.set(k, acc * Rational(1, static_cast<long>(k)));
  }
  return out;
}

template <class R>
TSeries<R> ts_log(const TSeries<R>& a) {
  if (!a.is_normalized()) throw DomainError("log needs constant term 1");
  const std::size_t n = a.order();
  TSeries<R> out(n, a[0]);
  // n L_n = n a_n - sum_{j=1..n-1} j L_j a_{n-j}
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a[k] * Rational(static_cast<long>(k));
    for (std::size_t j = 1; j < k; ++j) {
      if (out[j] == a.zero()) continue;
      acc -= (out[j] * a[k - j]) * Rational(static_cast<long>(j));
    }
    out.set(k, acc * Rational(1, static_cast<long>(k)));
  }
  return out;
}

/// t -> sign * t^k, truncated at the original order.
template <class R>
TSeries<R> ts_subst(const TSeries<R>& a, int sign, std::size_t k) {
  if (sign != 1 && sign != -1) throw DomainError("substitution sign must be +1 or -1");
  if (k == 0) throw DomainError("substitution power must be positive");
  TSeries<R> out(a.order(), a[0]);
  for (std::size_t i = 0; i * k <= a.order(); ++i) {
    R c = a[i];
    if (sign < 0 && i % 2 == 1) c = -c;
    out.set(i * k, std::move(c));
  }
  return out;
}

/// Throws IntegralityError naming the first coefficient outside the subring.
template <class R>
void assert_in_subring(const std::vector<R>& values, Subring s, const std::string& what,
                       std::size_t first_index = 0) {
  for (std::size_t i = first_index; i < values.size(); ++i) {
    if (!in_subring(values[i], s)) {
      throw IntegralityError(what + ": entry " + std::to_string(i) + " = " + ring_text(values[i]) +
                             " is not in the " + subring_name(s));
    }
  }
}

template <class R>
void assert_in_subring(const TSeries<R>& a, Subring s, const std::string& what) {
  assert_in_subring(a.coeffs(), s, what);
}

}  // namespace mcc
