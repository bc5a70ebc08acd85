#pragma once

// Pre-lambda structures from Adams operations, Euler products and the
// power structure A(t)^m they define.

#include <cstddef>
#include <string>
#include <vector>

#include "mcc/lpoly.hpp"
#include "mcc/series.hpp"

namespace mcc {

/// Adams operations on Q are trivial.
inline Rational adams(long, const Rational& x) { return x; }

/// Moebius function.
inline int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

/// b_1..b_N with A(t) = prod_k (1 - t^k)^{-b_k}. Index 0 is unused and zero.
template <class R>
class EulerExponents {
 public:
  EulerExponents(std::size_t order, const R& zero) : b_(order + 1, zero_like(zero)) {}
  static EulerExponents from_values(std::vector<R> b1_to_n) {
    if (b1_to_n.empty()) throw DomainError("need at least one exponent");
    EulerExponents e(b1_to_n.size(), b1_to_n.front());
    for (std::size_t k = 1; k <= b1_to_n.size(); ++k) e.b_[k] = std::move(b1_to_n[k - 1]);
    return e;
  }

  [[nodiscard]] std::size_t order() const { return b_.size() - 1; }
  [[nodiscard]] const R& operator[](std::size_t k) const { return b_.at(k); }
  void set(std::size_t k, R value) {
    if (k == 0) throw DomainError("Euler exponents start at k = 1");
    b_.at(k) = std::move(value);
  }
  /// b_1..b_N.
  [[nodiscard]] std::vector<R> values() const { return {b_.begin() + 1, b_.end()}; }

  friend bool operator==(const EulerExponents&, const EulerExponents&) = default;

 private:
  std::vector<R> b_;
};

/// Sum_{r>=1} Psi_r(m) t^{rk} / r, truncated at N; the log of (1 - t^k)^{-m}.
template <class R>
TSeries<R> lambda_log(const R& m, std::size_t k, std::size_t order) {
  TSeries<R> out(order, m);
  if (k == 0) throw DomainError("lambda_log needs k >= 1");
  for (std::size_t r = 1; r * k <= order; ++r) {
    out.set(r * k, adams(static_cast<long>(r), m) * Rational(1, static_cast<long>(r)));
  }
  return out;
}

/// lambda_t(m) = (1 - t)^{-m} = exp(sum_r Psi_r(m) t^r / r).
template <class R>
TSeries<R> pre_lambda(const R& m, std::size_t order) {
  return ts_exp(lambda_log(m, 1, order));
}

/// prod_k (1 - t^k)^{-b_k}. Evaluated as a single exp of the summed logarithms.
template <class R>
TSeries<R> euler_exp(const EulerExponents<R>& b) {
  const std::size_t n = b.order();
  TSeries<R> log_sum(n, b[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    if (b[k] == b[0]) continue;
    log_sum += lambda_log(b[k], k, n);
  }
  return ts_exp(log_sum);
}

/// How euler_log checks its output.
enum class IntegralityMode {
  /// Integer Laurent output demanded whenever the input is integral.
  Auto,
  None,
  /// Always demand IntegerLaurent.
  Strict,
};

/// The unique b with euler_exp(b) = A through t^N.
///
/// With c_n = [t^n] log A, b_k = (1/k) sum_{d | k} mu(k/d) Psi_{k/d}(d c_d).
template <class R>
EulerExponents<R> euler_log(const TSeries<R>& a, IntegralityMode mode = IntegralityMode::Auto) {
  if (!a.is_normalized()) throw DomainError("Euler decomposition needs constant term 1");
  const std::size_t n = a.order();
  const TSeries<R> c = ts_log(a);
  EulerExponents<R> b(n, a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a.zero();
    for (std::size_t d = 1; d <= k; ++d) {
      if (k % d) continue;
      const int mu = moebius(k / d);
      if (mu == 0 || c[d] == a.zero()) continue;
      acc += adams(static_cast<long>(k / d), c[d] * Rational(static_cast<long>(d) * mu));
    }
    b.set(k, acc * Rational(1, static_cast<long>(k)));
  }

  bool check = mode == IntegralityMode::Strict;
  if (mode == IntegralityMode::Auto) {
    check = true;
    for (const auto& x : a.coeffs()) check = check && in_subring(x, Subring::IntegerLaurent);
  }
  if (check) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (!in_subring(b[k], Subring::IntegerLaurent)) {
        throw IntegralityError("Euler exponent b_" + std::to_string(k) + " = " + ring_text(b[k]) +
                               " is not an integral class");
      }
    }
  }
  return b;
}

template <class R>
EulerExponents<R> scale_exponents(const EulerExponents<R>& b, const R& m) {
  EulerExponents<R> out(b.order(), b[0]);
  for (std::size_t k = 1; k <= b.order(); ++k) out.set(k, m * b[k]);
  return out;
}

/// A(t)^m = prod_k (1 - t^k)^{-m b_k} with b = euler_log(A).
template <class R>
TSeries<R> power(const TSeries<R>& a, const R& m, IntegralityMode mode = IntegralityMode::Auto) {
  return euler_exp(scale_exponents(euler_log(a, mode), m));
}

/// lambda_t(sum a_k x^k) = prod (1 - x^k t)^{-a_k}, expanded term by term with
/// binomial series. Matches pre_lambda for variables with the plain root rule.
inline PSeries pre_lambda_polyring(const LPoly& p, std::size_t order) {
  if (!p.has_integer_coefficients()) throw DomainError("pre_lambda_polyring needs integer coefficients");
  PSeries out = PSeries::one(order, p);
  for (const auto& [e, a] : p.terms()) {
    const LPoly x = LPoly::monomial(p.vars(), e);
    PSeries factor(order, p);
    LPoly xn = one_like(p);
    for (std::size_t n = 0; n <= order; ++n) {
      // (1 - x t)^{-a} = sum_n C(a + n - 1, n) x^n t^n
      factor.set(n, xn * binomial(a + Rational(static_cast<long>(n)) - Rational(1), static_cast<long>(n)));
      xn = xn * x;
    }
    out = out * factor;
  }
  return out;
}

}  // namespace mcc
