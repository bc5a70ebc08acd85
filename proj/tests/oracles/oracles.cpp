#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

UPoly constant(const Rational& c) { return monomial(0, c); }

UPoly monomial(int e, const Rational& c) {
  UPoly p;
  if (!c.is_zero()) p[e] = c;
  return p;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out = a;
  for (const auto& [e, c] : b) {
    out[e] += c;
    if (out[e].is_zero()) out.erase(e);
  }
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out = add(out, monomial(ea + eb, ca * cb));
  }
  return out;
}

USeries one(std::size_t order) {
  USeries s(order + 1);
  s[0] = constant(Rational(1));
  return s;
}

USeries mul(const USeries& a, const USeries& b) {
  USeries out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  return out;
}

USeries invert(const USeries& a) {
  if (a[0] != constant(Rational(1))) throw std::domain_error("invert needs constant term 1");
  USeries out(a.size());
  out[0] = constant(Rational(1));
  for (std::size_t n = 1; n < a.size(); ++n) {
    UPoly acc;
    for (std::size_t j = 1; j <= n; ++j) acc = add(acc, mul(a[j], out[n - j]));
    out[n] = mul(acc, constant(Rational(-1)));
  }
  return out;
}

Rational pascal(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  std::vector<Rational> row{Rational(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Rational> next(static_cast<std::size_t>(i) + 1, Rational(1));
    for (long j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

// C(a + n - 1, n) for any integer a, as a falling product.
Rational multiset_count(long a, long n) {
  Rational r(1);
  for (long i = 0; i < n; ++i) r = r * Rational(a + i) / Rational(i + 1);
  return r;
}

}  // namespace

USeries binomial_factor(int e, long a, std::size_t k, std::size_t order) {
  USeries s(order + 1);
  for (std::size_t n = 0; n * k <= order; ++n) {
    s[n * k] = monomial(e * static_cast<int>(n), multiset_count(a, static_cast<long>(n)));
  }
  return s;
}

USeries euler_product(const std::vector<UPoly>& b, std::size_t order) {
  USeries out = one(order);
  for (std::size_t k = 1; k <= b.size() && k <= order; ++k) {
    for (const auto& [j, c] : b[k - 1]) {
      if (!c.is_integer()) throw std::domain_error("euler_product needs integer exponents");
      out = mul(out, binomial_factor(j, c.numerator().get_si(), k, order));
    }
  }
  return out;
}

std::vector<UPoly> euler_decompose(const USeries& a) {
  const std::size_t order = a.size() - 1;
  std::vector<UPoly> b;
  USeries rest = a;
  for (std::size_t k = 1; k <= order; ++k) {
    b.push_back(rest[k]);
    std::vector<UPoly> only_k(k);
    only_k[k - 1] = rest[k];
    rest = mul(rest, invert(euler_product(only_k, order)));
  }
  return b;
}

USeries partition_series(std::size_t order) {
  USeries s(order + 1);
  // parts listed in nonincreasing order
  std::function<void(std::size_t, std::size_t, std::size_t, int)> walk = [&](std::size_t n, std::size_t left,
                                                                               std::size_t max_part, int parts) {
    if (left == 0) {
      s[n] = add(s[n], monomial(static_cast<int>(n) - parts));
      return;
    }
    for (std::size_t p = std::min(left, max_part); p >= 1; --p) walk(n, left - p, p, parts + 1);
  };
  for (std::size_t n = 0; n <= order; ++n) walk(n, n, n, 0);
  return s;
}

std::vector<Rational> bernoulli(std::size_t n) {
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j) acc += pascal(static_cast<long>(m) + 1, static_cast<long>(j)) * b[j];
    b[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  return b;
}

namespace {

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

}  // namespace

std::vector<Rational> todd(std::size_t order) {
  const auto b = bernoulli(order);
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = (n == 1 ? -b[n] : b[n]) / factorial(n);
  return out;
}

std::vector<Rational> alpha_coth_alpha(std::size_t order) {
  // a cosh a = sum a^{2n+1}/(2n)!, sinh a = sum a^{2n+1}/(2n+1)!; divide both by a.
  std::vector<Rational> num(order + 1, Rational(0)), den(order + 1, Rational(0)), q(order + 1, Rational(0));
  for (std::size_t n = 0; n <= order; n += 2) {
    num[n] = Rational(1) / factorial(n);
    den[n] = Rational(1) / factorial(n + 1);
  }
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = num[n];
    for (std::size_t j = 1; j <= n; ++j) acc -= den[j] * q[n - j];
    q[n] = acc / den[0];
  }
  return q;
}

std::vector<Rational> alpha_coth_half_alpha(std::size_t order) {
  // a coth(a/2) = 2 * (a/2) coth(a/2)
  auto c = alpha_coth_alpha(order);
  Rational scale(2);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = c[n] * scale;
    scale = scale / Rational(2);
  }
  return c;
}

std::vector<Rational> one_plus_h_power(int d) {
  std::vector<Rational> p{Rational(1)};
  for (int i = 0; i <= d; ++i) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] += p[j];
      next[j + 1] += p[j];
    }
    p = std::move(next);
  }
  p.resize(static_cast<std::size_t>(d) + 1);
  return p;
}

std::vector<Rational> macmahon(std::size_t order) {
  std::vector<Rational> a(order + 1, Rational(0));
  a[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      long sigma2 = 0;
      for (std::size_t dv = 1; dv <= k; ++dv) {
        if (k % dv == 0) sigma2 += static_cast<long>(dv * dv);
      }
      acc += Rational(sigma2) * a[n - k];
    }
    a[n] = acc / Rational(static_cast<long>(n));
  }
  return a;
}

USeries surface_hilbert_genus(const UPoly& a, std::size_t order) {
  std::vector<UPoly> b;
  for (std::size_t k = 1; k <= order; ++k) b.push_back(mul(a, monomial(static_cast<int>(k) - 1)));
  return euler_product(b, order);
}

USeries symmetric_product_genus(const UPoly& a, std::size_t order) { return euler_product({a}, order); }

USeries configuration_genus(const UPoly& a, std::size_t order) {
  return euler_product({a, mul(a, constant(Rational(-1)))}, order);
}

UPoly from_lpoly(const mcc::LPoly& p) {
  if (p.vars().size() > 1) throw std::domain_error("single-variable polynomials only");
  UPoly out;
  for (const auto& [e, c] : p.terms()) {
    const int doubled = p.vars().size() == 0 ? 0 : e[0];
    if (doubled % 2 != 0) throw std::domain_error("integer exponents only");
    out = add(out, monomial(doubled / 2, c));
  }
  return out;
}

mcc::LPoly to_lpoly(const UPoly& p, const mcc::VarSet& vars) {
  mcc::LPoly out(vars);
  for (const auto& [e, c] : p) out += mcc::LPoly::monomial(vars, mcc::Exponents{2 * e}, c);
  return out;
}

}  // namespace oracle
