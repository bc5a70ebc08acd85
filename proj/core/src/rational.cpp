#include "mcc/rational.hpp"

#include <ostream>

#include "mcc/errors.hpp"

namespace mcc {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division of a rational by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return Rational(1) / pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(const Rational& n, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= n - Rational(i);
    result /= Rational(i + 1);
  }
  return result;
}

}  // namespace mcc
