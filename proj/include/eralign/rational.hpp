#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eralign {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value lies outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-0.125", "1e-3", "2.5E+2" or "p/q" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Canonical num/den; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, std::int64_t exponent);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
Rational binomial_q(unsigned n, unsigned k);

/// Nearest double when numerator and denominator fit in 53 bits (one correctly
/// rounded division); mpq_get_d, which truncates, otherwise.
inline double to_double(const Rational& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
    return num.get_d() / den.get_d();
  }
  return q.get_d();
}
inline double to_double(double x) { return x; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace eralign
