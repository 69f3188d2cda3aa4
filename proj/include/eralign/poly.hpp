#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "eralign/rational.hpp"

namespace eralign {

/// Exact polynomial in one variable z with integer (possibly negative)
/// exponents. Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT: scalars promote implicitly
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(std::int64_t exponent, const Rational& coeff = 1);
  /// The variable z itself.
  static LaurentPoly z() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::int64_t exponent) const;
  void add_term(std::int64_t exponent, const Rational& coeff);

  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Value at z; z must be nonzero when negative exponents are present.
  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;
  /// Sum of all coefficients (the value at z = 1).
  Rational total() const;
  /// Sum of coefficients of z^i for i <= j.
  Rational lower_tail(std::int64_t j) const;
  bool has_nonnegative_coeffs() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "exp:coeff" pairs separated by single spaces, exponent-ascending, each
  /// coefficient written "p/q". The zero polynomial is the empty string.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& base, std::uint64_t exponent);

/// Exact polynomial in a marker y (nonnegative exponent, counting (1,1)
/// labels) and z (signed exponent, tracking delta). Keys are (y-exp, z-exp).
class BiPoly {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT
  BiPoly(int constant) : BiPoly(Rational(constant)) {}  // NOLINT

  static BiPoly monomial(std::int64_t y_exp, std::int64_t z_exp, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::int64_t y_exp, std::int64_t z_exp) const;
  void add_term(std::int64_t y_exp, std::int64_t z_exp, const Rational& coeff);

  Rational total() const;
  /// Sum over z-exponents at fixed y-exponent.
  Rational y_marginal(std::int64_t y_exp) const;
  /// Sum over y-exponents at fixed z-exponent.
  Rational z_marginal(std::int64_t z_exp) const;
  /// The z-polynomial [y^y_exp] of this.
  LaurentPoly y_slice(std::int64_t y_exp) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& scalar);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Terms terms_;
};

BiPoly pow(const BiPoly& base, std::uint64_t exponent);

}  // namespace eralign
