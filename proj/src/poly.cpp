#include "eralign/poly.hpp"

#include <cmath>
#include <sstream>

namespace eralign {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

template <class Poly>
Poly power(const Poly& base, std::uint64_t exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(const Rational& constant) { accumulate(terms_, std::int64_t{0}, constant); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const Rational& coeff) {
  LaurentPoly p;
  accumulate(p.terms_, exponent, coeff);
  return p;
}

Rational LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exponent, const Rational& coeff) { accumulate(terms_, exponent, coeff); }

std::int64_t LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
std::int64_t LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::evaluate(const Rational& z) const {
  if (z == 0 && min_exponent() < 0) throw DomainError("evaluating negative powers at z = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * pow(z, e);
  return sum;
}

double LaurentPoly::evaluate(double z) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) sum += to_double(c) * std::pow(z, static_cast<double>(e));
  return sum;
}

Rational LaurentPoly::total() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rational LaurentPoly::lower_tail(std::int64_t j) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e > j) break;
    sum += c;
  }
  return sum;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, Rational(-c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) accumulate(out.terms_, ea + eb, Rational(ca * cb));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }

std::string LaurentPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(e) + ":" + to_fraction_string(c);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly p;
  std::istringstream in{std::string(text)};
  std::string token;
  bool first = true;
  std::int64_t last = 0;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) throw ParameterError("polynomial term '" + token + "' lacks ':'");
    std::int64_t e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(token.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParameterError("bad exponent in polynomial term '" + token + "'");
    }
    if (!first && e <= last) throw ParameterError("polynomial exponents must be strictly ascending");
    Rational c = parse_rational(token.substr(colon + 1));
    if (c == 0) throw ParameterError("polynomial text must not contain zero coefficients");
    p.terms_.emplace(e, c);
    first = false;
    last = e;
  }
  return p;
}

LaurentPoly pow(const LaurentPoly& base, std::uint64_t exponent) { return power(base, exponent); }

// ---- BiPoly ----

BiPoly::BiPoly(const Rational& constant) { accumulate(terms_, Key{0, 0}, constant); }

BiPoly BiPoly::monomial(std::int64_t y_exp, std::int64_t z_exp, const Rational& coeff) {
  BiPoly p;
  accumulate(p.terms_, Key{y_exp, z_exp}, coeff);
  return p;
}

Rational BiPoly::coeff(std::int64_t y_exp, std::int64_t z_exp) const {
  auto it = terms_.find(Key{y_exp, z_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(std::int64_t y_exp, std::int64_t z_exp, const Rational& coeff) {
  accumulate(terms_, Key{y_exp, z_exp}, coeff);
}

Rational BiPoly::total() const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

Rational BiPoly::y_marginal(std::int64_t y_exp) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    if (k.first == y_exp) sum += c;
  }
  return sum;
}

Rational BiPoly::z_marginal(std::int64_t z_exp) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    if (k.second == z_exp) sum += c;
  }
  return sum;
}

LaurentPoly BiPoly::y_slice(std::int64_t y_exp) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.first == y_exp) out.add_term(k.second, c);
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) accumulate(terms_, k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      accumulate(out.terms_, BiPoly::Key{ka.first + kb.first, ka.second + kb.second}, Rational(ca * cb));
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

BiPoly pow(const BiPoly& base, std::uint64_t exponent) { return power(base, exponent); }

}  // namespace eralign
