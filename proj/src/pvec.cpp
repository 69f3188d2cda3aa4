#include "eralign/pvec.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace eralign {

namespace {

// Terminating decimal expansion of q, or "p/q" when none exists.
std::string decimal_or_fraction(const Rational& q) {
  BigInt den = q.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_fraction_string(q);
  const unsigned places = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  BigInt scaled = q.get_num() * scale / q.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

}  // namespace

ExactPVec parse_pvec(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParameterError("edge-probability vector needs exactly four entries");
  ExactPVec p{parts[0], parts[1], parts[2], parts[3]};
  p.validate();
  return p;
}

std::string format_pvec(const ExactPVec& p) {
  return decimal_or_fraction(p.p11) + "," + decimal_or_fraction(p.p10) + "," + decimal_or_fraction(p.p01) +
         "," + decimal_or_fraction(p.p00);
}

// Shortest form that reads back to the same doubles.
std::string format_pvec(const PVec& p) {
  std::string out;
  for (double x : {p.p11, p.p10, p.p01, p.p00}) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (!out.empty()) out += ',';
    out.append(buf, end);
  }
  return out;
}

ExactPVec to_exact(const PVec& p) { return {Rational(p.p11), Rational(p.p10), Rational(p.p01), Rational(p.p00)}; }

}  // namespace eralign
