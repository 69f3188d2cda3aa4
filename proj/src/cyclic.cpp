#include "eralign/cyclic.hpp"

#include <array>
#include <map>
#include <string>

namespace eralign {

namespace {

void check_oracle_length(unsigned ell) {
  if (ell == 0) throw ParameterError("cycle length must be at least 1");
  if (ell > kOracleMaxLength) {
    throw CapExceeded("enumeration oracle refuses cycle length " + std::to_string(ell) + " (cap " +
                      std::to_string(kOracleMaxLength) + ")");
  }
}

using Type = std::array<unsigned, 4>;  // indexed 2*i + j

// mu(f1, f2) on the cycle 0 -> 1 -> ... -> l-1 -> 0; bit k of a mask is the
// label of position k, and (f o sigma)(k) = f((k+1) mod l).
Type type_of(unsigned f1, unsigned f2, unsigned ell) {
  Type t{};
  for (unsigned k = 0; k < ell; ++k) ++t[2 * ((f1 >> k) & 1U) + ((f2 >> k) & 1U)];
  return t;
}

unsigned rotate(unsigned f, unsigned ell) {
  // (f o sigma)(k) = f(k + 1): shift right, wrap bit 0 to the top.
  return (f >> 1) | ((f & 1U) << (ell - 1));
}

Rational monomial_value(const WMatrix& w, const Type& t) {
  return pow(w.w00, t[0]) * pow(w.w01, t[1]) * pow(w.w10, t[2]) * pow(w.w11, t[3]);
}

}  // namespace

WMatrix hadamard(const WMatrix& x, const WMatrix& y) {
  return {x.w00 * y.w00, x.w01 * y.w01, x.w10 * y.w10, x.w11 * y.w11};
}

WMatrix times_transpose(const WMatrix& x, const WMatrix& y) {
  // (x y^T)_{ij} = sum_k x_{ik} y_{jk}
  return {x.w00 * y.w00 + x.w01 * y.w01, x.w00 * y.w10 + x.w01 * y.w11, x.w10 * y.w00 + x.w11 * y.w01,
          x.w10 * y.w10 + x.w11 * y.w11};
}

LaurentPoly a_ell_oracle(unsigned ell, const WMatrix& w) {
  check_oracle_length(ell);
  // Tally (mu, delta) first; the weights are applied once per distinct class.
  std::map<std::pair<Type, std::int64_t>, std::uint64_t> tally;
  const unsigned labelings = 1U << ell;
  for (unsigned g = 0; g < labelings; ++g) {
    const unsigned g_rot = rotate(g, ell);
    for (unsigned h = 0; h < labelings; ++h) {
      const Type before = type_of(g, h, ell);
      const Type after = type_of(g_rot, h, ell);
      const std::int64_t twice = static_cast<std::int64_t>(after[1] + after[2]) - (before[1] + before[2]);
      ++tally[{before, twice / 2}];
    }
  }
  LaurentPoly out;
  for (const auto& [key, count] : tally) {
    out.add_term(key.second, Rational(static_cast<unsigned long>(count)) * monomial_value(w, key.first));
  }
  return out;
}

Rational b_ell_oracle(unsigned ell, const WMatrix& x, const WMatrix& y) {
  check_oracle_length(ell);
  std::map<std::pair<Type, Type>, std::uint64_t> tally;
  const unsigned labelings = 1U << ell;
  for (unsigned g = 0; g < labelings; ++g) {
    const unsigned g_rot = rotate(g, ell);
    for (unsigned h = 0; h < labelings; ++h) ++tally[{type_of(g, h, ell), type_of(g_rot, h, ell)}];
  }
  Rational sum = 0;
  for (const auto& [key, count] : tally) {
    sum += Rational(static_cast<unsigned long>(count)) * monomial_value(x, key.first) * monomial_value(y, key.second);
  }
  return sum;
}

Rational c_ell_oracle(unsigned ell, const WMatrix& x) {
  check_oracle_length(ell);
  Rational sum = 0;
  for (unsigned f = 0; f < (1U << ell); ++f) sum += monomial_value(x, type_of(f, rotate(f, ell), ell));
  return sum;
}

Rational d_ell_oracle(unsigned ell, const Rational& u, const Rational& v) {
  check_oracle_length(ell);
  Rational sum = 0;
  for (unsigned f = 0; f < (1U << ell); ++f) {
    const Type t = type_of(f, rotate(f, ell), ell);
    if (t[3] != 0) continue;
    sum += pow(u, t[0]) * pow(v, t[1]);
  }
  return sum;
}

LaurentPoly d_ell(unsigned ell, const Rational& u, const LaurentPoly& v) {
  return d_ell<LaurentPoly>(ell, LaurentPoly(u), v);
}

Rational u_of(const WMatrix& w) { return w.sum(); }

LaurentPoly v_of(const WMatrix& w) {
  const Rational diag = w.w00 * w.w11;
  const Rational off = w.w01 * w.w10;
  LaurentPoly v = LaurentPoly::monomial(1, diag);
  v.add_term(0, Rational(-diag - off));
  v.add_term(-1, off);
  return v;
}

LaurentPoly a_ell_closed(unsigned ell, const WMatrix& w) { return d_ell(ell, u_of(w), v_of(w)); }

LaurentPoly tilde_A(const CycleType& ct, const WMatrix& w) {
  LaurentPoly out(1);
  for (auto [len, count] : ct.counts) {
    if (len < 2 || count == 0) continue;
    out *= pow(a_ell_closed(static_cast<unsigned>(len), w), count);
  }
  return out;
}

LaurentPoly big_A(const CycleType& ct, const WMatrix& w) {
  return tilde_A(ct, w) * pow(LaurentPoly(u_of(w)), ct.t1());
}

BiPoly joint_pmf(const CycleType& ct, const ExactPVec& p) {
  p.validate();
  // w = p (.) [[1, 1], [1, y]]: the marker y counts (1,1) labels.
  BiPoly u(Rational(p.p00 + p.p01 + p.p10));
  u.add_term(1, 0, p.p11);
  const Rational diag = p.p00 * p.p11;
  const Rational off = p.p01 * p.p10;
  BiPoly v;
  v.add_term(1, 1, diag);
  v.add_term(1, 0, Rational(-diag));
  v.add_term(0, -1, off);
  v.add_term(0, 0, Rational(-off));
  BiPoly out(1);
  for (auto [len, count] : ct.counts) {
    if (len < 2 || count == 0) continue;
    out *= pow(d_ell<BiPoly>(static_cast<unsigned>(len), u, v), count);
  }
  return out;
}

}  // namespace eralign
