#pragma once

// Generating functions of labeled cyclic sequences.
//
// For a single cycle sigma of length l, a_l(w, z) sums z^delta(sigma; g, h) *
// w^mu(g, h) over all pairs of binary labelings (g, h) of the cycle. The
// product of a_l over the cycles of a pair permutation tau is the joint
// generating function of the type matrix and delta for tau. The closed form
// a_l(w, z) = d_l(u, v) with u = sum(w), v = w00 w11 (z - 1) + w01 w10 (1/z - 1)
// is checked here against direct enumeration.

#include <cstddef>
#include <cstdint>

#include "eralign/permutation.hpp"
#include "eralign/poly.hpp"
#include "eralign/pvec.hpp"

namespace eralign {

/// Numeric weights indexed by a joint label (i, j).
template <class T>
struct BasicWMatrix {
  T w00{};
  T w01{};
  T w10{};
  T w11{};

  const T& at(int i, int j) const {
    if (i == 0) return j == 0 ? w00 : w01;
    return j == 0 ? w10 : w11;
  }
  T sum() const { return w00 + w01 + w10 + w11; }
  T trace() const { return w00 + w11; }
  T det() const { return w00 * w11 - w01 * w10; }

  friend bool operator==(const BasicWMatrix&, const BasicWMatrix&) = default;
};

using WMatrix = BasicWMatrix<Rational>;
using WMatrixD = BasicWMatrix<double>;

/// Weights equal to the joint label probabilities.
template <class T>
BasicWMatrix<T> weights_from(const BasicPVec<T>& p) {
  return {p.p00, p.p01, p.p10, p.p11};
}

WMatrix hadamard(const WMatrix& x, const WMatrix& y);
WMatrix times_transpose(const WMatrix& x, const WMatrix& y);  // x * y^T

/// Enumeration oracles refuse cycle lengths above this.
inline constexpr unsigned kOracleMaxLength = 10;

/// Direct sum over the 4^l labeled pairs on one l-cycle.
LaurentPoly a_ell_oracle(unsigned ell, const WMatrix& w);
/// sum_{g,h} x^mu(g,h) y^mu(g o sigma, h), enumerated.
Rational b_ell_oracle(unsigned ell, const WMatrix& x, const WMatrix& y);
/// sum_f x^mu(f, f o sigma), enumerated over the 2^l cyclic sequences.
Rational c_ell_oracle(unsigned ell, const WMatrix& x);
/// Cyclic sequences with no two consecutive ones, weighted u^(#00) v^(#01).
Rational d_ell_oracle(unsigned ell, const Rational& u, const Rational& v);

namespace detail {

/// 2 * sum_i C(l, 2i) (u/2)^(l-2i) (u^2/4 + sign*v)^i over any commutative ring
/// containing the rationals. `sign` exists for mutation testing only.
template <class R>
R d_ell_signed(unsigned ell, const R& u, const R& v, int sign) {
  const R half_u = u * Rational(1, 2);
  const R shifted = half_u * half_u + v * Rational(sign);
  std::vector<R> half_u_pow{R(Rational(1))};
  for (unsigned k = 1; k <= ell; ++k) half_u_pow.push_back(half_u_pow.back() * half_u);
  R shifted_pow(Rational(1));
  R sum(Rational(0));
  for (unsigned i = 0; 2 * i <= ell; ++i) {
    sum += half_u_pow[ell - 2 * i] * shifted_pow * binomial_q(ell, 2 * i);
    shifted_pow = shifted_pow * shifted;
  }
  return sum * Rational(2);
}

}  // namespace detail

/// Closed form of the restricted cyclic-sequence enumerator, generic in the
/// coefficient ring (Rational, LaurentPoly or BiPoly).
template <class R>
R d_ell(unsigned ell, const R& u, const R& v) {
  if (ell == 0) throw ParameterError("cycle length must be at least 1");
  return detail::d_ell_signed(ell, u, v, +1);
}

LaurentPoly d_ell(unsigned ell, const Rational& u, const LaurentPoly& v);

/// u = w00 + w01 + w10 + w11.
Rational u_of(const WMatrix& w);
/// v = w00 w11 (z - 1) + w01 w10 (1/z - 1).
LaurentPoly v_of(const WMatrix& w);

/// a_l(w, z) = d_l(u, v).
LaurentPoly a_ell_closed(unsigned ell, const WMatrix& w);

/// a_1^t1 times the product over longer cycles.
LaurentPoly big_A(const CycleType& ct, const WMatrix& w);
/// Product of a_l^t_l over l >= 2.
LaurentPoly tilde_A(const CycleType& ct, const WMatrix& w);

/// Joint law of (number of (1,1) labels in non-fixed pairs, delta) for any
/// pair permutation with census `ct`: coefficient of y^m z^d is
/// P[M~ = m, delta = d].
BiPoly joint_pmf(const CycleType& ct, const ExactPVec& p);

}  // namespace eralign
