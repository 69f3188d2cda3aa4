#include "eralign/pgf.hpp"

#include <algorithm>

namespace eralign {

LaurentPoly hyp_pgf(unsigned a, unsigned b, unsigned n) {
  if (a > n || b > n) throw ParameterError("hypergeometric parameters need a <= n and b <= n");
  const Rational total = binomial_q(n, a);
  LaurentPoly out;
  const unsigned lo = a + b > n ? a + b - n : 0;
  for (unsigned k = lo; k <= std::min(a, b); ++k) {
    out.add_term(k, binomial_q(b, k) * binomial_q(n - b, a - k) / total);
  }
  return out;
}

LaurentPoly bin_pgf(unsigned a, unsigned b, unsigned n) {
  if (a > n || b > n) throw ParameterError("binomial parameters need a <= n and b <= n");
  if (n == 0) return LaurentPoly(1);
  const Rational q = frac(static_cast<long>(b), static_cast<long>(n));
  LaurentPoly step = LaurentPoly::monomial(1, q);
  step.add_term(0, Rational(1 - q));
  return pow(step, a);
}

Rational chernoff_tail(const LaurentPoly& g, std::int64_t j, const Rational& z1) {
  if (!g.has_nonnegative_coeffs()) throw DomainError("Chernoff tail bound needs nonnegative coefficients");
  if (z1 <= 0 || z1 > 1) throw DomainError("Chernoff tail bound needs 0 < z1 <= 1");
  return pow(z1, -j) * g.evaluate(z1);
}

}  // namespace eralign
