#pragma once

#include <cstdint>

#include "eralign/poly.hpp"

namespace eralign {

/// Probability generating function of the number of marked items among `a`
/// draws without replacement from `n` items of which `b` are marked:
/// [z^k] = C(b,k) C(n-b,a-k) / C(n,a).
LaurentPoly hyp_pgf(unsigned a, unsigned b, unsigned n);

/// The same with replacement: (1 - b/n + (b/n) z)^a.
LaurentPoly bin_pgf(unsigned a, unsigned b, unsigned n);

/// z1^(-j) g(z1), which bounds sum_{i <= j} [z^i] g when the coefficients of
/// g are nonnegative and 0 < z1 <= 1.
Rational chernoff_tail(const LaurentPoly& g, std::int64_t j, const Rational& z1);

}  // namespace eralign
