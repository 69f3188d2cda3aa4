#pragma once

// Finite-n evaluators for the achievability and converse bounds, plus a
// region classifier for (n, p). Asymptotic hypotheses become explicit knobs:
// an omega(1) term is an additive margin and O(f) is a constant times f.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eralign/cyclic.hpp"
#include "eralign/pvec.hpp"

namespace eralign {

/// One evaluated bound. `value` is capped at 1; `raw` is what the formula gave.
struct BoundReport {
  std::string name;
  double value = 1.0;
  double raw = 1.0;
  bool valid = true;          // preconditions held
  bool uninformative = false;  // raw >= 1, or invalid
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> details;

  /// Sets raw/value/uninformative from a formula result. NaN becomes invalid.
  void set(double formula);
  void invalidate();
  double detail(const std::string& key) const;  // throws std::out_of_range

  /// A single-line JSON object.
  std::string to_json() const;
};

/// sqrt(w01 w10 / (w00 w11)), the minimizer of the two-cycle polynomial.
double opt_z_optimizer(const WMatrixD& w);

/// ((sum w)^2 - 2 (sqrt(w00 w11) - sqrt(w01 w10))^2)^(t_tilde/2): an upper
/// bound on the mass of tilde_A(w, z) at nonpositive z-exponents.
/// DomainError unless all entries are positive and w01 w10 < w00 w11.
double opt_z_bound(const WMatrixD& w, std::uint64_t t_tilde);

/// exp(-(n-2)/2 (sqrt(p11 p00) - sqrt(p01 p10))^2); P[delta <= 0] <= z2^n_tilde.
double dense_z2(std::size_t n, const PVec& p);

/// An evaluated hypothesis lhs <= rhs or lhs >= rhs, with slack >= 0 iff it holds.
struct Condition {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool holds = false;
};

/// (sqrt(p11 p00) - sqrt(p01 p10))^2 >= (2 ln n + margin) / n, with positive correlation.
Condition ach_one_check(std::size_t n, const PVec& p, double margin);

/// Bound on P[delta(tau) <= 0 | M~ = m_tilde] for a pair permutation with
/// t_tilde non-fixed pairs:
///   (m~ / (t~ p'11 w*))^m~ (alpha / (1 - p11)^2)^(t~/2)
/// with p' = p / (1 - p11), w* = (m~ ln n / t~ + p11) / p'11 and
/// alpha = (1 - p11 + p11 w*)^2 - 2 (sqrt(p00 p11 w*) - sqrt(p01 p10))^2.
/// Invalid (not thrown) when p11 is 0 or 1 or w* p11 p00 < p01 p10.
BoundReport sparse_bound(std::size_t n, const PVec& p, std::uint64_t m_tilde, std::uint64_t t_tilde,
                         std::uint64_t n_tilde);

/// Bound on P[delta(tau) <= 0 | M = m], worst case over permutations moving
/// n_tilde vertices. Splits at m~* = e^2 m t~ / t:
///   eps1 = sum_{m~ <= m~*} P[M~ = m~ | M = m] min(1, sparse_bound(m~))
///   eps2 = exp(-(e^2 + 1) m n_tilde (n - 2) / (n (n - 1)))
BoundReport m_ub(std::size_t n, std::uint64_t m, const PVec& p, std::uint64_t n_tilde);

/// 3 n^2 z^2, uncapped.
double union_compose(std::size_t n, double z);
BoundReport union_report(std::size_t n, double z);

/// z9 (1 + p11 (z8 - 1))^t + P[M > (1 + eps) t p11] with M ~ Bin(t, p11).
BoundReport m_average(std::size_t n, const PVec& p, double z8, double z9, double eps);

struct ClassifyConstants {
  double margin = 2.0;      // replaces each omega(1)
  double c_p11_sparse = 1.0;  // p11 <= c / ln n
  double c_p_sparse = 1.0;    // p01 + p10 <= c / ln n
  double c_p_corr = 1.0;      // p01 p10 / (p11 p00) <= c / (ln n)^3
};

enum class Region { converse, achievable_dense, achievable_sparse, gap, unclassified };

std::string to_string(Region r);

struct RegionVerdict {
  Region region = Region::unclassified;
  bool correlated = false;
  std::vector<Condition> conditions;

  std::string to_json() const;
};

/// Precedence when several hold: achievable-sparse, achievable-dense, converse.
/// The converse and achievability hypotheses are disjoint for margin >= 0
/// anyway, since the sparse one needs p11 >= (ln n + margin)/n.
RegionVerdict classify(std::size_t n, const PVec& p, const ClassifyConstants& constants = {});

}  // namespace eralign
