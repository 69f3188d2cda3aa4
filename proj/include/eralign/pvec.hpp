#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include "eralign/rational.hpp"

namespace eralign {

/// Joint law of one vertex pair's labels (Ga(e), Gb(e)).
///
/// Entries are ordered (p11, p10, p01, p00) to match the text form. The scalar
/// is either `Rational` (exact mode, used wherever identities are asserted) or
/// `double` (Monte Carlo and bound evaluation).
template <class T>
struct BasicPVec {
  T p11{};
  T p10{};
  T p01{};
  T p00{};

  static constexpr bool exact = std::is_same_v<T, Rational>;

  /// Sum tolerance in float mode; exact mode compares with zero slack.
  static constexpr double kSumTolerance = 1e-12;

  bool is_valid() const {
    for (const T* v : {&p11, &p10, &p01, &p00}) {
      if (!(*v >= 0) || !(*v <= 1)) return false;
    }
    if constexpr (exact) {
      return p11 + p10 + p01 + p00 == 1;
    } else {
      return std::abs(p11 + p10 + p01 + p00 - 1.0) <= kSumTolerance;
    }
  }

  void validate() const {
    if (!is_valid()) {
      throw ParameterError("invalid edge-probability vector: entries must lie in [0,1] and sum to 1");
    }
  }

  /// p11*p00 > p01*p10.
  bool positively_correlated() const { return p11 * p00 > p01 * p10; }

  /// Probability of label (a, b) for Ga(e) = a, Gb(e) = b.
  const T& at(int a, int b) const {
    if (a == 1) return b == 1 ? p11 : p10;
    return b == 1 ? p01 : p00;
  }

  BasicPVec<double> to_double() const {
    return {eralign::to_double(p11), eralign::to_double(p10), eralign::to_double(p01),
            eralign::to_double(p00)};
  }

  friend bool operator==(const BasicPVec&, const BasicPVec&) = default;
};

using PVec = BasicPVec<double>;
using ExactPVec = BasicPVec<Rational>;

/// Parses four comma-separated decimal strings (p11,p10,p01,p00) exactly.
/// The entries must sum to exactly 1 as decimals.
ExactPVec parse_pvec(std::string_view text);

/// Four decimal strings; exact-mode entries with non-terminating decimal
/// expansions are written as "p/q".
std::string format_pvec(const ExactPVec& p);
std::string format_pvec(const PVec& p);

/// Exact conversion of a float vector (every double is a dyadic rational).
/// Validation is not repeated; float sums within tolerance may not be exactly 1.
ExactPVec to_exact(const PVec& p);

}  // namespace eralign
