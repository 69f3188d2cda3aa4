#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eralign/rational.hpp"

namespace eralign {

/// A bijection on {0, ..., size-1}; images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ParameterError unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t size);
  /// Exchanges a and b, fixing everything else.
  static Permutation transposition(std::size_t size, std::size_t a, std::size_t b);
  /// Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t size, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  std::size_t fixed_points() const;
  /// Number of points moved (size minus fixed points).
  std::size_t moved_points() const { return size() - fixed_points(); }

  Permutation inverse() const;

  /// Comma-separated image list, e.g. "2,0,1".
  std::string serialize() const;
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (f * g)(i) = f(g(i)).
Permutation compose(const Permutation& f, const Permutation& g);

/// The induced permutation on vertex pairs, {i,j} -> {pi(i), pi(j)}, indexed
/// by the lexicographic pair order of graph.hpp.
Permutation lift(const Permutation& pi);

/// Census of cycle lengths: counts[l] = number of cycles of length l.
struct CycleType {
  std::map<std::size_t, std::size_t> counts;

  std::size_t count(std::size_t length) const;
  std::size_t t1() const { return count(1); }
  /// Points lying in cycles of length at least two.
  std::size_t t_tilde() const;
  /// Sum of length * count, the size of the permuted set.
  std::size_t domain_size() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& tau);

/// !k via !k = (k-1)(!(k-1) + !(k-2)).
BigInt derangements(unsigned k);

/// Number of permutations of [n] moving exactly n_tilde points.
BigInt count_support(unsigned n, unsigned n_tilde);

/// Default cap for exhaustive enumeration over S_n.
inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// All permutations of [n] in lexicographic order of their image sequences.
class PermutationStream {
 public:
  explicit PermutationStream(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  /// Returns the next permutation, or nullopt once all n! have been produced.
  std::optional<Permutation> next();

 private:
  std::vector<std::uint32_t> current_;
  bool done_ = false;
};

/// Throws CapExceeded naming n and the cap when n > cap.
void check_enumeration_cap(std::size_t n, std::size_t cap);

/// Exact left and right sides of sum_k |S_{n,k}| z^k <= 1 + n^2 z^2 / (1 - n z).
struct PermGfSides {
  Rational lhs;
  Rational rhs;
};
PermGfSides perm_gf_check(unsigned n, const Rational& z);

/// Counting quantities of a permutation's lift and the bounds relating them.
struct T1Bounds {
  std::size_t n = 0;
  std::size_t n_tilde = 0;
  std::size_t t = 0;
  std::size_t t1 = 0;
  std::size_t t_tilde = 0;
  Rational lower;        // C(n - n_tilde, 2)
  Rational upper;        // C(n - n_tilde, 2) + n_tilde / 2
  Rational t_tilde_lb;   // n_tilde (n - 2) / 2
  Rational t_tilde_ub;   // n * n_tilde
  Rational nu_bound;     // (1 - nu)^2 + nu^2 / (n - 1), compared with t1 / t
  bool holds = false;
};
T1Bounds t1_bounds_check(const Permutation& pi);

}  // namespace eralign
