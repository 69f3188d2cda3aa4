#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "eralign/graph.hpp"
#include "eralign/permutation.hpp"
#include "eralign/rational.hpp"

namespace eralign {

/// Visits, in lexicographic order of image sequences, every permutation pi of
/// [n] whose alignment cost Hamming(gc o l(pi), gb) is at most `bound()`.
///
/// The search assigns pi(0), pi(1), ... in turn and abandons a prefix once
/// its partial cost exceeds `bound()`. Partial costs only grow, so any
/// permutation within the bound at the time it would be reached is visited.
/// `bound` may shrink between calls but must never grow.
template <class Bound, class Visit>
void scan_alignments(const Graph& gc, const Graph& gb, std::size_t cap, Bound&& bound, Visit&& visit) {
  if (gc.n() != gb.n()) throw ParameterError("graphs have different vertex counts");
  const std::size_t n = gc.n();
  check_enumeration_cap(n, cap);
  const std::vector<std::uint64_t> adj_c = gc.adjacency();
  const std::vector<std::uint64_t> adj_b = gb.adjacency();
  std::vector<std::uint32_t> images(n, 0);
  std::uint64_t used = 0;

  auto descend = [&](auto&& self, std::size_t k, std::int64_t cost) -> void {
    if (k == n) {
      visit(images, cost);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      std::int64_t c = cost;
      const std::uint64_t row_c = adj_c[v];
      const std::uint64_t row_b = adj_b[k];
      for (std::size_t j = 0; j < k; ++j) {
        c += static_cast<std::int64_t>(((row_c >> images[j]) ^ (row_b >> j)) & 1U);
      }
      if (c > bound()) continue;
      images[k] = v;
      used |= std::uint64_t{1} << v;
      self(self, k + 1, c);
      used &= ~(std::uint64_t{1} << v);
    }
  };
  descend(descend, 0, 0);
}

/// Everything one exhaustive scan of S_n reports about an alignment instance.
struct ScanReport {
  Permutation best;                 // first minimizer in lexicographic order
  std::int64_t min_hamming = 0;
  std::uint64_t min_ties = 0;       // permutations attaining the minimum
  // Filled only when a planted permutation is supplied.
  std::optional<std::int64_t> planted_hamming;
  std::uint64_t within_planted = 0;  // permutations no worse than the planted one
  std::optional<std::int64_t> runner_up_hamming;  // best cost over pi != planted
};

/// One pruned pass over S_n. With `track_runner_up`, the pass also keeps
/// the best cost among non-planted permutations (requires `planted`).
ScanReport scan(const Graph& gc, const Graph& gb, const std::optional<Permutation>& planted,
                bool track_runner_up, std::size_t cap = kDefaultEnumerationCap);

/// Output of the exhaustive MAP estimator.
struct AlignmentResult {
  Permutation best_perm;
  std::int64_t min_delta_hamming = 0;
  BigInt min_ties;  // minimizers of the alignment cost
  /// |Q| when the planted permutation is known; otherwise the tie count.
  BigInt q_size;
  std::optional<bool> strict_success;
  std::optional<Rational> eta;
};

/// argmin over pi of Hamming(gc o l(pi), gb), ties broken by the first
/// minimizer in lexicographic order. `planted` is used only for scoring.
AlignmentResult map_estimate(const Graph& gc, const Graph& gb, const std::optional<Permutation>& planted = {},
                             std::size_t cap = kDefaultEnumerationCap);

/// |{pi : delta(l(pi); ga, gb) <= 0}|, always at least 1.
BigInt q_set_size(const Graph& ga, const Graph& gb, std::size_t cap = kDefaultEnumerationCap);

BigInt automorphism_count(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
std::uint64_t automorphism_count_u64(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// True iff every automorphism pi of ga AND gb has delta(l(pi); ga, gb) <= 0.
bool intersection_aut_check(const Graph& ga, const Graph& gb, std::size_t cap = kDefaultEnumerationCap);

/// Number of degree-zero vertices.
std::size_t isolated_count(const Graph& g);

}  // namespace eralign
