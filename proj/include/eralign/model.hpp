#pragma once

#include <cstdint>

#include "eralign/graph.hpp"
#include "eralign/permutation.hpp"
#include "eralign/pvec.hpp"
#include "eralign/rng.hpp"

namespace eralign {

/// Two graphs on the same vertex set [n].
struct CorrelatedPair {
  Graph ga;
  Graph gb;
};

/// Samples (Ga, Gb) ~ ER(n, p): each pair index, in order, draws one uniform
/// and takes label (1,1), (1,0), (0,1), (0,0) by cumulative comparison.
CorrelatedPair sample_pair(std::size_t n, const PVec& p, Rng& rng);
CorrelatedPair sample_pair(std::size_t n, const PVec& p, std::uint64_t seed);

/// Relabels g by pi: output(l(pi)(e)) = g(e).
Graph anonymize(const Graph& g, const Permutation& pi);

/// g o tau for a permutation tau of the pair indices.
Graph compose(const Graph& g, const Permutation& tau);

/// Edge present iff present in both.
Graph intersection(const Graph& ga, const Graph& gb);

/// Counts of pairs by joint label (fa(e), fb(e)).
struct TypeMatrix {
  std::int64_t k00 = 0;
  std::int64_t k01 = 0;
  std::int64_t k10 = 0;
  std::int64_t k11 = 0;

  std::int64_t hamming() const { return k01 + k10; }
  std::int64_t total() const { return k00 + k01 + k10 + k11; }

  friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;
};

TypeMatrix type_matrix(const Graph& fa, const Graph& fb);
std::int64_t hamming(const Graph& fa, const Graph& fb);

/// delta(tau; ga, gb) = (Hamming(ga o tau, gb) - Hamming(ga, gb)) / 2.
///
/// Also computed as mu(ga,gb)_11 - mu(ga o tau, gb)_11; a disagreement between
/// the two routes raises std::logic_error.
std::int64_t delta_stat(const Permutation& tau, const Graph& ga, const Graph& gb);

/// The mean of delta over ER(n, p) for a permutation with t_tilde non-fixed pairs.
Rational expected_delta(const ExactPVec& p, std::uint64_t t_tilde);

/// Parent-graph edge probability r and the two retention probabilities.
template <class T>
struct BasicSubsamplingParams {
  T r{};
  T sa{};
  T sb{};
};
using SubsamplingParams = BasicSubsamplingParams<Rational>;

template <class T>
BasicPVec<T> subsampling_to_pvec(const BasicSubsamplingParams<T>& s) {
  BasicPVec<T> p{s.r * s.sa * s.sb, s.r * s.sa * (1 - s.sb), s.r * (1 - s.sa) * s.sb,
                 1 - s.r * (s.sa + s.sb - s.sa * s.sb)};
  for (const T* v : {&s.r, &s.sa, &s.sb}) {
    if (!(*v >= 0) || !(*v <= 1)) throw ParameterError("subsampling parameters must lie in [0,1]");
  }
  p.validate();
  return p;
}

/// r = p11 + p10 + p01 + p10 p01 / p11.
template <class T>
T pvec_to_r(const BasicPVec<T>& p) {
  if (!(p.p11 > 0)) throw DomainError("recovering r requires p11 > 0");
  return p.p11 + p.p10 + p.p01 + p.p10 * p.p01 / p.p11;
}

}  // namespace eralign
