#include "eralign/model.hpp"

#include <stdexcept>

namespace eralign {

namespace {

void require_same_size(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw ParameterError("graphs have different vertex counts");
}

}  // namespace

CorrelatedPair sample_pair(std::size_t n, const PVec& p, Rng& rng) {
  p.validate();
  if (n < 1) throw ParameterError("sample_pair needs at least one vertex");
  CorrelatedPair out{Graph(n), Graph(n)};
  const double c11 = p.p11;
  const double c10 = c11 + p.p10;
  const double c01 = c10 + p.p01;
  for (std::size_t e = 0; e < out.ga.pairs(); ++e) {
    const double u = rng.uniform();
    if (u < c11) {
      out.ga.set_edge(e, true);
      out.gb.set_edge(e, true);
    } else if (u < c10) {
      out.ga.set_edge(e, true);
    } else if (u < c01) {
      out.gb.set_edge(e, true);
    }
  }
  return out;
}

CorrelatedPair sample_pair(std::size_t n, const PVec& p, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pair(n, p, rng);
}

Graph anonymize(const Graph& g, const Permutation& pi) {
  if (pi.size() != g.n()) throw ParameterError("permutation size does not match the graph");
  Graph out(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = i + 1; j < g.n(); ++j) {
      if (g.edge(i, j)) out.set_edge(pi(i), pi(j), true);
    }
  }
  return out;
}

Graph compose(const Graph& g, const Permutation& tau) {
  if (tau.size() != g.pairs()) throw ParameterError("pair permutation size does not match the graph");
  Graph out(g.n());
  for (std::size_t e = 0; e < g.pairs(); ++e) out.set_edge(e, g.edge(tau(e)));
  return out;
}

Graph intersection(const Graph& ga, const Graph& gb) {
  require_same_size(ga, gb);
  Graph out(ga.n());
  for (std::size_t e = 0; e < ga.pairs(); ++e) out.set_edge(e, ga.edge(e) && gb.edge(e));
  return out;
}

TypeMatrix type_matrix(const Graph& fa, const Graph& fb) {
  require_same_size(fa, fb);
  TypeMatrix k;
  for (std::size_t e = 0; e < fa.pairs(); ++e) {
    const bool a = fa.edge(e);
    const bool b = fb.edge(e);
    if (a) {
      ++(b ? k.k11 : k.k10);
    } else {
      ++(b ? k.k01 : k.k00);
    }
  }
  return k;
}

std::int64_t hamming(const Graph& fa, const Graph& fb) { return type_matrix(fa, fb).hamming(); }

std::int64_t delta_stat(const Permutation& tau, const Graph& ga, const Graph& gb) {
  require_same_size(ga, gb);
  if (tau.size() != ga.pairs()) throw ParameterError("tau must permute the pair indices of the graphs");
  const TypeMatrix before = type_matrix(ga, gb);
  const TypeMatrix after = type_matrix(compose(ga, tau), gb);
  const std::int64_t twice = after.hamming() - before.hamming();
  const std::int64_t via_matches = before.k11 - after.k11;
  if (twice != 2 * via_matches) {
    throw std::logic_error("delta routes disagree: Hamming difference is not twice the match difference");
  }
  return via_matches;
}

Rational expected_delta(const ExactPVec& p, std::uint64_t t_tilde) {
  p.validate();
  return Rational(BigInt(std::to_string(t_tilde))) * (p.p00 * p.p11 - p.p01 * p.p10);
}

}  // namespace eralign
