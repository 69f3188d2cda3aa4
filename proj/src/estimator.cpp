#include "eralign/estimator.hpp"

#include <algorithm>

#include "eralign/model.hpp"

namespace eralign {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return out;
}

}  // namespace

ScanReport scan(const Graph& gc, const Graph& gb, const std::optional<Permutation>& planted, bool track_runner_up,
                std::size_t cap) {
  if (gc.n() != gb.n()) throw ParameterError("graphs have different vertex counts");
  if (planted && planted->size() != gc.n()) throw ParameterError("planted permutation size does not match");
  if (track_runner_up && !planted) throw ParameterError("runner-up tracking needs a planted permutation");

  ScanReport report;
  std::int64_t best = kUnbounded;
  std::vector<std::uint32_t> best_images;
  std::int64_t runner_up = kUnbounded;
  std::int64_t threshold = -1;
  if (planted) {
    threshold = hamming(compose(gc, lift(*planted)), gb);
    report.planted_hamming = threshold;
  }

  // Every minimizer costs at most the planted cost, so with a planted
  // permutation the planted cost (widened for the runner-up) is a safe bound.
  auto bound = [&]() -> std::int64_t {
    if (!planted) return best;
    return track_runner_up ? std::max(threshold, runner_up) : threshold;
  };
  auto visit = [&](const std::vector<std::uint32_t>& images, std::int64_t cost) {
    if (cost < best) {
      best = cost;
      best_images = images;
      report.min_ties = 1;
    } else if (cost == best) {
      ++report.min_ties;
    }
    if (planted) {
      if (cost <= threshold) ++report.within_planted;
      if (track_runner_up && images != planted->images()) runner_up = std::min(runner_up, cost);
    }
  };
  scan_alignments(gc, gb, cap, bound, visit);

  report.best = Permutation(best_images);
  report.min_hamming = best;
  if (track_runner_up && runner_up != kUnbounded) report.runner_up_hamming = runner_up;
  return report;
}

AlignmentResult map_estimate(const Graph& gc, const Graph& gb, const std::optional<Permutation>& planted,
                             std::size_t cap) {
  const ScanReport r = scan(gc, gb, planted, false, cap);
  AlignmentResult out;
  out.best_perm = r.best;
  out.min_delta_hamming = r.min_hamming;
  out.min_ties = to_big(r.min_ties);
  if (planted) {
    out.q_size = to_big(r.within_planted);
    const bool planted_optimal = *r.planted_hamming == r.min_hamming;
    out.strict_success = planted_optimal && r.min_ties == 1;
    out.eta = planted_optimal ? Rational(1) / Rational(out.q_size) : Rational(0);
  } else {
    out.q_size = out.min_ties;
  }
  return out;
}

BigInt q_set_size(const Graph& ga, const Graph& gb, std::size_t cap) {
  return to_big(scan(ga, gb, Permutation::identity(ga.n()), false, cap).within_planted);
}

std::uint64_t automorphism_count_u64(const Graph& g, std::size_t cap) {
  std::uint64_t count = 0;
  scan_alignments(g, g, cap, [] { return std::int64_t{0}; },
                  [&](const std::vector<std::uint32_t>&, std::int64_t) { ++count; });
  return count;
}

BigInt automorphism_count(const Graph& g, std::size_t cap) { return to_big(automorphism_count_u64(g, cap)); }

std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap) {
  std::vector<Permutation> out;
  scan_alignments(g, g, cap, [] { return std::int64_t{0}; },
                  [&](const std::vector<std::uint32_t>& images, std::int64_t) { out.emplace_back(images); });
  return out;
}

bool intersection_aut_check(const Graph& ga, const Graph& gb, std::size_t cap) {
  for (const Permutation& pi : automorphisms(intersection(ga, gb), cap)) {
    if (delta_stat(lift(pi), ga, gb) > 0) return false;
  }
  return true;
}

std::size_t isolated_count(const Graph& g) {
  const auto rows = g.adjacency();
  return static_cast<std::size_t>(std::count(rows.begin(), rows.end(), std::uint64_t{0}));
}

}  // namespace eralign
