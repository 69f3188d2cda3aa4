// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eralign/cyclic.hpp"
#include "eralign/bounds.hpp"
#include "eralign/estimator.hpp"
#include "eralign/experiment.hpp"
#include "eralign/model.hpp"
#include "eralign/pgf.hpp"
#include "support/oracles.hpp"

using namespace eralign;

namespace {

WMatrix random_w(Rng& rng) {
  return {oracle::small_rational(rng), oracle::small_rational(rng), oracle::small_rational(rng),
          oracle::small_rational(rng)};
}

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first;
  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

std::string wstr(const WMatrix& w) {
  return to_fraction_string(w.w00) + "," + to_fraction_string(w.w01) + "," + to_fraction_string(w.w10) + "," +
         to_fraction_string(w.w11);
}

bool criterion_identities() {
  Rng rng(1001);
  Tally closed, bc, cd;
  for (unsigned ell = 1; ell <= 8; ++ell) {
    for (int s = 0; s < 20; ++s) {
      const WMatrix x = random_w(rng);
      const WMatrix y = random_w(rng);
      const std::string tag = "l=" + std::to_string(ell) + " x=" + wstr(x);
      closed.record(a_ell_closed(ell, x) == a_ell_oracle(ell, x), tag);
      bc.record(b_ell_oracle(ell, x, y) == c_ell_oracle(ell, times_transpose(x, y)), tag + " y=" + wstr(y));
      cd.record(c_ell_oracle(ell, x) == d_ell<Rational>(ell, x.trace(), Rational(-x.det())), tag);
    }
  }
  std::printf("  a_l closed = enumeration: %llu cases, %llu failures %s\n", (unsigned long long)closed.cases,
              (unsigned long long)closed.failures, closed.first.c_str());
  std::printf("  b_l = c_l(x y^T): %llu cases, %llu failures %s\n", (unsigned long long)bc.cases,
              (unsigned long long)bc.failures, bc.first.c_str());
  std::printf("  c_l = d_l(tr, -det): %llu cases, %llu failures %s\n", (unsigned long long)cd.cases,
              (unsigned long long)cd.failures, cd.first.c_str());
  return closed.failures + bc.failures + cd.failures == 0;
}

bool criterion_inequalities() {
  Rng rng(2002);
  const std::vector<Rational> zs = {frac(1, 16), frac(1, 8), frac(1, 4), frac(1, 2), 1, 2, 4};
  Tally two;
  for (unsigned ell = 2; ell <= 8; ++ell) {
    for (int s = 0; s < 20; ++s) {
      const WMatrix w = random_w(rng);
      const LaurentPoly al = a_ell_closed(ell, w);
      const LaurentPoly a2 = a_ell_closed(2, w);
      for (const Rational& z : zs) {
        const Rational lhs = al.evaluate(z);
        const Rational rhs = a2.evaluate(z);
        two.record(lhs > 0 && rhs > 0 && lhs * lhs <= pow(rhs, ell),
                   "l=" + std::to_string(ell) + " w=" + wstr(w) + " z=" + to_fraction_string(z));
      }
    }
  }
  const std::vector<Rational> hz = {frac(1, 8), frac(1, 4), frac(1, 2), frac(3, 4), 1, 2, 4, 8};
  Tally hyp;
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        const LaurentPoly h = hyp_pgf(a, b, n), g = bin_pgf(a, b, n);
        for (const Rational& z : hz) {
          hyp.record(h.evaluate(z) <= g.evaluate(z),
                     "a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" + std::to_string(n));
        }
      }
    }
  }
  std::printf("  a_l^2 <= a_2^l: %llu cases, %llu violations %s\n", (unsigned long long)two.cases,
              (unsigned long long)two.failures, two.first.c_str());
  std::printf("  Hyp <= Bin: %llu cases, %llu violations %s\n", (unsigned long long)hyp.cases,
              (unsigned long long)hyp.failures, hyp.first.c_str());
  return two.failures + hyp.failures == 0;
}

bool criterion_distribution() {
  Tally t;
  for (const char* text : {"2/5,1/10,1/5,3/10", "1/2,0,0,1/2", "1/10,1/20,1/20,4/5"}) {
    const ExactPVec p = parse_pvec(text);
    for (const Permutation& pi : oracle::all_perms(4)) {
      const auto law = oracle::exact_joint(pi, p);
      BiPoly expect;
      for (const auto& [key, prob] : law) expect.add_term(key.first, key.second, prob);
      t.record(joint_pmf(cycle_type(lift(pi)), p) == expect, std::string("p=") + text + " pi=" + pi.serialize());
    }
  }
  std::printf("  n=4, 24 permutations x 3 p-vectors, 4096 outcomes each: %llu cases, %llu mismatches %s\n",
              (unsigned long long)t.cases, (unsigned long long)t.failures, t.first.c_str());
  return t.failures == 0;
}

bool criterion_soundness() {
  Tally opt, dense;
  double worst_opt = 0, worst_dense = 0;  // largest exact/bound ratio seen
  for (const ExactPVec& p : oracle::positive_grid()) {
    const PVec pd = p.to_double();
    const WMatrixD w = weights_from(pd);
    for (std::size_t t_tilde = 2; t_tilde <= 12; ++t_tilde) {
      for (const auto& parts : oracle::partitions(t_tilde, 2)) {
        const double exact = to_double(tilde_A(oracle::census(parts), weights_from(p)).lower_tail(0));
        const double bound = opt_z_bound(w, t_tilde);
        worst_opt = std::max(worst_opt, exact / bound);
        opt.record(bound * (1 + 1e-12) >= exact, format_pvec(p) + " t~=" + std::to_string(t_tilde));
      }
    }
    for (std::size_t n = 2; n <= 7; ++n) {
      const double z2 = dense_z2(n, pd);
      for (const Permutation& pi : oracle::cycle_type_reps(n)) {
        const CycleType ct = cycle_type(lift(pi));
        const double exact = to_double(tilde_A(ct, weights_from(p)).lower_tail(0));
        const double bound = std::pow(z2, static_cast<double>(oracle::moved(pi)));
        worst_dense = std::max(worst_dense, exact / bound);
        dense.record(bound * (1 + 1e-12) >= exact, format_pvec(p) + " n=" + std::to_string(n) + " pi=" + pi.serialize());
      }
    }
  }
  std::printf("  opt_z over every census with t~ <= 12: %llu cases, %llu violations, max exact/bound %.4g %s\n",
              (unsigned long long)opt.cases, (unsigned long long)opt.failures, worst_opt, opt.first.c_str());
  std::printf("  dense_z2^n~ over every permutation type, n <= 7: %llu cases, %llu violations, max exact/bound %.4g %s\n",
              (unsigned long long)dense.cases, (unsigned long long)dense.failures, worst_dense, dense.first.c_str());
  return opt.failures + dense.failures == 0;
}

bool criterion_intersection_and_mean() {
  Tally aut;
  const std::vector<PVec> ps = {{0.3, 0.1, 0.1, 0.5}, {0.5, 0, 0, 0.5}, {0.2, 0.2, 0.2, 0.4}, {0.6, 0.05, 0.15, 0.2}};
  for (std::uint64_t k = 0; k < 500; ++k) {
    const CorrelatedPair cp = sample_pair(5, ps[k % ps.size()], 7000 + k);
    const Graph both = intersection(cp.ga, cp.gb);
    for (const Permutation& pi : oracle::all_perms(5)) {
      if (oracle::cost(both, both, pi) != 0) continue;
      aut.record(oracle::delta(pi, cp.ga, cp.gb) <= 0, "seed=" + std::to_string(7000 + k) + " pi=" + pi.serialize());
    }
  }
  std::printf("  delta <= 0 on Aut(Ga & Gb), 500 instances at n=5: %llu automorphisms, %llu violations %s\n",
              (unsigned long long)aut.cases, (unsigned long long)aut.failures, aut.first.c_str());

  bool mean_ok = true;
  const std::vector<Permutation> taus = {Permutation::transposition(5, 0, 1), Permutation::from_cycles(5, {{0, 1, 2}}),
                                         Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                         Permutation::from_cycles(5, {{0, 1}, {2, 3}})};
  Rng rng(3003);
  for (const PVec& p : ps) {
    for (const Permutation& pi : taus) {
      const Permutation tau = lift(pi);
      std::size_t t_tilde = 0;
      for (std::size_t e = 0; e < tau.size(); ++e) t_tilde += tau(e) != e;
      const double expect = static_cast<double>(t_tilde) * (p.p00 * p.p11 - p.p01 * p.p10);
      const int reps = 100000;
      double sum = 0, sq = 0;
      for (int r = 0; r < reps; ++r) {
        const CorrelatedPair cp = sample_pair(5, p, rng);
        const double d = static_cast<double>(delta_stat(tau, cp.ga, cp.gb));
        sum += d;
        sq += d * d;
      }
      const double mean = sum / reps;
      const double se = std::sqrt(std::max(0.0, sq / reps - mean * mean) / reps);
      const double z = se > 0 ? (mean - expect) / se : (mean == expect ? 0.0 : INFINITY);
      const bool ok = std::abs(z) <= 4;
      mean_ok = mean_ok && ok;
      std::printf("  mean delta p=%s pi=%s: empirical %.5f, exact %.5f, z=%.2f %s\n", format_pvec(p).c_str(),
                  pi.serialize().c_str(), mean, expect, z, ok ? "" : "<-- outside 4 SE");
    }
  }
  return aut.failures == 0 && mean_ok;
}

const char* kPhaseConfig = R"({"n": 9, "trials": 500, "seed": 20240601,
  "grid": {"kind": "c", "c": [0.25, 0.5, 1, 2, 3, 4], "p01": 0, "p10": 0}})";

struct PhaseRun {
  SweepResult result;
  std::string csv;
};

PhaseRun& phase_run() {
  static PhaseRun run = [] {
    const SweepConfig cfg = parse_sweep_config(kPhaseConfig);
    PhaseRun r;
    r.result = run_sweep(cfg);
    r.csv = sweep_csv(r.result.cells);
    return r;
  }();
  return run;
}

const double kCs[] = {0.25, 0.5, 1, 2, 3, 4};

bool criterion_phase() {
  const auto& cells = phase_run().result.cells;
  std::printf("  %5s %9s %12s %10s %12s %11s\n", "c", "p11", "strict_rate", "mean_eta", "mean_q", "mean_aut");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::printf("  %5g %9.5f %12.3f %10.4f %12.1f %11.1f\n", kCs[i], cells[i].cell.p.p11, cells[i].strict_rate,
                cells[i].mean_eta, cells[i].mean_q, cells[i].mean_aut);
  }
  const bool low = cells.front().strict_rate <= 0.2;
  const bool high = cells.back().strict_rate >= 0.8;
  const bool q = cells.front().mean_q > cells.back().mean_q;
  std::printf("  strict_rate(c=0.25) = %.3f <= 0.2: %s\n", cells.front().strict_rate, low ? "yes" : "no");
  std::printf("  strict_rate(c=4) = %.3f >= 0.8: %s\n", cells.back().strict_rate, high ? "yes" : "no");
  std::printf("  mean_q(c=0.25) = %.1f > mean_q(c=4) = %.1f: %s\n", cells.front().mean_q, cells.back().mean_q,
              q ? "yes" : "no");
  return low && high && q;
}

bool criterion_converse() {
  const auto& cells = phase_run().result.cells;
  bool ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double k = static_cast<double>(cells[i].trials);
    const double limit = cells[i].mean_inv_q + 3 * cells[i].sd_inv_q / std::sqrt(k);
    const bool cell_ok = cells[i].strict_rate <= limit;
    ok = ok && cell_ok;
    std::printf("  c=%g: strict_rate %.3f <= mean(1/|Q|) %.4f + 3 sd/sqrt(k) = %.4f %s\n", kCs[i],
                cells[i].strict_rate, cells[i].mean_inv_q, limit, cell_ok ? "" : "<-- violated");
  }
  return ok;
}

bool criterion_determinism() {
  const std::string& one = phase_run().csv;
  bool ok = true;
  for (std::size_t threads : {2u, 3u}) {
    SweepConfig cfg = parse_sweep_config(kPhaseConfig);
    cfg.threads = threads;
    const bool same = sweep_csv(run_sweep(cfg).cells) == one;
    std::printf("  threads=1 vs threads=%zu: %s\n", threads, same ? "byte-identical" : "DIFFERENT");
    ok = ok && same;
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<bool()> run;
  };
  const std::vector<Criterion> all = {
      {1, "cycle generating-function identities, l <= 8, 20 weight samples, exact", criterion_identities},
      {2, "two-cycle domination and Hyp <= Bin", criterion_inequalities},
      {3, "joint pmf of (M~, delta) equals enumeration at n = 4", criterion_distribution},
      {4, "opt-z and dense bounds dominate exact tails", criterion_soundness},
      {5, "intersection automorphisms and mean of delta", criterion_intersection_and_mean},
      {6, "threshold phase experiment at n = 9", criterion_phase},
      {7, "strict rate at most E[1/|Q|] + 3 sigma", criterion_converse},
      {8, "sweep CSV independent of thread count", criterion_determinism},
  };
  std::vector<std::pair<int, bool>> verdicts;
  for (const Criterion& c : all) {
    std::printf("criterion %d: %s\n", c.id, c.title);
    std::fflush(stdout);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("  error: %s\n", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%.1f s)\n\n", ok ? "PASS" : "FAIL", c.id, secs);
    std::fflush(stdout);
    verdicts.emplace_back(c.id, ok);
  }
  bool all_ok = true;
  std::printf("summary:\n");
  for (const auto& [id, ok] : verdicts) {
    std::printf("  %s %d\n", ok ? "PASS" : "FAIL", id);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
