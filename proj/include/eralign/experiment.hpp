#pragma once

// Monte Carlo trials of the MAP estimator and parameter sweeps over p-grids.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eralign/permutation.hpp"
#include "eralign/pvec.hpp"

namespace eralign {

/// Malformed sweep configuration or an invalid grid cell.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrialResult {
  std::size_t cell = 0;
  std::uint64_t seed = 0;
  Permutation planted;
  Permutation estimate;
  bool strict_success = false;
  std::uint64_t q_size = 0;  // permutations no worse than the planted one
  double eta = 0;            // 1/q_size when the planted one is optimal, else 0
  std::int64_t min_delta_nonplanted = 0;  // min delta(l(pi); ga, gb) over pi != id
  std::uint64_t m = 0;                    // edges of ga AND gb
  std::uint64_t aut_intersection = 0;     // |Aut(ga AND gb)|
  double wall_seconds = 0;
};

/// Samples (ga, gb) ~ ER(n, p), draws the planted permutation from the same
/// generator, anonymizes ga and runs the exhaustive estimator.
TrialResult run_trial(std::size_t n, const PVec& p, std::uint64_t seed,
                      std::size_t cap = kDefaultEnumerationCap);

struct SweepCell {
  std::size_t n = 0;
  PVec p;
};

struct SweepConfig {
  std::vector<std::size_t> ns;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t threads = 1;
  std::size_t cap = kDefaultEnumerationCap;
  std::vector<SweepCell> cells;  // expanded grid, n-major
};

/// JSON object with keys n (number or list), trials, seed, out, threads and
/// grid, where grid is one of
///   {"kind": "explicit", "pvecs": ["p11,p10,p01,p00", ...]}
///   {"kind": "subsampling", "r": [...], "sa": [...], "sb": [...]}
///   {"kind": "c", "c": [...], "p01": x, "p10": y}   (p11 = c ln n / n)
SweepConfig parse_sweep_config(std::string_view json_text);

struct CellSummary {
  SweepCell cell;
  std::size_t trials = 0;
  double strict_rate = 0;
  double mean_eta = 0;
  double mean_q = 0;
  double mean_aut = 0;
  double mean_inv_q = 0;
  double sd_inv_q = 0;  // sample standard deviation of 1/q_size
  std::uint64_t seed = 0;
};

struct SweepResult {
  std::vector<CellSummary> cells;
  std::vector<std::vector<TrialResult>> trials;  // [cell][trial]
};

/// Trial t of every cell uses seed `cfg.seed + t`. Results are gathered in
/// cell/trial order, so the output does not depend on `cfg.threads`.
SweepResult run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kSweepCsvHeader =
    "n,p11,p10,p01,p00,trials,strict_rate,mean_eta,mean_q,mean_aut,seed";

std::string sweep_csv(const std::vector<CellSummary>& cells);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace eralign
