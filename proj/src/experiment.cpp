#include "eralign/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "eralign/estimator.hpp"
#include "eralign/model.hpp"

namespace eralign {

TrialResult run_trial(std::size_t n, const PVec& p, std::uint64_t seed, std::size_t cap) {
  check_enumeration_cap(n, cap);
  p.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  const CorrelatedPair pair = sample_pair(n, p, rng);
  const Permutation planted = uniform_permutation(n, rng);
  const Graph gc = anonymize(pair.ga, planted);

  const ScanReport scan_report = scan(gc, pair.gb, planted, n >= 2, cap);
  const Graph both = intersection(pair.ga, pair.gb);

  TrialResult r;
  r.seed = seed;
  r.planted = planted;
  r.estimate = scan_report.best;
  const bool planted_optimal = *scan_report.planted_hamming == scan_report.min_hamming;
  r.strict_success = planted_optimal && scan_report.min_ties == 1;
  r.q_size = scan_report.within_planted;
  r.eta = planted_optimal ? 1.0 / static_cast<double>(r.q_size) : 0.0;
  if (scan_report.runner_up_hamming) {
    // The cost of planted o sigma is Hamming(ga o l(sigma), gb).
    r.min_delta_nonplanted = (*scan_report.runner_up_hamming - *scan_report.planted_hamming) / 2;
  }
  r.m = both.edge_count();
  r.aut_intersection = automorphism_count_u64(both, cap);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

using nlohmann::json;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

std::vector<double> number_list(const json& grid, const char* key) {
  if (!grid.contains(key) || !grid.at(key).is_array() || grid.at(key).empty()) {
    throw ConfigError(std::string("grid needs a nonempty list '") + key + "'");
  }
  std::vector<double> out;
  for (const json& v : grid.at(key)) {
    if (!v.is_number()) throw ConfigError(std::string("grid list '") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

void add_cell(SweepConfig& cfg, std::size_t n, const PVec& p, const std::string& where) {
  if (!p.is_valid()) {
    throw ConfigError("grid cell " + where + " at n=" + std::to_string(n) + " gives an invalid p vector (" +
                      format_pvec(p) + ")");
  }
  cfg.cells.push_back({n, p});
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  SweepConfig cfg;
  if (!j.contains("n")) throw ConfigError("config needs 'n'");
  if (j.at("n").is_array()) {
    for (const json& v : j.at("n")) {
      if (!v.is_number_unsigned()) throw ConfigError("'n' entries must be nonnegative integers");
      cfg.ns.push_back(v.get<std::size_t>());
    }
  } else if (j.at("n").is_number_unsigned()) {
    cfg.ns.push_back(j.at("n").get<std::size_t>());
  } else {
    throw ConfigError("'n' must be an integer or a list of integers");
  }
  if (cfg.ns.empty()) throw ConfigError("'n' list is empty");
  cfg.trials = get_or<std::size_t>(j, "trials", 1);
  cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
  cfg.out = get_or<std::string>(j, "out", "");
  cfg.threads = get_or<std::size_t>(j, "threads", 1);
  cfg.cap = get_or<std::size_t>(j, "cap", kDefaultEnumerationCap);
  if (cfg.trials < 1) throw ConfigError("'trials' must be at least 1");
  if (cfg.threads < 1) throw ConfigError("'threads' must be at least 1");
  for (std::size_t n : cfg.ns) {
    if (n < 1) throw ConfigError("'n' must be at least 1");
    if (n > cfg.cap) {
      throw ConfigError("n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cfg.cap));
    }
  }

  if (!j.contains("grid") || !j.at("grid").is_object()) throw ConfigError("config needs a 'grid' object");
  const json& grid = j.at("grid");
  const std::string kind = get_or<std::string>(grid, "kind", "");
  for (std::size_t n : cfg.ns) {
    if (kind == "explicit") {
      if (!grid.contains("pvecs") || !grid.at("pvecs").is_array()) throw ConfigError("explicit grid needs 'pvecs'");
      std::size_t idx = 0;
      for (const json& v : grid.at("pvecs")) {
        const std::string where = "pvecs[" + std::to_string(idx++) + "]";
        if (!v.is_string()) throw ConfigError("grid cell " + where + " must be a string \"p11,p10,p01,p00\"");
        try {
          add_cell(cfg, n, parse_pvec(v.get<std::string>()).to_double(), where);
        } catch (const ParameterError& e) {
          throw ConfigError("grid cell " + where + ": " + e.what());
        }
      }
    } else if (kind == "subsampling") {
      for (double r : number_list(grid, "r")) {
        for (double sa : number_list(grid, "sa")) {
          for (double sb : number_list(grid, "sb")) {
            const std::string where =
                "(r=" + format_double(r) + ", sa=" + format_double(sa) + ", sb=" + format_double(sb) + ")";
            try {
              add_cell(cfg, n, subsampling_to_pvec(BasicSubsamplingParams<double>{r, sa, sb}), where);
            } catch (const ParameterError& e) {
              throw ConfigError("grid cell " + where + ": " + e.what());
            }
          }
        }
      }
    } else if (kind == "c") {
      const double p01 = get_or<double>(grid, "p01", 0.0);
      const double p10 = get_or<double>(grid, "p10", 0.0);
      for (double c : number_list(grid, "c")) {
        const double p11 = c * std::log(static_cast<double>(n)) / static_cast<double>(n);
        add_cell(cfg, n, PVec{p11, p10, p01, 1.0 - p11 - p10 - p01}, "(c=" + format_double(c) + ")");
      }
    } else {
      throw ConfigError("grid 'kind' must be one of explicit, subsampling, c");
    }
  }
  return cfg;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("'trials' must be at least 1");
  SweepResult result;
  result.trials.assign(cfg.cells.size(), std::vector<TrialResult>(cfg.trials));
  const std::size_t total = cfg.cells.size() * cfg.trials;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t cell = task / cfg.trials;
      const std::size_t t = task % cfg.trials;
      try {
        TrialResult r = run_trial(cfg.cells[cell].n, cfg.cells[cell].p, cfg.seed + t, cfg.cap);
        r.cell = cell;
        result.trials[cell][t] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t c = 0; c < cfg.cells.size(); ++c) {
    CellSummary s;
    s.cell = cfg.cells[c];
    s.trials = cfg.trials;
    s.seed = cfg.seed;
    double strict = 0, eta = 0, q = 0, aut = 0, inv = 0, inv_sq = 0;
    for (const TrialResult& r : result.trials[c]) {
      strict += r.strict_success ? 1 : 0;
      eta += r.eta;
      q += static_cast<double>(r.q_size);
      aut += static_cast<double>(r.aut_intersection);
      const double iq = 1.0 / static_cast<double>(r.q_size);
      inv += iq;
      inv_sq += iq * iq;
    }
    const double k = static_cast<double>(cfg.trials);
    s.strict_rate = strict / k;
    s.mean_eta = eta / k;
    s.mean_q = q / k;
    s.mean_aut = aut / k;
    s.mean_inv_q = inv / k;
    s.sd_inv_q = cfg.trials > 1 ? std::sqrt(std::max(0.0, (inv_sq - k * s.mean_inv_q * s.mean_inv_q) / (k - 1))) : 0;
    result.cells.push_back(s);
  }
  return result;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string sweep_csv(const std::vector<CellSummary>& cells) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const CellSummary& s : cells) {
    out << s.cell.n << ',' << format_double(s.cell.p.p11) << ',' << format_double(s.cell.p.p10) << ','
        << format_double(s.cell.p.p01) << ',' << format_double(s.cell.p.p00) << ',' << s.trials << ','
        << format_double(s.strict_rate) << ',' << format_double(s.mean_eta) << ',' << format_double(s.mean_q)
        << ',' << format_double(s.mean_aut) << ',' << s.seed << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace eralign
