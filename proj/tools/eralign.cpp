// Command-line front end. Exit codes: 0 ok, 1 failed check, 2 usage/config error.

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eralign/bounds.hpp"
#include "eralign/estimator.hpp"
#include "eralign/experiment.hpp"
#include "eralign/model.hpp"
#include "eralign/plot.hpp"
#include "eralign/verify.hpp"

using namespace eralign;
using ordered_json = nlohmann::ordered_json;

namespace {

// "@path" reads the argument from a file.
std::string argument_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::string text = read_text_file(arg.substr(1));
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return text;
}

Graph graph_arg(const std::string& arg) { return Graph::parse(argument_text(arg)); }

std::string big(const BigInt& v) { return v.get_str(); }

int cmd_gen(std::size_t n, const std::string& p_text, std::uint64_t seed) {
  const PVec p = parse_pvec(p_text).to_double();
  Rng rng(seed);
  const CorrelatedPair pair = sample_pair(n, p, rng);
  const Permutation planted = uniform_permutation(n, rng);
  ordered_json j;
  j["n"] = n;
  j["p"] = p_text;
  j["seed"] = seed;
  j["ga"] = pair.ga.serialize();
  j["gb"] = pair.gb.serialize();
  j["planted"] = planted.serialize();
  j["gc"] = anonymize(pair.ga, planted).serialize();
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_align(const std::string& gc_arg, const std::string& gb_arg, const std::string& planted_arg,
              std::size_t cap) {
  const Graph gc = graph_arg(gc_arg);
  const Graph gb = graph_arg(gb_arg);
  std::optional<Permutation> planted;
  if (!planted_arg.empty()) planted = Permutation::parse(argument_text(planted_arg));
  const AlignmentResult r = map_estimate(gc, gb, planted, cap);
  ordered_json j;
  j["best_perm"] = r.best_perm.serialize();
  j["min_delta_hamming"] = r.min_delta_hamming;
  j["min_ties"] = big(r.min_ties);
  j["q_size"] = big(r.q_size);
  if (r.strict_success) j["strict_success"] = *r.strict_success;
  if (r.eta) j["eta"] = to_fraction_string(*r.eta);
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_aut(const std::string& graph_arg_text, std::size_t cap) {
  const Graph g = graph_arg(graph_arg_text);
  ordered_json j;
  j["n"] = g.n();
  j["edges"] = g.edge_count();
  j["automorphisms"] = big(automorphism_count(g, cap));
  j["isolated"] = isolated_count(g);
  std::cout << j.dump() << '\n';
  return 0;
}

struct SweepArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> trials;
  std::string plot;
};

int cmd_sweep(const SweepArgs& a) {
  SweepConfig cfg = parse_sweep_config(read_text_file(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (!a.out.empty()) cfg.out = a.out;
  if (a.threads) cfg.threads = *a.threads;
  if (a.trials) cfg.trials = *a.trials;
  if (cfg.threads < 1 || cfg.trials < 1) throw ConfigError("threads and trials must be at least 1");
  const SweepResult result = run_sweep(cfg);
  const std::string csv = sweep_csv(result.cells);
  if (cfg.out.empty()) {
    std::cout << csv;
  } else {
    write_text_file(cfg.out, csv);
  }
  if (!a.plot.empty()) write_text_file(a.plot, render_svg(parse_sweep_csv(csv)));
  return 0;
}

int cmd_verify(const VerifyOptions& opt) {
  bool ok = true;
  for (const CheckStatus& s : verify_gf(opt)) {
    ok = ok && s.passed();
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name;
    if (s.ell) std::cout << " l=" << s.ell;
    std::cout << " cases=" << s.cases;
    if (!s.passed()) std::cout << " failures=" << s.failures << " first: " << s.first_failure;
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

struct BoundsArgs {
  std::size_t n = 0;
  std::string p;
  std::optional<std::uint64_t> t_tilde, m_tilde, n_tilde, m;
  std::optional<double> z9, z8;
  double eps = 0.5;
};

// A report whose formula threw a domain error is printed as invalid, inputs kept.
BoundReport guarded(BoundReport r, const std::function<void(BoundReport&)>& fill) {
  try {
    fill(r);
  } catch (const DomainError&) {
    r.details.clear();
    r.invalidate();
  }
  return r;
}

BoundReport named(std::string name, std::vector<std::pair<std::string, double>> inputs) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  return r;
}

int cmd_bounds(const BoundsArgs& a) {
  const PVec p = parse_pvec(a.p).to_double();
  const double nn = static_cast<double>(a.n);
  const std::vector<std::pair<std::string, double>> base = {
      {"n", nn}, {"p11", p.p11}, {"p10", p.p10}, {"p01", p.p01}, {"p00", p.p00}};
  auto print = [](const BoundReport& r) { std::cout << r.to_json() << '\n'; };

  print(guarded(named("dense_z2", base), [&](BoundReport& r) { r.set(dense_z2(a.n, p)); }));
  print(guarded(named("union_dense", base), [&](BoundReport& r) {
    const BoundReport u = union_report(a.n, dense_z2(a.n, p));
    r.inputs.emplace_back("z", u.inputs.back().second);
    r.details = u.details;
    r.set(u.raw);
  }));
  if (a.t_tilde) {
    auto inputs = base;
    inputs.emplace_back("t_tilde", double(*a.t_tilde));
    print(guarded(named("opt_z", inputs), [&](BoundReport& r) {
      const WMatrixD w = weights_from(p);
      r.details = {{"z1", opt_z_optimizer(w)}};
      r.set(opt_z_bound(w, *a.t_tilde));
    }));
  }
  if (a.t_tilde && a.m_tilde) {
    print(sparse_bound(a.n, p, *a.m_tilde, *a.t_tilde, a.n_tilde.value_or(0)));
  }
  if (a.m && a.n_tilde) print(m_ub(a.n, *a.m, p, *a.n_tilde));
  if (a.z9) print(m_average(a.n, p, a.z8.value_or(nn / (nn + 4)), *a.z9, a.eps));
  return 0;
}

int cmd_classify(std::size_t n, const std::string& p_text, const ClassifyConstants& k) {
  std::cout << classify(n, parse_pvec(p_text).to_double(), k).to_json() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlated Erdos-Renyi graph alignment: sampling, exhaustive MAP, bounds and sweeps"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string p_text;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultEnumerationCap;

  auto* gen = app.add_subcommand("gen", "sample a correlated pair and a planted permutation");
  gen->add_option("--n", n, "vertices")->required();
  gen->add_option("--p", p_text, "p11,p10,p01,p00")->required();
  gen->add_option("--seed", seed, "generator seed");

  std::string gc_arg, gb_arg, planted_arg;
  auto* align = app.add_subcommand("align", "exhaustive MAP alignment of two graphs");
  align->add_option("--gc", gc_arg, "anonymized graph text (or @file)")->required();
  align->add_option("--gb", gb_arg, "reference graph text (or @file)")->required();
  align->add_option("--planted", planted_arg, "planted permutation, for scoring only");
  align->add_option("--cap", cap, "largest n to enumerate");

  std::string graph_text;
  auto* aut = app.add_subcommand("aut", "count automorphisms and isolated vertices");
  aut->add_option("--graph", graph_text, "graph text (or @file)")->required();
  aut->add_option("--cap", cap, "largest n to enumerate");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a p-grid");
  sweep->add_option("--config", sweep_args.config, "JSON config file")->required();
  sweep->add_option("--seed", sweep_args.seed, "master seed (overrides config)");
  sweep->add_option("--out", sweep_args.out, "CSV output path (overrides config; stdout if unset)");
  sweep->add_option("--threads", sweep_args.threads, "worker threads (overrides config)");
  sweep->add_option("--trials", sweep_args.trials, "trials per cell (overrides config)");
  sweep->add_option("--plot", sweep_args.plot, "also write an SVG plot here");

  std::string csv_path, svg_path;
  auto* plot = app.add_subcommand("plot", "render a sweep CSV as SVG");
  plot->add_option("--csv", csv_path, "sweep CSV")->required();
  plot->add_option("--out", svg_path, "SVG output path")->required();

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify-gf", "check the generating-function identities");
  verify->add_option("--depth", verify_opt.depth, "largest cycle length (<= 8)");
  verify->add_option("--samples", verify_opt.samples, "random weight matrices per length");
  verify->add_option("--seed", verify_opt.seed, "sampling seed");
  verify->add_flag("--mutate", verify_opt.mutate, "negative control: corrupt the closed form");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "evaluate bounds as JSON lines");
  bounds->add_option("--n", bounds_args.n, "vertices")->required();
  bounds->add_option("--p", bounds_args.p, "p11,p10,p01,p00")->required();
  bounds->add_option("--t-tilde", bounds_args.t_tilde, "non-fixed pairs");
  bounds->add_option("--m-tilde", bounds_args.m_tilde, "(1,1) labels among non-fixed pairs");
  bounds->add_option("--n-tilde", bounds_args.n_tilde, "moved vertices");
  bounds->add_option("--m", bounds_args.m, "intersection edge count");
  bounds->add_option("--z8", bounds_args.z8, "averaging base (default n/(n+4))");
  bounds->add_option("--z9", bounds_args.z9, "averaging prefactor; enables m_average");
  bounds->add_option("--eps", bounds_args.eps, "averaging tail slack");

  ClassifyConstants constants;
  auto* cls = app.add_subcommand("classify", "place (n, p) in the sparse, dense, converse or gap region");
  cls->add_option("--n", n, "vertices")->required();
  cls->add_option("--p", p_text, "p11,p10,p01,p00")->required();
  cls->add_option("--margin", constants.margin, "replaces each omega(1)");
  cls->add_option("--c-p11-sparse", constants.c_p11_sparse, "p11 <= c / ln n");
  cls->add_option("--c-p-sparse", constants.c_p_sparse, "p01 + p10 <= c / ln n");
  cls->add_option("--c-p-corr", constants.c_p_corr, "p01 p10 / (p11 p00) <= c / (ln n)^3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(n, p_text, seed);
    if (*align) return cmd_align(gc_arg, gb_arg, planted_arg, cap);
    if (*aut) return cmd_aut(graph_text, cap);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*plot) {
      emit_plot(csv_path, svg_path);
      return 0;
    }
    if (*verify) return cmd_verify(verify_opt);
    if (*bounds) return cmd_bounds(bounds_args);
    if (*cls) return cmd_classify(n, p_text, constants);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 2;
  } catch (const CsvParseError& e) {
    std::cerr << "csv error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
