#include "eralign/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/hypergeometric.hpp>
#include "json.hpp"

#include "eralign/graph.hpp"

namespace eralign {

namespace {

using ordered_json = nlohmann::ordered_json;

const double kE2 = std::exp(2.0);

double ln(std::size_t n) { return std::log(static_cast<double>(n)); }

void require_n(std::size_t n) {
  if (n < 2) throw ParameterError("bounds need n >= 2");
}

double gap_sq(const PVec& p) {
  const double d = std::sqrt(p.p11 * p.p00) - std::sqrt(p.p01 * p.p10);
  return d * d;
}

Condition at_least(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, lhs - rhs, lhs >= rhs};
}

Condition at_most(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, rhs - lhs, lhs <= rhs};
}

ordered_json pairs_json(const std::vector<std::pair<std::string, double>>& kv) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

}  // namespace

void BoundReport::set(double formula) {
  if (std::isnan(formula)) {
    invalidate();
    return;
  }
  raw = formula;
  value = std::min(formula, 1.0);
  uninformative = formula >= 1.0;
}

void BoundReport::invalidate() {
  valid = false;
  raw = 1.0;
  value = 1.0;
  uninformative = true;
}

double BoundReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  throw std::out_of_range("bound report has no detail '" + key + "'");
}

std::string BoundReport::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["value"] = value;
  j["raw"] = raw;
  j["valid"] = valid;
  j["uninformative"] = uninformative;
  j["inputs"] = pairs_json(inputs);
  j["details"] = pairs_json(details);
  return j.dump();
}

double opt_z_optimizer(const WMatrixD& w) {
  if (!(w.w00 > 0 && w.w01 > 0 && w.w10 > 0 && w.w11 > 0)) {
    throw DomainError("opt-z bound needs strictly positive weights");
  }
  if (!(w.w01 * w.w10 < w.w00 * w.w11)) throw DomainError("opt-z bound needs w01*w10 < w00*w11");
  return std::sqrt(w.w01 * w.w10 / (w.w00 * w.w11));
}

double opt_z_bound(const WMatrixD& w, std::uint64_t t_tilde) {
  opt_z_optimizer(w);  // domain checks
  const double d = std::sqrt(w.w00 * w.w11) - std::sqrt(w.w01 * w.w10);
  const double u = w.sum();
  return std::pow(u * u - 2 * d * d, static_cast<double>(t_tilde) / 2);
}

double dense_z2(std::size_t n, const PVec& p) {
  require_n(n);
  p.validate();
  if (!p.positively_correlated()) throw DomainError("dense bound needs p01*p10 < p11*p00");
  return std::exp(-0.5 * static_cast<double>(n - 2) * gap_sq(p));
}

Condition ach_one_check(std::size_t n, const PVec& p, double margin) {
  require_n(n);
  if (margin < 0) throw ParameterError("margin must be nonnegative");
  Condition c = at_least("ach_one", gap_sq(p), (2 * ln(n) + margin) / static_cast<double>(n));
  c.holds = c.holds && p.positively_correlated();
  return c;
}

BoundReport sparse_bound(std::size_t n, const PVec& p, std::uint64_t m_tilde, std::uint64_t t_tilde,
                         std::uint64_t n_tilde) {
  require_n(n);
  p.validate();
  BoundReport r;
  r.name = "sparse_bound";
  r.inputs = {{"n", double(n)},         {"p11", p.p11},          {"p10", p.p10},
              {"p01", p.p01},           {"p00", p.p00},          {"m_tilde", double(m_tilde)},
              {"t_tilde", double(t_tilde)}, {"n_tilde", double(n_tilde)}};
  if (t_tilde == 0) {
    // tau is the identity: delta = 0 surely.
    r.set(m_tilde == 0 ? 1.0 : 0.0);
    return r;
  }
  if (!(p.p11 > 0 && p.p11 < 1)) {
    r.invalidate();
    return r;
  }
  const double mt = static_cast<double>(m_tilde);
  const double tt = static_cast<double>(t_tilde);
  const double q = 1 - p.p11;
  const double p11_prime = p.p11 / q;
  const double w_star = (mt * ln(n) / tt + p.p11) / p11_prime;
  const double root = std::sqrt(p.p00 * p.p11 * w_star) - std::sqrt(p.p01 * p.p10);
  const double u = q + p.p11 * w_star;
  const double alpha = u * u - 2 * root * root;
  r.details = {{"w_star", w_star}, {"alpha", alpha}};
  if (w_star * p.p11 * p.p00 < p.p01 * p.p10) {
    r.invalidate();
    return r;
  }
  // 0^0 = 1 for the first factor.
  const double first = m_tilde == 0 ? 0.0 : mt * std::log(mt / (tt * p11_prime * w_star));
  const double second = tt / 2 * std::log(alpha / (q * q));
  r.set(std::exp(first + second));
  return r;
}

BoundReport m_ub(std::size_t n, std::uint64_t m, const PVec& p, std::uint64_t n_tilde) {
  require_n(n);
  p.validate();
  BoundReport r;
  r.name = "m_ub";
  r.inputs = {{"n", double(n)},     {"m", double(m)},     {"p11", p.p11},
              {"p10", p.p10},       {"p01", p.p01},       {"p00", p.p00},
              {"n_tilde", double(n_tilde)}};
  const std::uint64_t t = pair_count(n);
  if (n_tilde < 2 || n_tilde > n || m > t) {
    r.invalidate();
    return r;
  }
  const double nn = static_cast<double>(n);
  const double eps2 =
      std::exp(-(kE2 + 1) * static_cast<double>(m) * static_cast<double>(n_tilde) * (nn - 2) / (nn * (nn - 1)));

  // Every t~ a permutation moving n_tilde vertices can have: the fixed pairs
  // are those inside the fixed vertices plus one per 2-cycle.
  const std::uint64_t inside = pair_count(n - n_tilde);
  double eps1 = 0;
  double worst_t_tilde = 0;
  bool any_invalid = false;
  for (std::uint64_t k = 0; 2 * k <= n_tilde; ++k) {
    if (n_tilde - 2 * k == 1) continue;
    const std::uint64_t t_tilde = t - inside - k;
    const double m_star = kE2 * static_cast<double>(m) * static_cast<double>(t_tilde) / static_cast<double>(t);
    boost::math::hypergeometric_distribution<double> hyp(static_cast<unsigned>(t_tilde), static_cast<unsigned>(m),
                                                         static_cast<unsigned>(t));
    const std::uint64_t lo = m > t - t_tilde ? m - (t - t_tilde) : 0;
    const std::uint64_t hi = std::min<std::uint64_t>({m, t_tilde, static_cast<std::uint64_t>(std::floor(m_star))});
    double sum = 0;
    for (std::uint64_t mt = lo; mt <= hi; ++mt) {
      const BoundReport s = sparse_bound(n, p, mt, t_tilde, n_tilde);
      any_invalid = any_invalid || !s.valid;
      sum += boost::math::pdf(hyp, static_cast<unsigned>(mt)) * s.value;
    }
    if (sum > eps1) {
      eps1 = sum;
      worst_t_tilde = static_cast<double>(t_tilde);
    }
  }
  r.details = {{"eps1", eps1},
               {"eps2", eps2},
               {"worst_t_tilde", worst_t_tilde},
               {"sparse_terms_capped_invalid", any_invalid ? 1.0 : 0.0}};
  r.set(eps1 + eps2);
  return r;
}

double union_compose(std::size_t n, double z) {
  const double nn = static_cast<double>(n);
  return 3 * nn * nn * z * z;
}

BoundReport union_report(std::size_t n, double z) {
  BoundReport r;
  r.name = "union_compose";
  r.inputs = {{"n", double(n)}, {"z", z}};
  r.details = {{"nz", double(n) * z}};
  r.set(union_compose(n, z));
  return r;
}

BoundReport m_average(std::size_t n, const PVec& p, double z8, double z9, double eps) {
  require_n(n);
  p.validate();
  BoundReport r;
  r.name = "m_average";
  r.inputs = {{"n", double(n)}, {"p11", p.p11}, {"z8", z8}, {"z9", z9}, {"eps", eps}};
  if (!(z8 > 0 && z8 <= 1 && z9 > 0 && eps > 0)) {
    r.invalidate();
    return r;
  }
  const std::uint64_t t = pair_count(n);
  const double first = z9 * std::pow(1 + p.p11 * (z8 - 1), static_cast<double>(t));
  const double cut = std::floor((1 + eps) * static_cast<double>(t) * p.p11);
  double tail = 0;
  if (cut < static_cast<double>(t)) {
    const boost::math::binomial_distribution<double> bin(static_cast<double>(t), p.p11);
    tail = boost::math::cdf(boost::math::complement(bin, cut));
  }
  r.details = {{"main_term", first}, {"tail", tail}};
  r.set(first + tail);
  return r;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::converse: return "converse";
    case Region::achievable_dense: return "achievable-dense";
    case Region::achievable_sparse: return "achievable-sparse";
    case Region::gap: return "gap";
    case Region::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string RegionVerdict::to_json() const {
  ordered_json j;
  j["region"] = to_string(region);
  j["correlated"] = correlated;
  ordered_json conds = ordered_json::array();
  for (const Condition& c : conditions) {
    conds.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"holds", c.holds}});
  }
  j["conditions"] = conds;
  return j.dump();
}

RegionVerdict classify(std::size_t n, const PVec& p, const ClassifyConstants& k) {
  require_n(n);
  p.validate();
  if (k.margin < 0 || k.c_p11_sparse < 0 || k.c_p_sparse < 0 || k.c_p_corr < 0) {
    throw ParameterError("classifier margins and constants must be nonnegative");
  }
  const double nn = static_cast<double>(n);
  const double l = ln(n);
  RegionVerdict v;
  v.correlated = p.positively_correlated();
  const double diag = p.p11 * p.p00;
  const double ratio = diag > 0 ? p.p01 * p.p10 / diag : std::numeric_limits<double>::infinity();

  const Condition main = at_least("p11_main", p.p11, (l + k.margin) / nn);
  const Condition p11_sparse = at_most("p11_sparse", p.p11, k.c_p11_sparse / l);
  const Condition p_sparse = at_most("p_sparse", p.p01 + p.p10, k.c_p_sparse / l);
  const Condition p_corr = at_most("p_corr", ratio, k.c_p_corr / (l * l * l));
  const Condition dense = ach_one_check(n, p, k.margin);
  const Condition converse = at_most("converse_p11", p.p11, (l - k.margin) / nn);
  v.conditions = {main, p11_sparse, p_sparse, p_corr, dense, converse};

  if (!v.correlated) {
    v.region = Region::unclassified;
  } else if (main.holds && p11_sparse.holds && p_sparse.holds && p_corr.holds) {
    v.region = Region::achievable_sparse;
  } else if (dense.holds) {
    v.region = Region::achievable_dense;
  } else if (converse.holds) {
    v.region = Region::converse;
  } else {
    v.region = Region::gap;
  }
  return v;
}

}  // namespace eralign
