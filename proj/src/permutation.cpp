#include "eralign/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "eralign/graph.hpp"

namespace eralign {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw ParameterError("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::uint32_t> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t size, std::size_t a, std::size_t b) {
  if (a >= size || b >= size) throw ParameterError("transposition point out of range");
  Permutation p = identity(size);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t size, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images = identity(size).images_;
  std::vector<bool> used(size, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto from = cycle[k];
      if (from >= size || used[from]) throw ParameterError("cycles must be disjoint and in range");
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const { return fixed_points() == size(); }

std::size_t Permutation::fixed_points() const {
  std::size_t f = 0;
  for (std::size_t i = 0; i < size(); ++i) f += images_[i] == i;
  return f;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

std::string Permutation::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::uint32_t> images;
  std::size_t start = 0;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return Permutation(std::move(images));
  while (true) {
    auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == text.npos ? text.npos : comma - start);
    if (item.empty()) throw ParameterError("empty entry in permutation '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParameterError("non-numeric entry in permutation '" + std::string(text) + "'");
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 0xFFFFFFFFULL) throw ParameterError("permutation entry too large");
    }
    images.push_back(static_cast<std::uint32_t>(v));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw ParameterError("cannot compose permutations of different sizes");
  std::vector<std::uint32_t> images(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) images[i] = f(g(i));
  return Permutation(std::move(images));
}

Permutation lift(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<std::uint32_t> images(pair_count(n));
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      images[e] = static_cast<std::uint32_t>(pair_index(pi(i), pi(j), n));
    }
  }
  return Permutation(std::move(images));
}

std::size_t CycleType::count(std::size_t length) const {
  auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

std::size_t CycleType::t_tilde() const {
  std::size_t total = 0;
  for (auto [len, c] : counts) {
    if (len >= 2) total += len * c;
  }
  return total;
}

std::size_t CycleType::domain_size() const {
  std::size_t total = 0;
  for (auto [len, c] : counts) total += len * c;
  return total;
}

CycleType cycle_type(const Permutation& tau) {
  CycleType ct;
  std::vector<bool> visited(tau.size(), false);
  for (std::size_t start = 0; start < tau.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !visited[x]; x = tau(x)) {
      visited[x] = true;
      ++len;
    }
    ++ct.counts[len];
  }
  return ct;
}

BigInt derangements(unsigned k) {
  if (k == 0) return 1;
  BigInt prev2 = 1;  // !0
  BigInt prev1 = 0;  // !1
  for (unsigned i = 2; i <= k; ++i) {
    BigInt cur = BigInt(i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

BigInt count_support(unsigned n, unsigned n_tilde) {
  if (n_tilde > n) throw ParameterError("number of moved points exceeds n");
  return binomial(n, n_tilde) * derangements(n_tilde);
}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("refusing to enumerate S_" + std::to_string(n) + ": n exceeds the enumeration cap of " +
                      std::to_string(cap) + " (raise the cap explicitly to proceed)");
  }
}

PermutationStream::PermutationStream(std::size_t n, std::size_t cap) {
  check_enumeration_cap(n, cap);
  current_ = Permutation::identity(n).images();
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  Permutation out(current_);
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

PermGfSides perm_gf_check(unsigned n, const Rational& z) {
  if (n == 0) throw ParameterError("n must be positive");
  if (z < 0 || z * n >= 1) throw DomainError("perm_gf_check requires 0 <= z < 1/n");
  PermGfSides sides;
  sides.lhs = 0;
  for (unsigned k = 0; k <= n; ++k) sides.lhs += Rational(count_support(n, k)) * pow(z, k);
  Rational nz = z * n;
  sides.rhs = 1 + nz * nz / (1 - nz);
  return sides;
}

T1Bounds t1_bounds_check(const Permutation& pi) {
  T1Bounds r;
  r.n = pi.size();
  r.n_tilde = pi.moved_points();
  r.t = pair_count(r.n);
  CycleType ct = cycle_type(lift(pi));
  r.t1 = ct.t1();
  r.t_tilde = ct.t_tilde();
  const auto fixed = static_cast<unsigned>(r.n - r.n_tilde);
  r.lower = binomial_q(fixed, 2);
  r.upper = r.lower + frac(static_cast<long>(r.n_tilde), 2);
  r.t_tilde_lb = Rational(static_cast<long>(r.n_tilde)) * (static_cast<long>(r.n) - 2) / 2;
  r.t_tilde_ub = Rational(static_cast<long>(r.n * r.n_tilde));
  r.holds = r.lower <= r.t1 && r.t1 <= r.upper && r.t_tilde_lb <= r.t_tilde && r.t_tilde <= r.t_tilde_ub;
  if (r.n >= 2) {
    Rational nu = frac(static_cast<long>(r.n_tilde), static_cast<long>(r.n));
    r.nu_bound = (1 - nu) * (1 - nu) + nu * nu / (static_cast<long>(r.n) - 1);
    r.holds = r.holds && frac(static_cast<long>(r.t1), static_cast<long>(r.t)) <= r.nu_bound;
  } else {
    r.nu_bound = 1;
  }
  return r;
}

}  // namespace eralign
