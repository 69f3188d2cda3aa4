#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "eralign/cyclic.hpp"
#include "eralign/model.hpp"
#include "eralign/pgf.hpp"
#include "support/oracles.hpp"

using namespace eralign;

namespace {

const LaurentPoly kZ = LaurentPoly::z();
const LaurentPoly kZinv = LaurentPoly::monomial(-1);

WMatrix ones() { return {1, 1, 1, 1}; }

WMatrix random_w(Rng& rng) {
  return {oracle::small_rational(rng), oracle::small_rational(rng), oracle::small_rational(rng),
          oracle::small_rational(rng)};
}

// A_{S,tau}(w, z) for tau = l(pi) summed over every labeling pair of [n]'s pairs.
LaurentPoly brute_big_A(const Permutation& pi, const WMatrix& w) {
  const std::size_t n = pi.size();
  const std::size_t t = pair_count(n);
  LaurentPoly out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * t)); ++code) {
    Graph ga(n), gb(n);
    Rational weight = 1;
    for (std::size_t e = 0; e < t; ++e) {
      const int a = static_cast<int>((code >> (2 * e)) & 1U);
      const int b = static_cast<int>((code >> (2 * e + 1)) & 1U);
      ga.set_edge(e, a);
      gb.set_edge(e, b);
      weight *= w.at(a, b);
    }
    out.add_term(oracle::delta(pi, ga, gb), weight);
  }
  return out;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly a = Rational(2) * kZinv + LaurentPoly(12) + Rational(2) * kZ;
  CHECK(a.coeff(-1) == 2);
  CHECK(a.coeff(5) == 0);
  CHECK(a.min_exponent() == -1);
  CHECK(a.max_exponent() == 1);
  CHECK(a.evaluate(Rational(1)) == 16);
  CHECK(a.evaluate(frac(1, 2)) == 17);
  CHECK(a.evaluate(0.5) == doctest::Approx(17.0));
  CHECK(a.lower_tail(0) == 14);
  CHECK((a - a).is_zero());
  CHECK((kZ * kZinv) == LaurentPoly(1));
  CHECK(pow(kZ + LaurentPoly(1), 3) == kZ * kZ * kZ + Rational(3) * kZ * kZ + Rational(3) * kZ + LaurentPoly(1));
  CHECK(pow(a, 0) == LaurentPoly(1));
  // zero coefficients are never stored
  LaurentPoly b = kZ;
  b.add_term(1, -1);
  CHECK(b.is_zero());
  CHECK(b.terms().empty());
}

TEST_CASE("laurent polynomial text form") {
  const LaurentPoly a = Rational(2) * kZinv + LaurentPoly(12) + frac(1, 3) * kZ;
  CHECK(a.to_string() == "-1:2/1 0:12/1 1:1/3");
  CHECK(LaurentPoly::parse(a.to_string()) == a);
  CHECK(LaurentPoly::parse("") == LaurentPoly());
  CHECK_THROWS_AS(LaurentPoly::parse("1:2/1 1:3/1"), ParameterError);
  CHECK_THROWS_AS(LaurentPoly::parse("1:2/1 0:3/1"), ParameterError);
  CHECK_THROWS_AS(LaurentPoly::parse("x:1"), ParameterError);
  CHECK_THROWS_AS(LaurentPoly::parse("0:0/1"), ParameterError);
}

TEST_CASE("a_l by enumeration: small cases") {
  const WMatrix w{frac(1, 2), frac(1, 3), frac(1, 5), frac(1, 7)};
  CHECK(a_ell_oracle(1, w) == LaurentPoly(w.sum()));
  CHECK(a_ell_oracle(2, ones()) == Rational(2) * kZinv + LaurentPoly(12) + Rational(2) * kZ);
  const Rational u = w.sum();
  const LaurentPoly expected = LaurentPoly(u * u) + 2 * w.w00 * w.w11 * (kZ - LaurentPoly(1)) +
                               2 * w.w01 * w.w10 * (kZinv - LaurentPoly(1));
  CHECK(a_ell_oracle(2, w) == expected);
  CHECK_THROWS_AS(a_ell_oracle(11, w), CapExceeded);
  CHECK_THROWS_AS(a_ell_oracle(0, w), ParameterError);
}

TEST_CASE("a_l matches golden polynomials computed independently") {
  std::ifstream in(ERALIGN_GOLDEN_DIR "/a_ell.txt");
  REQUIRE(in.good());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    unsigned ell = 0;
    std::string ws;
    ls >> ell >> ws;
    std::string poly_text;
    std::getline(ls, poly_text);
    if (!poly_text.empty() && poly_text.front() == ' ') poly_text.erase(0, 1);
    std::vector<Rational> parts;
    std::stringstream wss(ws);
    for (std::string item; std::getline(wss, item, ',');) parts.push_back(parse_rational(item));
    REQUIRE(parts.size() == 4);
    const WMatrix w{parts[0], parts[1], parts[2], parts[3]};
    const LaurentPoly golden = LaurentPoly::parse(poly_text);
    CHECK(a_ell_oracle(ell, w) == golden);
    CHECK(a_ell_closed(ell, w) == golden);
    ++rows;
  }
  CHECK(rows == 24);
}

TEST_CASE("b_l and c_l oracles") {
  Rng rng(31);
  const WMatrix x = random_w(rng);
  const WMatrix y = random_w(rng);
  CHECK(b_ell_oracle(1, x, y) == x.w00 * y.w00 + x.w01 * y.w01 + x.w10 * y.w10 + x.w11 * y.w11);
  // c_2 has one term per cyclic binary sequence of length 2.
  CHECK(c_ell_oracle(2, ones()) == 4);
  CHECK(c_ell_oracle(2, WMatrix{2, 2, 2, 2}) == 16);
  CHECK(b_ell_oracle(2, ones(), ones()) == 16);
  CHECK(b_ell_oracle(3, x, y) == c_ell_oracle(3, times_transpose(x, y)));
}

TEST_CASE("d_l closed form") {
  const LaurentPoly v = kZ - LaurentPoly(1);
  CHECK(d_ell(1, frac(3, 2), v) == LaurentPoly(frac(3, 2)));
  CHECK(d_ell(2, frac(3, 2), v) == LaurentPoly(frac(9, 4)) + Rational(2) * v);
  CHECK(d_ell<Rational>(3, 2, 1) == 14);
  CHECK(d_ell_oracle(3, 2, 1) == 14);
  CHECK_THROWS_AS(d_ell<Rational>(0, 1, 1), ParameterError);
  Rng rng(41);
  for (unsigned ell = 1; ell <= 10; ++ell) {
    const Rational u = oracle::small_rational(rng);
    const Rational vv = oracle::small_rational(rng) - 1;
    CHECK(d_ell<Rational>(ell, u, vv) == d_ell_oracle(ell, u, vv));
    if (ell >= 3) {
      // d_l = u d_{l-1} + v d_{l-2}
      CHECK(d_ell<Rational>(ell, u, vv) == u * d_ell<Rational>(ell - 1, u, vv) + vv * d_ell<Rational>(ell - 2, u, vv));
    }
  }
}

TEST_CASE("closed form equals enumeration") {
  const WMatrix w{frac(1, 2), frac(1, 3), frac(1, 5), frac(1, 7)};
  CHECK(a_ell_closed(5, w) == a_ell_oracle(5, w));
  CHECK(a_ell_closed(1, w) == LaurentPoly(w.sum()));
  Rng rng(59);
  for (unsigned ell = 1; ell <= 8; ++ell) {
    for (int k = 0; k < 5; ++k) {
      const WMatrix x = random_w(rng);
      CHECK(a_ell_closed(ell, x) == a_ell_oracle(ell, x));
    }
  }
}

TEST_CASE("a, b, c, d chain on random weights") {
  Rng rng(67);
  for (unsigned ell = 1; ell <= 6; ++ell) {
    for (int k = 0; k < 4; ++k) {
      const WMatrix x = random_w(rng);
      const WMatrix y = random_w(rng);
      const Rational b = b_ell_oracle(ell, x, y);
      CHECK(b == c_ell_oracle(ell, times_transpose(x, y)));
      CHECK(c_ell_oracle(ell, x) == d_ell<Rational>(ell, x.trace(), Rational(-x.det())));
      CHECK(a_ell_closed(ell, hadamard(x, y)).evaluate(Rational(y.w01 * y.w10 / (y.w00 * y.w11))) == b);
    }
  }
}

TEST_CASE("a_l is dominated by a_2^(l/2) for positive weights") {
  Rng rng(71);
  const std::vector<Rational> zs = {frac(1, 16), frac(1, 8), frac(1, 4), frac(1, 2), 1, 2, 4};
  for (unsigned ell = 2; ell <= 8; ++ell) {
    for (int k = 0; k < 5; ++k) {
      const WMatrix w = random_w(rng);
      const LaurentPoly al = a_ell_closed(ell, w);
      const LaurentPoly a2 = a_ell_closed(2, w);
      for (const Rational& z : zs) {
        const Rational lhs = al.evaluate(z);
        CHECK(lhs > 0);
        CHECK(lhs * lhs <= pow(a2.evaluate(z), ell));
      }
    }
  }
}

TEST_CASE("cycle products") {
  const WMatrix w{frac(1, 2), frac(1, 3), frac(1, 5), frac(1, 7)};
  const CycleType id = cycle_type(lift(Permutation::identity(4)));
  CHECK(tilde_A(id, w) == LaurentPoly(1));
  CHECK(big_A(id, w) == pow(LaurentPoly(w.sum()), 6));

  const CycleType one_swap = cycle_type(lift(Permutation::transposition(3, 1, 2)));  // t1 = 1, t2 = 1
  CHECK(big_A(one_swap, w) == LaurentPoly(w.sum()) * a_ell_closed(2, w));

  const Permutation four_cycle = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(big_A(cycle_type(lift(four_cycle)), w) == brute_big_A(four_cycle, w));
  const Permutation three_cycle = Permutation::from_cycles(4, {{0, 1, 2}});
  CHECK(big_A(cycle_type(lift(three_cycle)), w) == brute_big_A(three_cycle, w));
}

TEST_CASE("joint pmf examples") {
  const ExactPVec half = parse_pvec("0.5,0,0,0.5");
  const BiPoly id = joint_pmf(cycle_type(lift(Permutation::identity(4))), half);
  CHECK(id == BiPoly(1));

  CycleType two;
  two.counts[2] = 1;
  const BiPoly j = joint_pmf(two, half);
  CHECK(j.coeff(1, 1) == frac(1, 2));
  CHECK(j.coeff(2, 0) == frac(1, 4));
  CHECK(j.coeff(0, 0) == frac(1, 4));
  CHECK(j.coeff(1, 0) == 0);
  CHECK(j.total() == 1);
}

TEST_CASE("joint pmf normalization and binomial marginal") {
  Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + rng.below(5);
    const Permutation pi = oracle::random_perm(n, rng);
    const CycleType ct = cycle_type(lift(pi));
    Rational a = oracle::small_rational(rng), b = oracle::small_rational(rng), c = oracle::small_rational(rng),
             d = oracle::small_rational(rng);
    const Rational s = a + b + c + d;
    const ExactPVec p{a / s, b / s, c / s, d / s};
    const BiPoly j = joint_pmf(ct, p);
    CHECK(j.total() == 1);
    const auto t_tilde = ct.t_tilde();
    for (std::size_t m = 0; m <= t_tilde; ++m) {
      const Rational bin = binomial_q(t_tilde, m) * pow(p.p11, static_cast<std::int64_t>(m)) * pow(Rational(1 - p.p11), static_cast<std::int64_t>(t_tilde - m));
      CHECK(j.y_marginal(static_cast<std::int64_t>(m)) == bin);
    }
  }
}

TEST_CASE("joint pmf matches enumeration at n = 4") {
  const ExactPVec p = parse_pvec("0.4,0.1,0.2,0.3");
  for (const Permutation& pi : {Permutation::transposition(4, 0, 1), Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                Permutation::from_cycles(4, {{0, 1}, {2, 3}})}) {
    const BiPoly j = joint_pmf(cycle_type(lift(pi)), p);
    const auto law = oracle::exact_joint(pi, p);
    BiPoly expect;
    for (const auto& [key, prob] : law) expect.add_term(key.first, key.second, prob);
    CHECK(j == expect);
  }
}

TEST_CASE("delta is conditionally independent of M given M~ at n = 4") {
  // Track M (all (1,1) labels) as well, then compare P[delta = d | M~, M] across M.
  const ExactPVec p = parse_pvec("0.3,0.2,0.1,0.4");
  const Permutation pi = Permutation::from_cycles(4, {{0, 1, 2}});
  const Permutation tau = lift(pi);
  const std::size_t t = 6;
  std::map<std::tuple<int, int, std::int64_t>, Rational> law;  // (M~, M, delta)
  for (std::uint64_t code = 0; code < (1u << (2 * t)); ++code) {
    Graph ga(4), gb(4);
    Rational prob = 1;
    int m = 0, mt = 0;
    for (std::size_t e = 0; e < t; ++e) {
      const int a = (code >> (2 * e)) & 1;
      const int b = (code >> (2 * e + 1)) & 1;
      ga.set_edge(e, a);
      gb.set_edge(e, b);
      prob *= p.at(a, b);
      if (a && b) {
        ++m;
        if (tau(e) != e) ++mt;
      }
    }
    law[{mt, m, oracle::delta(pi, ga, gb)}] += prob;
  }
  std::map<std::pair<int, int>, Rational> joint_mm;
  for (const auto& [key, prob] : law) joint_mm[{std::get<0>(key), std::get<1>(key)}] += prob;
  std::map<std::pair<int, std::int64_t>, Rational> reference;  // (M~, delta) -> conditional prob
  std::map<std::pair<int, std::int64_t>, bool> have;
  for (const auto& [key, prob] : law) {
    const auto [mt, m, d] = key;
    const Rational cond = prob / joint_mm[{mt, m}];
    if (!have[{mt, d}]) {
      reference[{mt, d}] = cond;
      have[{mt, d}] = true;
    } else {
      CHECK(reference[{mt, d}] == cond);
    }
  }
}

TEST_CASE("hypergeometric and binomial generating functions") {
  const LaurentPoly half_half = frac(1, 2) * (LaurentPoly(1) + kZ);
  CHECK(hyp_pgf(1, 1, 2) == half_half);
  CHECK(bin_pgf(1, 1, 2) == half_half);
  CHECK(hyp_pgf(2, 1, 2) == kZ);
  CHECK(bin_pgf(0, 0, 0) == LaurentPoly(1));
  CHECK_THROWS_AS(hyp_pgf(3, 1, 2), ParameterError);
  CHECK_THROWS_AS(bin_pgf(1, 3, 2), ParameterError);
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        CHECK(hyp_pgf(a, b, n) == hyp_pgf(b, a, n));
        CHECK(hyp_pgf(a, b, n).total() == 1);
      }
    }
  }
  // Against counting subsets: draws of a from n items, the first b marked.
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        std::map<int, Rational> counts;
        unsigned subsets = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          if (static_cast<unsigned>(__builtin_popcount(mask)) != a) continue;
          ++subsets;
          counts[__builtin_popcount(mask & ((1u << b) - 1))] += 1;
        }
        LaurentPoly expect;
        for (const auto& [k, c] : counts) expect.add_term(k, c / subsets);
        CHECK(hyp_pgf(a, b, n) == expect);
      }
    }
  }
  const std::vector<Rational> zs = {frac(1, 8), frac(1, 4), frac(1, 2), frac(3, 4), 1, 2, 4, 8};
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        for (const Rational& z : zs) CHECK(hyp_pgf(a, b, n).evaluate(z) <= bin_pgf(a, b, n).evaluate(z));
      }
    }
  }
}

TEST_CASE("chernoff tail") {
  const LaurentPoly g = Rational(2) * kZinv + LaurentPoly(12) + Rational(2) * kZ;
  CHECK(chernoff_tail(g, 0, 1) == g.total());
  CHECK(chernoff_tail(g, 0, frac(1, 2)) == 17);
  CHECK(g.lower_tail(0) == 14);
  CHECK(chernoff_tail(kZ * kZ, 0, frac(1, 2)) == frac(1, 4));
  CHECK((kZ * kZ).lower_tail(0) == 0);
  CHECK_THROWS_AS(chernoff_tail(kZ - LaurentPoly(1), 0, frac(1, 2)), DomainError);
  CHECK_THROWS_AS(chernoff_tail(g, 0, frac(3, 2)), DomainError);
  CHECK_THROWS_AS(chernoff_tail(g, 0, 0), DomainError);
  Rng rng(97);
  for (int k = 0; k < 50; ++k) {
    LaurentPoly h;
    for (int e = -3; e <= 3; ++e) h.add_term(e, Rational(static_cast<long>(rng.below(5))));
    const std::int64_t j = static_cast<std::int64_t>(rng.below(7)) - 3;
    const Rational z1 = frac(1 + rng.below(8), 8);
    CHECK(h.lower_tail(j) <= chernoff_tail(h, j, z1));
  }
}
