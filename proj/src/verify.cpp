#include "eralign/verify.hpp"

#include "eralign/cyclic.hpp"
#include "eralign/pgf.hpp"
#include "eralign/rng.hpp"

namespace eralign {

namespace {

constexpr unsigned kMaxDepth = 8;

Rational random_weight(Rng& rng) {
  return frac(static_cast<long>(1 + rng.below(9)), static_cast<long>(1 + rng.below(9)));
}

WMatrix random_w(Rng& rng) {
  WMatrix w;
  w.w00 = random_weight(rng);
  w.w01 = random_weight(rng);
  w.w10 = random_weight(rng);
  w.w11 = random_weight(rng);
  return w;
}

std::string describe(const WMatrix& w) {
  return "w=(" + to_fraction_string(w.w00) + "," + to_fraction_string(w.w01) + "," + to_fraction_string(w.w10) +
         "," + to_fraction_string(w.w11) + ")";
}

CheckStatus check(std::string name, unsigned ell) {
  CheckStatus s;
  s.name = std::move(name);
  s.ell = ell;
  return s;
}

void record(CheckStatus& s, bool ok, const std::string& what) {
  ++s.cases;
  if (!ok && s.failures++ == 0) s.first_failure = what;
}

}  // namespace

std::vector<CheckStatus> verify_gf(const VerifyOptions& opt) {
  if (opt.depth < 1 || opt.depth > kMaxDepth) {
    throw ParameterError("verify depth must lie in [1, " + std::to_string(kMaxDepth) + "]");
  }
  const int sign = opt.mutate ? -1 : +1;
  auto closed_a = [&](unsigned ell, const WMatrix& w) {
    if (!opt.mutate) return a_ell_closed(ell, w);
    return detail::d_ell_signed<LaurentPoly>(ell, LaurentPoly(u_of(w)), v_of(w), sign);
  };
  auto closed_d = [&](unsigned ell, const Rational& u, const Rational& v) {
    return detail::d_ell_signed<Rational>(ell, u, v, sign);
  };
  const std::vector<Rational> z_grid = {frac(1, 16), frac(1, 8), frac(1, 4), frac(1, 2), 1, 2, 4};

  Rng rng(opt.seed);
  std::vector<CheckStatus> out;
  for (unsigned ell = 1; ell <= opt.depth; ++ell) {
    CheckStatus closed = check("a_l closed form = enumeration", ell);
    CheckStatus d_enum = check("d_l closed form = enumeration", ell);
    CheckStatus ab = check("a_l(x.y, y01 y10/(y00 y11)) = b_l(x, y)", ell);
    CheckStatus bc = check("b_l(x, y) = c_l(x y^T)", ell);
    CheckStatus cd = check("c_l(x) = d_l(tr x, -det x)", ell);
    CheckStatus two = check("a_l <= a_2^(l/2)", ell);
    for (unsigned s = 0; s < opt.samples; ++s) {
      const WMatrix x = random_w(rng);
      const WMatrix y = random_w(rng);
      const std::string tag = describe(x);

      const LaurentPoly a_closed = closed_a(ell, x);
      record(closed, a_closed == a_ell_oracle(ell, x), tag);
      record(d_enum, closed_d(ell, x.w00, x.w01) == d_ell_oracle(ell, x.w00, x.w01),
             "u=" + to_fraction_string(x.w00) + " v=" + to_fraction_string(x.w01));

      const Rational b = b_ell_oracle(ell, x, y);
      const Rational z_xy = y.w01 * y.w10 / (y.w00 * y.w11);
      record(ab, closed_a(ell, hadamard(x, y)).evaluate(z_xy) == b, tag + " " + describe(y));
      record(bc, b == c_ell_oracle(ell, times_transpose(x, y)), tag + " " + describe(y));
      record(cd, c_ell_oracle(ell, x) == closed_d(ell, x.trace(), Rational(-x.det())), tag);

      if (ell >= 2) {
        const LaurentPoly a2 = closed_a(2, x);
        for (const Rational& z : z_grid) {
          const Rational al = a_closed.evaluate(z);
          const Rational a2z = a2.evaluate(z);
          record(two, al > 0 && a2z > 0 && al * al <= pow(a2z, ell),
                 tag + " z=" + to_fraction_string(z));
        }
      }
    }
    for (CheckStatus* c : {&closed, &d_enum, &ab, &bc, &cd}) out.push_back(*c);
    if (ell >= 2) out.push_back(two);
  }

  CheckStatus hyp = check("Hyp(a,b,n;z) <= Bin(a,b,n;z)", 0);
  const std::vector<Rational> hz = {frac(1, 8), frac(1, 4), frac(1, 2), frac(3, 4), 1, 2, 4, 8};
  const unsigned n_max = opt.depth + 4;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        const LaurentPoly h = hyp_pgf(a, b, n);
        const LaurentPoly g = bin_pgf(a, b, n);
        for (const Rational& z : hz) {
          record(hyp, h.evaluate(z) <= g.evaluate(z),
                 "a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" + std::to_string(n));
        }
      }
    }
  }
  out.push_back(hyp);
  return out;
}

}  // namespace eralign
