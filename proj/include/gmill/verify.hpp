// Copyright 2026 The gamma-mill Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMILL_VERIFY_HPP_
#define GMILL_VERIFY_HPP_

// Numerical verification of the truncation-error envelope behind variant B'
// and of the supporting inequalities, at controlled precision:
//
//   Delta(x) = I0(x)K0(x) - A(x),
//   Delta(x) = -e^(-4x) (5/(24 sqrt(2 pi) x^(3/2)) + eps(x)),  |eps(x)| < 0.863/x^2,
//
// plus sweeps for the pole expansion of phi, the Wallis-sum asymptotics, the
// odd-harmonic bounds, and the K0/I0 remainder.  Reports are plain rows with
// both sides of each inequality, serializable to CSV and JSON.

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "gmill/bigfixed.hpp"
#include "gmill/bm.hpp"
#include "gmill/elementary.hpp"
#include "gmill/oracles.hpp"

namespace gmill {

struct TruncationReport {
  std::int64_t x;
  BigFixed delta;      // I0*K0 - A
  BigFixed main_term;  // -5 e^(-4x) / (24 sqrt(2 pi) x^(3/2))
  BigFixed epsilon;    // -delta e^(4x) - 5/(24 sqrt(2 pi) x^(3/2))
  BigFixed bound;      // 0.863 / x^2
  BigFixed ratio;      // delta / main_term
  bool pass;
  std::int64_t work_digits;
};

struct SweepRow {
  std::string grid_point;
  BigFixed lhs;
  BigFixed rhs_lower;
  BigFixed rhs_upper;
  bool pass;
};

struct SweepReport {
  std::string name;
  std::vector<SweepRow> rows;
  bool all_pass;

  void finish() {
    all_pass = true;
    for (const auto& r : rows) all_pass = all_pass && r.pass;
  }
};

// gamma reference with provenance: the remainder checks rest on variant B,
// whose error bound is independent of the envelope under test.
struct GammaOracle {
  BigFixed value;
  Variant provenance;
  std::int64_t digits;
};

namespace detail {

inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t)>& fn) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (n < 2 || threads < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = static_cast<int>(std::min<std::int64_t>(threads, n));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::int64_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// e^t as the inverse of the kernel's ln, by Newton iteration with per-step
// precision doubling: t = k ln 2 + s with |s| <= ln2/2, then y -> y(1+(s-ln y)).
inline BigFixed exp_newton(const BigFixed& t, Precision p) {
  const std::int64_t F = p.frac_bits;
  if (t.is_zero()) return BigFixed::from_uint(1, F);
  const std::int64_t fi = F + 64;
  constexpr double kLn2 = 0.693147180559945309;
  const auto k = static_cast<std::int64_t>(std::llround(t.to_double() / kLn2));
  const BigFixed ln2 = const_ln2(Precision{fi});
  BigFixed s = t.rescaled(fi);
  if (k != 0) {
    const BigFixed kl = mul_small(ln2, static_cast<limb_t>(k < 0 ? -k : k));
    s = k > 0 ? sub(s, kl) : add(s, kl);
  }
  BigFixed y = BigFixed::from_double(std::exp(s.to_double()), 80);
  for (std::int64_t f : newton_schedule(fi)) {
    y = y.rescaled(f);
    const BigFixed sf = s.rescaled(f);
    y = add(y, mul(y, sub(sf, ln(y))));
  }
  return shift(y, k).rescaled(F);
}

inline std::int64_t work_digits_for(std::int64_t x) {
  // Two cancellation stages (~4x/ln10 digits each: forming K0, then
  // resolving eps at the e^(-4x) scale) plus margin.
  return static_cast<std::int64_t>(std::ceil(12.0 * static_cast<double>(x) /
                                             2.302585092994045684)) +
         50;
}

inline GammaOracle gamma_oracle_bits(std::int64_t bits) {
  const auto digits =
      static_cast<std::int64_t>(std::ceil(bits * 0.3010299956639812)) + 12;
  GammaResult g = compute_gamma(digits, Variant::B);
  return GammaOracle{g.gamma.rescaled(bits), Variant::B, digits};
}

// Exact-dyadic grid values render with no trailing zero noise.
inline std::string render_grid_value(const BigFixed& v, std::int64_t max_digits) {
  std::string s = v.to_decimal_string(max_digits);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace detail

struct TruncationOptions {
  std::int64_t extra_digits = 0;    // escalation knob for stability checks
  bool negate_main_term = false;    // fault injection for CI contract tests
};

inline TruncationReport truncation_error(std::int64_t x,
                                         const TruncationOptions& opts = {}) {
  if (x < 1) throw std::invalid_argument("truncation_error: x < 1");
  const std::int64_t work_digits = detail::work_digits_for(x) + opts.extra_digits;
  const auto F =
      static_cast<std::int64_t>(std::ceil(work_digits * 3.321928094887362)) + 64;
  const Precision p{F};
  const BigFixed xb = BigFixed::from_uint(static_cast<limb_t>(x), F);

  const BigFixed i0 = i0_reference(x, p);
  const GammaOracle gref = detail::gamma_oracle_bits(k0_required_bits(x, p));
  const BigFixed k0 = k0_reference(x, p, gref.value);
  const BigFixed tail = asymptotic_tail(x, p);
  const BigFixed delta = sub(mul(i0, k0), tail);

  const BigFixed e4x =
      detail::exp_newton(BigFixed::from_uint(4 * static_cast<limb_t>(x), F), p);
  const BigFixed e4x_neg =
      detail::exp_newton(BigFixed::from_int(-4 * x, F), p);

  // 5 / (24 sqrt(2 pi) x^(3/2))
  const BigFixed sqrt_2pi = sqrt(shift(const_pi(p), 1));
  const BigFixed x_32 = mul(xb, sqrt(xb));
  BigFixed coeff = divide(BigFixed::from_uint(5, F),
                          mul_small(mul(sqrt_2pi, x_32), 24));
  if (opts.negate_main_term) coeff = coeff.negated();

  const BigFixed main_term = mul(e4x_neg, coeff).negated();
  const BigFixed epsilon = sub(mul(delta, e4x).negated(), coeff);
  const BigFixed bound = div_small(
      div_small(BigFixed::from_uint(863, F), 1000),
      static_cast<limb_t>(x) * static_cast<limb_t>(x));
  const BigFixed ratio = divide(delta, main_term);

  bool pass = compare(epsilon.abs(), bound) < 0;
  // The envelope forces delta < 0 only once 5/(24 sqrt(2pi) x^(3/2)) clears
  // 0.863/x^2, i.e. for x >= 108; below that the sign is recorded, not judged.
  if (x >= 108) pass = pass && delta.sign() < 0;
  return TruncationReport{x,    delta, main_term,  epsilon,
                          bound, ratio, pass,       work_digits};
}

inline std::vector<TruncationReport> epsilon_sweep(
    std::int64_t x_max, int threads = 0, const TruncationOptions& opts = {}) {
  if (x_max < 1) throw std::invalid_argument("epsilon_sweep: x_max < 1");
  std::vector<TruncationReport> out(static_cast<std::size_t>(x_max));
  detail::parallel_for(x_max, threads, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = truncation_error(i + 1, opts);
  });
  return out;
}

inline bool all_pass(const std::vector<TruncationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

inline std::vector<double> default_lemma_a_grid() {
  std::vector<double> grid;
  for (int j = 20; j >= 1; --j) grid.push_back(std::ldexp(1.0, -j));
  for (double h : {1.0, 2.0, 4.0, 8.0}) grid.push_back(h);
  return grid;  // {2^-20..2^-1} already covers 0.25 and 0.5
}

// rho(h) = phi(1+h) - (1/2pi)((h-2) log(h/8) + h), |rho| <= h^2 (2+log(1+1/h)).
inline SweepReport lemma_a_sweep(const std::vector<double>& grid,
                                 int threads = 0) {
  const std::int64_t F = 320;
  const Precision p{F};
  SweepReport report{"lemma-a", {}, true};
  report.rows.resize(grid.size());
  const BigFixed one = BigFixed::from_uint(1, F);
  const BigFixed two = BigFixed::from_uint(2, F);
  const BigFixed two_pi = shift(const_pi(p), 1);
  detail::parallel_for(
      static_cast<std::int64_t>(grid.size()), threads, [&](std::int64_t i) {
        const double h = grid[static_cast<std::size_t>(i)];
        if (!(h > 0)) throw std::invalid_argument("lemma_a_sweep: h <= 0");
        const BigFixed hb = BigFixed::from_double(h, F);
        const BigFixed r = add(one, hb);
        const BigFixed ph = phi(r, p);
        const BigFixed log_h8 = ln(shift(hb, -3));
        const BigFixed approx =
            divide(add(mul(sub(hb, two), log_h8), hb), two_pi);
        const BigFixed rho = sub(ph, approx);
        const BigFixed bnd =
            mul(mul(hb, hb), add(two, ln(add(one, divide(one, hb)))));
        report.rows[static_cast<std::size_t>(i)] =
            SweepRow{"h=" + detail::render_grid_value(hb, 24), rho,
                     bnd.negated(), bnd, compare(rho.abs(), bnd) <= 0};
      });
  report.finish();
  return report;
}

// Part 1: eps_k = pi k w_k - 1 + 1/(2(2k-1)) in (1/(12k(2k-1)), 5/(16k(2k-1))).
// Part 2: R3(x) = sum_{k<=2x} w_k - (1/pi)(log x + 5 log 2 + gamma)
//         in (1/(4 pi x), 19/(48 pi x)).
inline SweepReport lemma_b_sweep(std::int64_t k_max, std::int64_t x_max) {
  if (k_max < 1 || x_max < 1)
    throw std::invalid_argument("lemma_b_sweep: bounds must be >= 1");
  const std::int64_t F = 256;
  const Precision p{F};
  SweepReport report{"lemma-b", {}, true};
  const BigFixed one = BigFixed::from_uint(1, F);
  const BigFixed five = BigFixed::from_uint(5, F);
  const BigFixed pi = const_pi(p);
  BigFixed w = one;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<limb_t>(k);
    w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)), (2 * ku) * (2 * ku));
    const BigFixed eps = add(sub(mul_small(mul(w, pi), ku), one),
                             div_small(one, 2 * (2 * ku - 1)));
    const BigFixed lo = div_small(one, 12 * ku * (2 * ku - 1));
    const BigFixed hi = div_small(five, 16 * ku * (2 * ku - 1));
    report.rows.push_back(SweepRow{
        "k=" + std::to_string(k), eps, lo, hi,
        compare(eps, lo) > 0 && compare(eps, hi) < 0});
  }
  const BigFixed gamma = detail::gamma_oracle_bits(F).value;
  const BigFixed ln2_5 = mul_small(const_ln2(p), 5);
  BigFixed sum_w = one;  // k = 0 term
  w = one;
  std::int64_t k_done = 0;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    while (k_done < 2 * x) {
      ++k_done;
      const auto ku = static_cast<limb_t>(k_done);
      w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)),
                    (2 * ku) * (2 * ku));
      sum_w = add(sum_w, w);
    }
    const BigFixed lnx = ln(BigFixed::from_uint(static_cast<limb_t>(x), F));
    const BigFixed r3 = sub(sum_w, divide(add(add(lnx, ln2_5), gamma), pi));
    const BigFixed lo = divide(one, mul_small(pi, 4 * static_cast<limb_t>(x)));
    const BigFixed hi = divide(BigFixed::from_uint(19, F),
                               mul_small(pi, 48 * static_cast<limb_t>(x)));
    report.rows.push_back(SweepRow{
        "x=" + std::to_string(x), r3, lo, hi,
        compare(r3, lo) > 0 && compare(r3, hi) < 0});
  }
  report.finish();
  return report;
}

// Per integer x: the paired-denominator sum against log 2 brackets, the
// odd-harmonic upper bound, and U''(x) = (1/4x) sum 1/(2k-1) near log x/(8x).
inline SweepReport lemma_c_sweep(std::int64_t x_max) {
  if (x_max < 1) throw std::invalid_argument("lemma_c_sweep: x_max < 1");
  const std::int64_t F = 256;
  const Precision p{F};
  SweepReport report{"lemma-c", {}, true};
  const BigFixed zero = BigFixed::zero(F);
  const BigFixed one = BigFixed::from_uint(1, F);
  const BigFixed ln2 = const_ln2(p);
  const BigFixed gamma = detail::gamma_oracle_bits(F).value;
  BigFixed pair_sum = zero;  // sum 1/(2k(2k-1)), k <= 2x
  BigFixed odd_sum = zero;   // sum 1/(2k-1), k <= 2x
  std::int64_t k_done = 0;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    while (k_done < 2 * x) {
      ++k_done;
      const auto ku = static_cast<limb_t>(k_done);
      pair_sum = add(pair_sum, div_small(one, 2 * ku * (2 * ku - 1)));
      odd_sum = add(odd_sum, div_small(one, 2 * ku - 1));
    }
    const auto xu = static_cast<limb_t>(x);
    const BigFixed lnx = ln(BigFixed::from_uint(xu, F));

    const BigFixed lo1 = sub(ln2, div_small(one, 8 * xu));
    const BigFixed hi1 = sub(ln2, div_small(one, 2 * (4 * xu + 1)));
    report.rows.push_back(SweepRow{
        "x=" + std::to_string(x) + " pair-sum", pair_sum, lo1, hi1,
        compare(pair_sum, lo1) > 0 && compare(pair_sum, hi1) < 0});

    // sum 1/(2k-1) < (3/2) log 2 + (1/2)(log x + gamma) + 1/(24 x^2)
    const BigFixed hi2 =
        add(add(div_small(mul_small(ln2, 3), 2), shift(add(lnx, gamma), -1)),
            div_small(one, 24 * xu * xu));
    report.rows.push_back(SweepRow{
        "x=" + std::to_string(x) + " odd-harmonic", odd_sum, zero, hi2,
        odd_sum.sign() > 0 && compare(odd_sum, hi2) < 0});

    // 0 < U''(x) - log x/(8x) < 1.37/x
    const BigFixed u2 = div_small(odd_sum, 4 * xu);
    const BigFixed lhs3 = sub(u2, div_small(lnx, 8 * xu));
    const BigFixed hi3 = div_small(BigFixed::from_uint(137, F), 100 * xu);
    report.rows.push_back(SweepRow{
        "x=" + std::to_string(x) + " u-second", lhs3, zero, hi3,
        lhs3.sign() > 0 && compare(lhs3, hi3) < 0});
  }
  report.finish();
  return report;
}

struct HarmonicGammaEstimate {
  BigFixed value;        // gamma estimate from H_n
  BigFixed error_bound;  // first omitted correction term plus rounding
  std::int64_t n;
  int order;
};

// gamma ~= H_n - log n - 1/(2n) + 1/(12 n^2) [- 1/(120 n^4) at order 2];
// the error is bounded by the first omitted correction term.
inline HarmonicGammaEstimate euler_maclaurin_harmonic(std::int64_t n, int order) {
  if (n < 10) throw std::invalid_argument("euler_maclaurin_harmonic: n < 10");
  if (order != 1 && order != 2)
    throw std::invalid_argument("euler_maclaurin_harmonic: order must be 1 or 2");
  const std::int64_t F = 256;
  const Precision p{F};
  const BigFixed one = BigFixed::from_uint(1, F);
  BigFixed h = BigFixed::zero(F);
  for (std::int64_t k = 1; k <= n; ++k)
    h = add(h, div_small(one, static_cast<limb_t>(k)));
  const auto nu = static_cast<limb_t>(n);
  const BigFixed n2_inv = div_small(div_small(one, nu), nu);
  BigFixed est = sub(h, ln(BigFixed::from_uint(nu, F)));
  est = sub(est, div_small(one, 2 * nu));
  est = add(est, div_small(n2_inv, 12));
  BigFixed bound;
  if (order == 2) {
    const BigFixed n4_inv = mul(n2_inv, n2_inv);
    est = sub(est, div_small(n4_inv, 120));
    bound = div_small(mul(n4_inv, n2_inv), 252);
  } else {
    bound = div_small(mul(n2_inv, n2_inv), 120);
  }
  // n truncating divisions in the harmonic loop, one ulp each.
  bound = add(bound, BigFixed::from_parts(1, {static_cast<limb_t>(n + 16)}, F));
  return HarmonicGammaEstimate{est, bound, n, order};
}

// Per x: 0 < K0/I0 < pi e^(-4x); |Delta/I0^2| within the envelope
// 4 pi x e^(-8x) (5/(24 sqrt(2pi) x^(3/2)) + 0.863/x^2) implied by the
// truncation bound and I0 > e^(2x)/sqrt(4 pi x); and the ratio of Delta/I0^2
// to its leading equivalent, which the same envelope confines to 1 +- c/sqrt(x).
inline SweepReport remainder_ratio_check(const std::vector<std::int64_t>& xs,
                                         int threads = 0) {
  SweepReport report{"remainder", {}, true};
  report.rows.resize(3 * xs.size());
  detail::parallel_for(
      static_cast<std::int64_t>(xs.size()), threads, [&](std::int64_t i) {
        const std::int64_t x = xs[static_cast<std::size_t>(i)];
        if (x < 1) throw std::invalid_argument("remainder_ratio_check: x < 1");
        const auto xu = static_cast<limb_t>(x);
        const std::string xs_label = "x=" + std::to_string(x);

        // K0/I0 against (0, pi e^(-4x)).
        const auto Fr = static_cast<std::int64_t>(
                            std::ceil(8.0 * static_cast<double>(x) * 1.4427)) +
                        192;
        const Precision pr{Fr};
        const BigFixed i0 = i0_reference(x, pr);
        const BigFixed k0 = k0_reference(
            x, pr, detail::gamma_oracle_bits(k0_required_bits(x, pr)).value);
        const BigFixed kio = divide(k0, i0);
        const BigFixed upper =
            mul(const_pi(pr),
                detail::exp_newton(BigFixed::from_int(-4 * x, Fr), pr));
        report.rows[3 * static_cast<std::size_t>(i)] =
            SweepRow{xs_label + " k0-over-i0", kio, BigFixed::zero(Fr), upper,
                     kio.sign() > 0 && compare(kio, upper) < 0};

        // Delta/I0^2 against the derived envelope.
        const TruncationReport tr = truncation_error(x);
        const std::int64_t F = tr.delta.frac_bits();
        const Precision p{F};
        const BigFixed i0w = i0_reference(x, p);
        const BigFixed d2 = divide(divide(tr.delta, i0w), i0w);
        const BigFixed e8neg =
            detail::exp_newton(BigFixed::from_int(-8 * x, F), p);
        const BigFixed pi = const_pi(p);
        const BigFixed sqrt_2pi = sqrt(shift(pi, 1));
        const BigFixed xb = BigFixed::from_uint(xu, F);
        const BigFixed coeff = divide(
            BigFixed::from_uint(5, F), mul_small(mul(sqrt_2pi, mul(xb, sqrt(xb))), 24));
        const BigFixed env =
            mul(mul_small(mul(pi, e8neg), 4 * xu), add(coeff, tr.bound.rescaled(F)));
        bool pass2 = compare(d2.abs(), env) < 0;
        if (x >= 108) pass2 = pass2 && d2.sign() < 0;
        report.rows[3 * static_cast<std::size_t>(i) + 1] =
            SweepRow{xs_label + " delta-over-i0sq", d2, env.negated(), env,
                     pass2};

        // Ratio to the equivalent -(5 sqrt(2pi)/12) x^(-1/2) e^(-8x):
        // |ratio| <= 1 + (0.863 * 24 sqrt(2pi)/5)/sqrt(x).
        const BigFixed equiv =
            mul(mul_small(mul(pi, e8neg), 4 * xu), coeff).negated();
        const BigFixed ratio = divide(d2, equiv);
        const BigFixed slack = divide(
            div_small(mul_small(mul_small(sqrt_2pi, 24), 863), 5000), sqrt(xb));
        const BigFixed renv = add(BigFixed::from_uint(1, F), slack);
        report.rows[3 * static_cast<std::size_t>(i) + 2] =
            SweepRow{xs_label + " ratio-to-equivalent", ratio, renv.negated(),
                     renv, compare(ratio.abs(), renv) <= 0};
      });
  report.finish();
  return report;
}

// --- report serialization -------------------------------------------------

inline void write_csv(std::ostream& os, const SweepReport& report,
                      std::int64_t digits = 30) {
  os << "# gamma-mill sweep\n# name: " << report.name
     << "\n# decimal-digits: " << digits << '\n';
  os << "grid_point,lhs,rhs_lower,rhs_upper,pass\n";
  for (const auto& r : report.rows) {
    os << r.grid_point << ',' << r.lhs.to_decimal_string(digits) << ','
       << r.rhs_lower.to_decimal_string(digits) << ','
       << r.rhs_upper.to_decimal_string(digits) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

inline void write_json(std::ostream& os, const SweepReport& report,
                       std::int64_t digits = 30) {
  os << "[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    os << (i ? ",\n" : "\n");
    os << "  {\"sweep\":\"" << report.name << "\",\"grid_point\":\""
       << r.grid_point << "\",\"lhs\":\"" << r.lhs.to_decimal_string(digits)
       << "\",\"rhs_lower\":\"" << r.rhs_lower.to_decimal_string(digits)
       << "\",\"rhs_upper\":\"" << r.rhs_upper.to_decimal_string(digits)
       << "\",\"pass\":" << (r.pass ? "true" : "false") << "}";
  }
  os << "\n]\n";
}

inline void write_csv(std::ostream& os,
                      const std::vector<TruncationReport>& reports,
                      std::int64_t digits = 30) {
  os << "# gamma-mill truncation sweep\n# decimal-digits: " << digits << '\n';
  os << "x,work_digits,delta,main_term,epsilon,bound,ratio,pass\n";
  for (const auto& r : reports) {
    os << r.x << ',' << r.work_digits << ','
       << r.delta.to_decimal_string(digits) << ','
       << r.main_term.to_decimal_string(digits) << ','
       << r.epsilon.to_decimal_string(digits) << ','
       << r.bound.to_decimal_string(digits) << ','
       << r.ratio.to_decimal_string(digits) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

inline void write_json(std::ostream& os,
                       const std::vector<TruncationReport>& reports,
                       std::int64_t digits = 30) {
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << (i ? ",\n" : "\n");
    os << "  {\"x\":" << r.x << ",\"work_digits\":" << r.work_digits
       << ",\"delta\":\"" << r.delta.to_decimal_string(digits)
       << "\",\"main_term\":\"" << r.main_term.to_decimal_string(digits)
       << "\",\"epsilon\":\"" << r.epsilon.to_decimal_string(digits)
       << "\",\"bound\":\"" << r.bound.to_decimal_string(digits)
       << "\",\"ratio\":\"" << r.ratio.to_decimal_string(digits)
       << "\",\"pass\":" << (r.pass ? "true" : "false") << "}";
  }
  os << "\n]\n";
}

}  // namespace gmill

#endif  // GMILL_VERIFY_HPP_
