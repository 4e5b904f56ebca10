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

#ifndef GMILL_BM_HPP_
#define GMILL_BM_HPP_

// Euler's constant via the Brent-McMillan Bessel-series identities.
//
//   gamma = S0(x)/I0(x) - log x - K0(x)/I0(x),
//   I0(x) = sum x^(2n)/n!^2,   S0(x) = sum H_n x^(2n)/n!^2.
//
// Variant B drops K0/I0 (bounded by pi*e^(-4x)); variant B' subtracts the
// divergent asymptotic expansion of I0*K0 truncated at its minimal term
// k = 2x, shrinking the residual to the e^(-8x) scale and roughly halving
// the x needed per digit.  Every result carries a certified bound on the
// neglected remainder plus a fixed-point rounding ledger.

#include <cmath>
#include <cstdint>
#include <optional>

#include "gmill/bigfixed.hpp"
#include "gmill/elementary.hpp"

namespace gmill {

enum class Variant { B, BPrime };

inline const char* variant_name(Variant v) {
  return v == Variant::B ? "b" : "bprime";
}

struct PrecisionPlan {
  std::int64_t target_digits;
  std::int64_t x;          // series argument, integer so the minimal term sits at k = 2x
  std::int64_t term_cap;   // capacity cap for the Bessel series
  std::int64_t frac_bits;
  std::int64_t guard_bits;
  Variant variant;
  double ap_effective;     // root a_p actually used for term_cap
};

struct BesselPair {
  BigFixed i0;
  BigFixed s0;
  std::int64_t terms_summed;
};

struct GammaResult {
  BigFixed gamma;
  PrecisionPlan plan;
  std::int64_t terms_summed;
  BigFixed certified_remainder_bound;
};

// Unique positive root of a*(ln a - 1) = p, by bisection on [e, e^(1+p)];
// the left side is increasing there.  Residual below 1e-12.
inline double solve_ap(double p) {
  double lo = std::exp(1.0);
  double hi = std::exp(1.0 + p);
  auto f = [](double a) { return a * (std::log(a) - 1.0); };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::fabs(f(mid) - p) <= 1e-13) return mid;
    (f(mid) < p ? lo : hi) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

inline PrecisionPlan plan_precision(std::int64_t digits, Variant variant,
                                    std::optional<std::int64_t> x_override = {}) {
  if (digits < 1) throw std::invalid_argument("plan_precision: digits < 1");
  constexpr double kLn10 = 2.302585092994045684;
  constexpr double kLog2_10 = 3.321928094887362348;
  constexpr double kLn2 = 0.693147180559945309;
  const double divisor = variant == Variant::B ? 4.0 : 8.0;
  const auto x_min =
      static_cast<std::int64_t>(std::ceil(digits * kLn10 / divisor));
  std::int64_t x = std::max<std::int64_t>(x_min, 1);
  if (x_override) {
    if (*x_override < x)
      throw std::invalid_argument("plan_precision: x_override below plan minimum");
    x = *x_override;
  }
  // term_cap and guard_bits depend on each other weakly; iterate to a fixed
  // point.  The effective p includes the guard bits: the series self-
  // terminates when t_n/I0 < 2^-frac_bits, i.e. at n ~= a_p*x with
  // p = frac_bits*ln2/(2x) - 1.
  std::int64_t guard = 64;
  std::int64_t term_cap = 0;
  double ap = 0.0;
  const auto base_bits = static_cast<std::int64_t>(std::ceil(digits * kLog2_10));
  for (int iter = 0; iter < 4; ++iter) {
    const std::int64_t frac_bits = base_bits + guard;
    const double p =
        std::max(frac_bits * kLn2 / (2.0 * static_cast<double>(x)) - 1.0, 0.05);
    ap = solve_ap(p);
    term_cap = static_cast<std::int64_t>(std::ceil(ap * static_cast<double>(x))) + 10;
    std::int64_t g2 = 64;
    while ((std::int64_t(1) << (g2 - 64)) < term_cap) ++g2;
    if (g2 == guard) break;
    guard = g2;
  }
  return PrecisionPlan{digits, x, term_cap, base_bits + guard, guard, variant, ap};
}

// Forward summation with running term t_n = t_{n-1} * x^2/n^2 and running
// harmonic number H_n; terminates when the term drops below 2^-F relative
// to the I0 accumulated so far.
inline BesselPair sum_bessel_series(const PrecisionPlan& plan) {
  const std::int64_t F = plan.frac_bits;
  const auto x = static_cast<limb_t>(plan.x);
  if (plan.x > 3000000000LL)
    throw std::invalid_argument("sum_bessel_series: x too large");
  const limb_t xx = x * x;
  const BigFixed one = BigFixed::from_uint(1, F);
  BigFixed t = one;
  BigFixed i0 = one;
  BigFixed s0 = BigFixed::zero(F);
  BigFixed h = BigFixed::zero(F);
  std::int64_t terms = 0;
  for (std::int64_t n = 1;; ++n) {
    if (n > plan.term_cap)
      throw plan_error("sum_bessel_series: term cap reached before underflow; "
                       "plan too tight");
    const auto nu = static_cast<limb_t>(n);
    t = div_small(div_small(mul_small(t, xx), nu), nu);
    if (t.is_zero() || compare(t, shift(i0, -F)) < 0) break;
    h = add(h, div_small(one, nu));
    i0 = add(i0, t);
    s0 = add(s0, mul(t, h));
    terms = n;
  }
  return BesselPair{std::move(i0), std::move(s0), terms};
}

// A(x) = (1/4x) * sum_{k=0}^{2x} (2k)!^3 / (k!^4 (16x)^(2k)), the divergent
// expansion of I0*K0 truncated at its minimal term.  Exactly 2x+1 terms.
inline BigFixed asymptotic_tail(std::int64_t x, Precision p) {
  if (x < 1) throw std::invalid_argument("asymptotic_tail: x < 1");
  if (x > 150000000LL)
    throw std::invalid_argument("asymptotic_tail: x too large");
  const std::int64_t F = p.frac_bits;
  const limb_t den_x = 256 * static_cast<limb_t>(x) * static_cast<limb_t>(x);
  BigFixed t = BigFixed::from_uint(1, F);
  BigFixed acc = t;
  for (std::int64_t k = 1; k <= 2 * x; ++k) {
    const auto ku = static_cast<limb_t>(k);
    const limb_t m = 2 * ku * (2 * ku - 1);
    // t *= (2k(2k-1))^3 / (k^4 (16x)^2)
    t = mul_small(mul_small(mul_small(t, m), m), m);
    t = div_small(div_small(t, ku * ku), ku * ku);
    t = div_small(t, den_x);
    acc = add(acc, t);
  }
  return div_small(acc, 4 * static_cast<limb_t>(x));
}

namespace detail {

// Power-of-two upper bound for e^-u: 2^-floor(u*log2 e) >= e^-u.
inline BigFixed exp_neg_upper(double u, std::int64_t F) {
  constexpr double kLog2E = 1.442695040888963407;
  const auto fl = static_cast<std::int64_t>(std::floor(u * kLog2E));
  return add(shift(BigFixed::from_uint(1, F), -fl),
             BigFixed::from_parts(1, {1}, F));
}

inline BigFixed certified_bound(const PrecisionPlan& plan, std::int64_t terms) {
  const std::int64_t F = plan.frac_bits;
  const auto x = static_cast<double>(plan.x);
  BigFixed main_part;
  if (plan.variant == Variant::B) {
    // pi * e^(-4x) < 4 * 2^-floor(4x*log2 e)
    main_part = mul_small(exp_neg_upper(4.0 * x, F), 4);
  } else {
    // 4*pi*x * e^(-8x) * (5/(24*sqrt(2 pi) x^1.5) + 0.863/x^2), rounded up.
    const double c = 4.0 * 3.14159265358979324 * x *
                     (5.0 / (24.0 * std::sqrt(2.0 * 3.14159265358979324) *
                             std::pow(x, 1.5)) +
                      0.863 / (x * x)) *
                     (1.0 + 1e-9);
    main_part = mul(BigFixed::from_double(c, F), exp_neg_upper(8.0 * x, F));
    main_part = add(main_part, BigFixed::from_parts(1, {1}, F));
  }
  const BigFixed ledger =
      BigFixed::from_parts(1, {static_cast<limb_t>(terms + 20)}, F);
  return add(main_part, ledger);
}

}  // namespace detail

inline GammaResult compute_gamma(std::int64_t digits, Variant variant,
                                 std::optional<std::int64_t> x_override = {}) {
  const PrecisionPlan plan = plan_precision(digits, variant, x_override);
  const std::int64_t F = plan.frac_bits;
  BesselPair bp = sum_bessel_series(plan);
  BigFixed g = divide(bp.s0, bp.i0);
  g = sub(g, ln(BigFixed::from_uint(static_cast<limb_t>(plan.x), F)));
  if (variant == Variant::BPrime) {
    const BigFixed tail = asymptotic_tail(plan.x, Precision{F});
    g = sub(g, divide(divide(tail, bp.i0), bp.i0));
  }
  BigFixed bound = detail::certified_bound(plan, bp.terms_summed);
  return GammaResult{std::move(g), plan, bp.terms_summed, std::move(bound)};
}

}  // namespace gmill

#endif  // GMILL_BM_HPP_
