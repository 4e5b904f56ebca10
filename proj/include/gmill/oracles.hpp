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

#ifndef GMILL_ORACLES_HPP_
#define GMILL_ORACLES_HPP_

// Independent reference implementations used as ground truth by the
// verification harness: Wallis coefficients w_k, the elliptic-expansion
// coefficients c_k, the circular mean phi(r) = (1/2pi) int dtheta/|1-r e^(i theta)|
// via AGM and via its Taylor series, direct I0/K0 references, and adaptive
// quadratures for K0 and for int_0^inf e^(-4xr) phi(r) dr.
//
// None of these share accumulator code with the bm module; that separation
// is what makes the cross-checks meaningful.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "gmill/bigfixed.hpp"
#include "gmill/elementary.hpp"

namespace gmill {

enum class CoeffKind { WallisW, EllipticC };

struct CoeffTable {
  CoeffKind kind;
  std::vector<BigFixed> values;  // indexed by k
  std::int64_t frac_bits;
};

// w_0 = 1, w_k = w_{k-1} * ((2k-1)/(2k))^2.
inline CoeffTable wallis_w(std::int64_t k_max, Precision p) {
  if (k_max < 0) throw std::invalid_argument("wallis_w: k_max < 0");
  CoeffTable t{CoeffKind::WallisW, {}, p.frac_bits};
  t.values.reserve(static_cast<std::size_t>(k_max) + 1);
  BigFixed w = BigFixed::from_uint(1, p.frac_bits);
  t.values.push_back(w);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<limb_t>(k);
    w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)), (2 * ku) * (2 * ku));
    t.values.push_back(w);
  }
  return t;
}

// c_k = w_k * (log 2 - sum_{l=1}^{2k} (-1)^(l-1)/l); the parenthesis is the
// tail of the alternating log 2 series, positive and ~1/(4k).
inline CoeffTable elliptic_c(std::int64_t k_max, Precision p) {
  if (k_max < 0) throw std::invalid_argument("elliptic_c: k_max < 0");
  const std::int64_t F = p.frac_bits;
  CoeffTable t{CoeffKind::EllipticC, {}, F};
  t.values.reserve(static_cast<std::size_t>(k_max) + 1);
  const BigFixed one = BigFixed::from_uint(1, F);
  const BigFixed ln2 = const_ln2(p);
  BigFixed w = one;
  BigFixed alt = BigFixed::zero(F);  // alternating partial sum up to 2k terms
  t.values.push_back(ln2);           // c_0 = log 2
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<limb_t>(k);
    w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)), (2 * ku) * (2 * ku));
    alt = add(alt, sub(div_small(one, 2 * ku - 1), div_small(one, 2 * ku)));
    t.values.push_back(mul(w, sub(ln2, alt)));
  }
  return t;
}

// CSV export, columns k,value.
inline void write_coeff_csv(std::ostream& os, const CoeffTable& table,
                            std::int64_t digits) {
  os << "k,value\n";
  for (std::size_t k = 0; k < table.values.size(); ++k)
    os << k << ',' << table.values[k].to_decimal_string(digits) << '\n';
}

namespace detail {

inline double agm(double a, double g) {
  for (int i = 0; i < 60 && a - g > 4e-16 * a; ++i) {
    const double t = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = t;
  }
  return 0.5 * (a + g);
}

inline BigFixed agm(BigFixed a, BigFixed g) {
  const BigFixed thresh = BigFixed::from_parts(1, {16}, a.frac_bits());
  for (int i = 0; i < 100000; ++i) {
    if (compare(sub(a, g).abs(), thresh) <= 0) break;
    BigFixed t = shift(add(a, g), -1);
    g = sqrt(mul(a, g));
    a = std::move(t);
  }
  return shift(add(a, g), -1);
}

}  // namespace detail

// phi(r) = 1/AGM(1, sqrt(1-r^2)) for r < 1; (1/r) phi(1/r) for r > 1.
inline double phi(double r) {
  if (r < 0) throw std::invalid_argument("phi: r < 0");
  if (r == 1.0) throw pole_error("phi has a logarithmic pole at r = 1");
  if (r > 1.0) {
    const double b = std::sqrt((r - 1.0) * (r + 1.0)) / r;
    return 1.0 / (r * detail::agm(1.0, b));
  }
  const double b = std::sqrt((1.0 - r) * (1.0 + r));
  return 1.0 / detail::agm(1.0, b);
}

inline BigFixed phi(const BigFixed& r, Precision p) {
  if (r.sign() < 0) throw std::invalid_argument("phi: r < 0");
  const std::int64_t fi = p.frac_bits + 32;
  const BigFixed one = BigFixed::from_uint(1, fi);
  const BigFixed rr = r.rescaled(fi);
  const int c = compare(rr, one);
  if (c == 0) throw pole_error("phi has a logarithmic pole at r = 1");
  BigFixed result;
  if (c > 0) {
    // b = sqrt((r-1)(r+1))/r, phi = 1/(r * AGM(1, b))
    const BigFixed b = divide(sqrt(mul(sub(rr, one), add(rr, one))), rr);
    result = divide(one, mul(rr, detail::agm(one, b)));
  } else {
    const BigFixed b = sqrt(mul(sub(one, rr), add(one, rr)));
    result = divide(one, detail::agm(one, b));
  }
  return result.rescaled(p.frac_bits);
}

// Taylor route sum w_k r^(2k), offered as a cross-check for r <= 1/2.
inline double phi_series_small_r(double r) {
  if (r < 0 || r > 0.5) throw std::invalid_argument("phi_series_small_r: r outside [0, 1/2]");
  const double r2 = r * r;
  double w = 1.0, p = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double q = (2.0 * k - 1.0) / (2.0 * k);
    w *= q * q;
    p *= r2;
    const double term = w * p;
    sum += term;
    if (term < 1e-19 * sum) break;
  }
  return sum;
}

inline BigFixed phi_series_small_r(const BigFixed& r, Precision p) {
  const std::int64_t F = p.frac_bits;
  const BigFixed half = BigFixed::from_double(0.5, F);
  if (r.sign() < 0 || compare(r.rescaled(F), half) > 0)
    throw std::invalid_argument("phi_series_small_r: r outside [0, 1/2]");
  const BigFixed r2 = mul(r.rescaled(F), r.rescaled(F));
  BigFixed w = BigFixed::from_uint(1, F);
  BigFixed pw = w;
  BigFixed sum = w;
  for (std::int64_t k = 1;; ++k) {
    const auto ku = static_cast<limb_t>(k);
    w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)), (2 * ku) * (2 * ku));
    pw = mul(pw, r2);
    const BigFixed term = mul(w, pw);
    if (term.is_zero()) break;
    sum = add(sum, term);
  }
  return sum;
}

// Four-term expansion of phi(1+h) near the pole, valid for small |h|:
// (1/pi)(log(1/|h|) + 3 log 2 - (h/2) log(1/|h|) - (3/2 log 2 - 1/2) h).
inline double phi_expansion(double h) {
  if (h == 0.0) throw std::invalid_argument("phi_expansion: h = 0");
  if (std::fabs(h) >= 1.0) throw std::invalid_argument("phi_expansion: |h| >= 1");
  constexpr double kLn2 = 0.6931471805599453094;
  constexpr double kPi = 3.1415926535897932385;
  const double L = std::log(1.0 / std::fabs(h));
  return (L + 3.0 * kLn2 - 0.5 * h * L - (1.5 * kLn2 - 0.5) * h) / kPi;
}

// Direct series summation of I0, code path disjoint from the bm module.
inline BigFixed i0_reference(std::int64_t x, Precision p) {
  if (x < 0) throw std::invalid_argument("i0_reference: x < 0");
  const std::int64_t F = p.frac_bits;
  BigFixed sum = BigFixed::from_uint(1, F);
  if (x == 0) return sum;
  BigFixed term = sum;
  const limb_t xx = static_cast<limb_t>(x) * static_cast<limb_t>(x);
  for (limb_t n = 1;; ++n) {
    term = div_small(div_small(mul_small(term, xx), n), n);
    if (term.is_zero() || compare(term, shift(sum, -F)) < 0) break;
    sum = add(sum, term);
  }
  return sum;
}

// Working precision K0 (0.2) needs on top of the requested output bits:
// forming -(log x + gamma) I0 + S0 cancels ~4x/ln 2 bits.
inline std::int64_t k0_required_bits(std::int64_t x, Precision p) {
  constexpr double kLog2E = 1.442695040888963407;
  return p.frac_bits +
         static_cast<std::int64_t>(std::ceil(4.0 * static_cast<double>(x) * kLog2E)) +
         32;
}

// K0(x) = -(log x + gamma) I0(x) + S0(x), evaluated at inflated working
// precision to absorb the cancellation.  gamma_ref must be declared (and
// accurate) at least at k0_required_bits.
inline BigFixed k0_reference(std::int64_t x, Precision p, const BigFixed& gamma_ref) {
  if (x < 1) throw std::invalid_argument("k0_reference: x < 1");
  const std::int64_t fw = k0_required_bits(x, p);
  if (gamma_ref.frac_bits() < fw)
    throw std::invalid_argument("k0_reference: gamma_ref precision below requirement");
  const BigFixed one = BigFixed::from_uint(1, fw);
  BigFixed i0 = one;
  BigFixed s0 = BigFixed::zero(fw);
  BigFixed h = BigFixed::zero(fw);
  BigFixed term = one;
  const limb_t xx = static_cast<limb_t>(x) * static_cast<limb_t>(x);
  for (limb_t n = 1;; ++n) {
    term = div_small(div_small(mul_small(term, xx), n), n);
    if (term.is_zero() || compare(term, shift(i0, -fw)) < 0) break;
    h = add(h, div_small(one, n));
    i0 = add(i0, term);
    s0 = add(s0, mul(term, h));
  }
  const BigFixed lnx = ln(BigFixed::from_uint(static_cast<limb_t>(x), fw));
  const BigFixed k0 = sub(s0, mul(add(lnx, gamma_ref.rescaled(fw)), i0));
  return k0.rescaled(p.frac_bits);
}

// Adaptive midpoint refinement with Richardson acceptance.
struct QuadratureSpec {
  double abs_tol = 1e-11;
  std::int64_t max_subdivisions = 4000000;
};

namespace detail {

template <typename F>
class MidpointRefiner {
 public:
  MidpointRefiner(F f, std::int64_t budget) : f_(f), budget_(budget) {}

  double integrate(double a, double b, double tol) {
    return refine(a, b, eval((a + b) / 2) * (b - a), tol, 64, 0);
  }

 private:
  double eval(double v) {
    if (--budget_ < 0)
      throw convergence_error("quadrature: subdivision budget exhausted");
    return f_(v);
  }

  double refine(double a, double b, double whole, double tol, int depth,
                int level) {
    const double m = 0.5 * (a + b);
    const double h = b - a;
    const double left = eval(0.5 * (a + m)) * (0.5 * h);
    const double right = eval(0.5 * (m + b)) * (0.5 * h);
    const double split = left + right;
    // Midpoint halving cuts the h^2 error by 4; (split-whole)/3 estimates it.
    // Parent and child estimates integrate widths differing by a position
    // ulp, so |split-whole| has a floor of ~|f|*ulp(b); accept there too.
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    const double pos_ulp = kEps * std::max(std::fabs(a), std::fabs(b));
    const double noise =
        8.0 * (std::fabs(split) / std::max(h, pos_ulp)) * pos_ulp +
        8.0 * kEps * std::fabs(split);
    if (level >= 3 && (std::fabs(split - whole) <= 3.0 * tol ||
                       std::fabs(split - whole) <= noise))
      return split + (split - whole) / 3.0;
    if (m <= a || m >= b) return split;  // machine-width interval
    if (depth <= 0)
      throw convergence_error("quadrature: max refinement depth exceeded");
    return refine(a, m, left, tol / 2, depth - 1, level + 1) +
           refine(m, b, right, tol / 2, depth - 1, level + 1);
  }

  F f_;
  std::int64_t budget_;
};

}  // namespace detail

// int_0^inf e^(-2x cosh v) dv with the tail cut where the integrand is below
// abs_tol/10.
inline double k0_quadrature(double x, const QuadratureSpec& spec) {
  if (!(x >= 0.5)) throw std::invalid_argument("k0_quadrature: x < 1/2");
  if (!(spec.abs_tol > 0)) throw std::invalid_argument("k0_quadrature: abs_tol <= 0");
  const double arg = std::log(10.0 / spec.abs_tol) / (2.0 * x);
  const double V = std::acosh(std::max(arg, 1.5));
  detail::MidpointRefiner refiner(
      [x](double v) { return std::exp(-2.0 * x * std::cosh(v)); },
      spec.max_subdivisions);
  return refiner.integrate(0.0, V, 0.8 * spec.abs_tol);
}

namespace detail {

// Window [1-delta, 1+delta] of int e^(-4xr) phi(r) dr, integrated against the
// pole expansion of phi.  With e^(-4xh) expanded in powers of h, every piece
// is h^m or h^m log(1/|h|), and odd m cancels over the symmetric window:
//   int_{-d}^{d} h^m dh            = 2 d^(m+1)/(m+1)
//   int_{-d}^{d} h^m log(1/|h|) dh = 2 d^(m+1)/(m+1) (log(1/d) + 1/(m+1)).
inline double product_window(double x, double delta) {
  constexpr double kLn2 = 0.6931471805599453094;
  constexpr double kPi = 3.1415926535897932385;
  const double mu = 1.5 * kLn2 - 0.5;
  const double L = std::log(1.0 / delta);
  constexpr int M = 26;
  double c[M + 1];  // (-4x)^m / m!
  c[0] = 1.0;
  for (int m = 1; m <= M; ++m) c[m] = c[m - 1] * (-4.0 * x) / m;
  double sum = 0.0;
  double dpow = delta;  // delta^(m+1)
  for (int m = 0; m <= M; ++m, dpow *= delta) {
    if (m % 2 != 0) continue;
    const double alpha = c[m] - (m > 0 ? 0.5 * c[m - 1] : 0.0);
    const double beta = 3.0 * kLn2 * c[m] - (m > 0 ? mu * c[m - 1] : 0.0);
    const double base = 2.0 * dpow / (m + 1);
    sum += alpha * base * (L + 1.0 / (m + 1)) + beta * base;
  }
  return std::exp(-4.0 * x) * sum / kPi;
}

}  // namespace detail

// int_0^inf e^(-4xr) phi(r) dr.  The r = 1 logarithmic singularity is handled
// by the analytically integrated pole expansion on [1-delta, 1+delta]; the
// smooth remainder uses adaptive quadrature with phi from the AGM path.
inline double product_quadrature(double x, const QuadratureSpec& spec) {
  if (!(x >= 1.0)) throw std::invalid_argument("product_quadrature: x < 1");
  if (!(spec.abs_tol > 0))
    throw std::invalid_argument("product_quadrature: abs_tol <= 0");
  const double delta = std::ldexp(1.0, -12);
  const double r_end = 1.0 + std::max(std::log(10.0 / spec.abs_tol) / (4.0 * x), 0.5);
  detail::MidpointRefiner refiner(
      [x](double r) { return std::exp(-4.0 * x * r) * phi(r); },
      spec.max_subdivisions);
  const double left = refiner.integrate(0.0, 1.0 - delta, 0.4 * spec.abs_tol);
  detail::MidpointRefiner refiner2(
      [x](double r) { return std::exp(-4.0 * x * r) * phi(r); },
      spec.max_subdivisions);
  const double right = refiner2.integrate(1.0 + delta, r_end, 0.4 * spec.abs_tol);
  return left + detail::product_window(x, delta) + right;
}

}  // namespace gmill

#endif  // GMILL_ORACLES_HPP_
