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

#ifndef GMILL_ELEMENTARY_HPP_
#define GMILL_ELEMENTARY_HPP_

// Elementary functions over BigFixed: reciprocal, division, square root,
// natural log, and the constants log 2 and pi.
//
// Newton iterations run on operands normalized into [1/2, 1) so the iterate
// carries full relative precision; the binary exponent is reapplied with a
// single final truncation.  Precision doubles per Newton step starting from
// a double-precision seed.

#include <cstdint>
#include <vector>

#include "gmill/bigfixed.hpp"

namespace gmill {
namespace detail {

// Precision ladder for Newton iterations: coarse-to-fine, ending at fi twice.
inline std::vector<std::int64_t> newton_schedule(std::int64_t fi) {
  std::vector<std::int64_t> sched;
  for (std::int64_t f = fi; f > 80; f = f / 2 + 16) sched.push_back(f);
  sched.push_back(80);
  std::reverse(sched.begin(), sched.end());
  sched.push_back(fi);
  return sched;
}

// y ~= 1/m for m in [1/2, 1), result in (1, 2], at frac_bits fi.
inline BigFixed recip_normalized(const BigFixed& m, std::int64_t fi) {
  BigFixed y = BigFixed::from_double(1.0 / m.to_double(), 80);
  for (std::int64_t f : newton_schedule(fi)) {
    y = y.rescaled(f);
    const BigFixed mf = m.rescaled(f);
    const BigFixed two = BigFixed::from_uint(2, f);
    y = mul(y, sub(two, mul(mf, y)));
  }
  return y;
}

// z ~= 1/sqrt(m) for m in [1/4, 1), result in (1, 2], at frac_bits fi.
inline BigFixed invsqrt_normalized(const BigFixed& m, std::int64_t fi) {
  BigFixed z = BigFixed::from_double(1.0 / std::sqrt(m.to_double()), 80);
  for (std::int64_t f : newton_schedule(fi)) {
    z = z.rescaled(f);
    const BigFixed mf = m.rescaled(f);
    const BigFixed one = BigFixed::from_uint(1, f);
    // z += z*(1 - m*z^2)/2
    z = add(z, shift(mul(z, sub(one, mul(mf, mul(z, z)))), -1));
  }
  return z;
}

// Normalize |a| = m * 2^exp with m in [1/2, 1) held at frac_bits fi.
inline BigFixed normalize_mantissa(const BigFixed& a, std::int64_t fi,
                                   std::int64_t* exp_out) {
  const std::int64_t bl = a.bit_length();
  *exp_out = bl - a.frac_bits();
  return BigFixed::from_parts(
      1,
      fi >= bl ? detail::shl_mag(a.magnitude(), fi - bl)
               : detail::shr_mag(a.magnitude(), bl - fi),
      fi);
}

// atanh for |u| < 1/2: u + u^3/3 + u^5/5 + ..., summed until underflow.
inline BigFixed atanh_series(const BigFixed& u) {
  if (u.is_zero()) return u;
  BigFixed sum = u;
  BigFixed p = u;
  const BigFixed u2 = mul(u, u);
  for (limb_t j = 1;; ++j) {
    p = mul(p, u2);
    if (p.is_zero()) break;
    const BigFixed term = div_small(p, 2 * j + 1);
    if (term.is_zero()) break;
    sum = add(sum, term);
  }
  return sum;
}

// atan(1/q) for integer q >= 2, at frac_bits f.
inline BigFixed atan_inv(limb_t q, std::int64_t f) {
  BigFixed pw = div_small(BigFixed::from_uint(1, f), q);
  BigFixed sum = pw;
  const limb_t q2 = q * q;
  bool negative = true;
  for (limb_t j = 1;; ++j, negative = !negative) {
    pw = div_small(pw, q2);
    if (pw.is_zero()) break;
    BigFixed term = div_small(pw, 2 * j + 1);
    if (term.is_zero()) break;
    sum = negative ? sub(sum, term) : add(sum, term);
  }
  return sum;
}

}  // namespace detail

// |result - 1/a| <= 4*2^-F.  Newton iteration with per-step precision
// doubling on the normalized mantissa.
inline BigFixed reciprocal(const BigFixed& a) {
  if (a.is_zero()) throw division_by_zero("reciprocal of zero");
  const std::int64_t F = a.frac_bits();
  const std::int64_t fi = F + 16;
  std::int64_t e = 0;
  const BigFixed m = detail::normalize_mantissa(a, fi, &e);
  const BigFixed y = detail::recip_normalized(m, fi);
  // 1/|a| = (1/m) * 2^-e; store at frac_bits F with one truncation.
  std::vector<limb_t> mag = y.magnitude();
  const std::int64_t k = (F - fi) - e;
  mag = k >= 0 ? detail::shl_mag(mag, k) : detail::shr_mag(mag, -k);
  return BigFixed::from_parts(a.sign(), std::move(mag), F);
}

// Fused a/b with a single end truncation; keeps relative accuracy across the
// full dynamic range (reciprocal-then-multiply would not).
inline BigFixed divide(const BigFixed& a, const BigFixed& b) {
  if (b.is_zero()) throw division_by_zero("divide by zero");
  if (a.frac_bits() != b.frac_bits())
    throw std::invalid_argument("divide: operands must share frac_bits");
  const std::int64_t F = a.frac_bits();
  if (a.is_zero()) return BigFixed::zero(F);
  const std::int64_t fi = F + 16;
  std::int64_t e = 0;
  const BigFixed m = detail::normalize_mantissa(b, fi, &e);
  const BigFixed y = detail::recip_normalized(m, fi);
  // a/b = (A*Y) * 2^(-F-fi) * 2^-e at frac F: shift right by fi + e.
  std::vector<limb_t> prod = detail::mul_mag(a.magnitude(), y.magnitude());
  const std::int64_t k = fi + e;
  prod = k >= 0 ? detail::shr_mag(prod, k) : detail::shl_mag(prod, -k);
  return BigFixed::from_parts(a.sign() * b.sign(), std::move(prod), F);
}

// |result^2 - a| <= 8*2^-F*a for a bounded away from zero; sqrt(0) = 0.
inline BigFixed sqrt(const BigFixed& a) {
  if (a.sign() < 0) throw std::invalid_argument("sqrt of negative");
  const std::int64_t F = a.frac_bits();
  if (a.is_zero()) return BigFixed::zero(F);
  const std::int64_t fi = F + 16;
  const std::int64_t bl = a.bit_length();
  // |a| = m * 4^e with m in [1/4, 1): take 2e = bl - F rounded up to even.
  const std::int64_t d = bl - F;
  const std::int64_t twoe = (d % 2 == 0) ? d : d + 1;
  const std::int64_t e = twoe / 2;
  const std::int64_t s0 = fi - F - twoe;  // mag shift placing m at frac fi
  std::vector<limb_t> mmag = s0 >= 0 ? detail::shl_mag(a.magnitude(), s0)
                                     : detail::shr_mag(a.magnitude(), -s0);
  const BigFixed m = BigFixed::from_parts(1, std::move(mmag), fi);
  const BigFixed z = detail::invsqrt_normalized(m, fi);
  BigFixed s = mul(m, z);  // ~= sqrt(m)
  // One correction step: s += (m - s^2) * z / 2.
  s = add(s, shift(mul(sub(m, mul(s, s)), z), -1));
  std::vector<limb_t> mag = s.magnitude();
  const std::int64_t k = (F - fi) + e;
  mag = k >= 0 ? detail::shl_mag(mag, k) : detail::shr_mag(mag, -k);
  return BigFixed::from_parts(1, std::move(mag), F);
}

// log 2 = 2*atanh(1/3) = 2 * sum_{j>=0} 3^-(2j+1) / (2j+1).
inline BigFixed const_ln2(Precision p) {
  const std::int64_t F = p.frac_bits;
  const std::int64_t fi = F + 32;
  BigFixed pw = div_small(BigFixed::from_uint(1, fi), 3);
  BigFixed sum = pw;
  for (limb_t j = 1;; ++j) {
    pw = div_small(pw, 9);
    if (pw.is_zero()) break;
    const BigFixed term = div_small(pw, 2 * j + 1);
    if (term.is_zero()) break;
    sum = add(sum, term);
  }
  return shift(sum, 1).rescaled(F);
}

// Machin: pi = 16*atan(1/5) - 4*atan(1/239).
inline BigFixed const_pi(Precision p) {
  const std::int64_t F = p.frac_bits;
  const std::int64_t fi = F + 32;
  const BigFixed a5 = detail::atan_inv(5, fi);
  const BigFixed a239 = detail::atan_inv(239, fi);
  return sub(mul_small(a5, 16), mul_small(a239, 4)).rescaled(F);
}

// Natural log via a = m * 2^e, m in [1, 2), ln m = 2*atanh((m-1)/(m+1)).
inline BigFixed ln(const BigFixed& a) {
  if (a.sign() <= 0) throw std::invalid_argument("ln of nonpositive value");
  const std::int64_t F = a.frac_bits();
  const std::int64_t bl = a.bit_length();
  const std::int64_t e = (bl - 1) - F;
  std::int64_t ebits = 0;
  for (std::int64_t t = e < 0 ? -e : e; t > 0; t >>= 1) ++ebits;
  const std::int64_t fi = F + 64 + ebits;
  // m = |a| * 2^-e at frac fi.
  std::vector<limb_t> mmag = fi >= (bl - 1)
                                 ? detail::shl_mag(a.magnitude(), fi - (bl - 1))
                                 : detail::shr_mag(a.magnitude(), (bl - 1) - fi);
  const BigFixed m = BigFixed::from_parts(1, std::move(mmag), fi);
  const BigFixed one = BigFixed::from_uint(1, fi);
  const BigFixed u = divide(sub(m, one), add(m, one));
  BigFixed r = shift(detail::atanh_series(u), 1);
  if (e != 0) {
    const BigFixed eln2 =
        mul_small(const_ln2(Precision{fi}), static_cast<limb_t>(e < 0 ? -e : e));
    r = e > 0 ? add(r, eln2) : sub(r, eln2);
  }
  return r.rescaled(F);
}

}  // namespace gmill

#endif  // GMILL_ELEMENTARY_HPP_
