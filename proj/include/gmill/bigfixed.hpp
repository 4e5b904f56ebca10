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

#ifndef GMILL_BIGFIXED_HPP_
#define GMILL_BIGFIXED_HPP_

// Signed fixed-point multiprecision arithmetic.
//
// A value is sign * magnitude * 2^(-frac_bits), where the magnitude is a
// little-endian array of 64-bit limbs with no superfluous high zero limbs.
// The canonical zero has sign 0 and an empty magnitude.  All rounding is
// truncation toward zero; callers budget for it with guard bits.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmill {

using limb_t = std::uint64_t;
using dlimb_t = unsigned __int128;

inline constexpr int kLimbBits = 64;

struct division_by_zero : std::domain_error {
  using std::domain_error::domain_error;
};
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a series hits its capacity cap before self-terminating.
struct plan_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Working precision request: count of fractional bits.
struct Precision {
  std::int64_t frac_bits;
};

namespace detail {

inline void trim(std::vector<limb_t>& mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

inline int cmp_mag(const std::vector<limb_t>& a, const std::vector<limb_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline std::vector<limb_t> add_mag(const std::vector<limb_t>& a,
                                   const std::vector<limb_t>& b) {
  const std::vector<limb_t>& lo = a.size() < b.size() ? a : b;
  const std::vector<limb_t>& hi = a.size() < b.size() ? b : a;
  std::vector<limb_t> out(hi.size() + 1, 0);
  dlimb_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    dlimb_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<limb_t>(s);
    carry = s >> kLimbBits;
  }
  out[hi.size()] = static_cast<limb_t>(carry);
  trim(out);
  return out;
}

// Requires a >= b.
inline std::vector<limb_t> sub_mag(const std::vector<limb_t>& a,
                                   const std::vector<limb_t>& b) {
  std::vector<limb_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dlimb_t bi = (i < b.size() ? b[i] : 0);
    dlimb_t ai = a[i];
    dlimb_t need = bi + (borrow ? 1u : 0u);
    if (ai >= need) {
      out[i] = static_cast<limb_t>(ai - need);
      borrow = 0;
    } else {
      out[i] = static_cast<limb_t>((ai + (dlimb_t(1) << kLimbBits)) - need);
      borrow = 1;
    }
  }
  trim(out);
  return out;
}

inline std::vector<limb_t> shl_mag(const std::vector<limb_t>& a, std::int64_t k) {
  if (a.empty() || k == 0) {
    auto out = a;
    return out;
  }
  const std::int64_t limbs = k / kLimbBits;
  const int bits = static_cast<int>(k % kLimbBits);
  std::vector<limb_t> out(a.size() + limbs + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + limbs] |= (bits == 0) ? a[i] : (a[i] << bits);
    if (bits != 0) out[i + limbs + 1] |= a[i] >> (kLimbBits - bits);
  }
  trim(out);
  return out;
}

inline std::vector<limb_t> shr_mag(const std::vector<limb_t>& a, std::int64_t k) {
  const std::int64_t limbs = k / kLimbBits;
  const int bits = static_cast<int>(k % kLimbBits);
  if (limbs >= static_cast<std::int64_t>(a.size())) return {};
  std::vector<limb_t> out(a.begin() + limbs, a.end());
  if (bits != 0) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] >>= bits;
      if (i + 1 < out.size()) out[i] |= out[i + 1] << (kLimbBits - bits);
    }
  }
  trim(out);
  return out;
}

inline std::int64_t bit_length_mag(const std::vector<limb_t>& a) {
  if (a.empty()) return 0;
  return static_cast<std::int64_t>(a.size() - 1) * kLimbBits +
         (kLimbBits - std::countl_zero(a.back()));
}

inline bool bit_at(const std::vector<limb_t>& a, std::int64_t i) {
  const std::size_t limb = static_cast<std::size_t>(i / kLimbBits);
  if (limb >= a.size()) return false;
  return (a[limb] >> (i % kLimbBits)) & 1u;
}

inline void mul_school(const limb_t* a, std::size_t na, const limb_t* b,
                       std::size_t nb, limb_t* out) {
  for (std::size_t i = 0; i < na; ++i) {
    dlimb_t carry = 0;
    const dlimb_t ai = a[i];
    for (std::size_t j = 0; j < nb; ++j) {
      dlimb_t t = ai * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<limb_t>(t);
      carry = t >> kLimbBits;
    }
    out[i + nb] = static_cast<limb_t>(carry);
  }
}

inline constexpr std::size_t kKaratsubaThreshold = 32;

inline std::vector<limb_t> mul_mag(const std::vector<limb_t>& a,
                                   const std::vector<limb_t>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) {
    std::vector<limb_t> out(a.size() + b.size(), 0);
    mul_school(a.data(), a.size(), b.data(), b.size(), out.data());
    trim(out);
    return out;
  }
  // Karatsuba split at half of the larger operand.
  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto lo = [&](const std::vector<limb_t>& v) {
    std::vector<limb_t> r(v.begin(), v.begin() + std::min(half, v.size()));
    trim(r);
    return r;
  };
  auto hi = [&](const std::vector<limb_t>& v) {
    if (v.size() <= half) return std::vector<limb_t>{};
    std::vector<limb_t> r(v.begin() + half, v.end());
    return r;
  };
  std::vector<limb_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  std::vector<limb_t> z0 = mul_mag(a0, b0);
  std::vector<limb_t> z2 = mul_mag(a1, b1);
  std::vector<limb_t> z1 = mul_mag(add_mag(a0, a1), add_mag(b0, b1));
  z1 = sub_mag(z1, add_mag(z0, z2));
  std::vector<limb_t> out = add_mag(
      z0, add_mag(shl_mag(z1, static_cast<std::int64_t>(half) * kLimbBits),
                  shl_mag(z2, static_cast<std::int64_t>(2 * half) * kLimbBits)));
  return out;
}

inline std::vector<limb_t> mul_small_mag(const std::vector<limb_t>& a, limb_t w) {
  if (a.empty() || w == 0) return {};
  std::vector<limb_t> out(a.size() + 1, 0);
  dlimb_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dlimb_t t = dlimb_t(a[i]) * w + carry;
    out[i] = static_cast<limb_t>(t);
    carry = t >> kLimbBits;
  }
  out[a.size()] = static_cast<limb_t>(carry);
  trim(out);
  return out;
}

// Truncating quotient; remainder is discarded by callers that do not need it.
inline std::vector<limb_t> div_small_mag(const std::vector<limb_t>& a, limb_t w,
                                         limb_t* rem_out = nullptr) {
  std::vector<limb_t> out(a.size(), 0);
  dlimb_t rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    dlimb_t cur = (rem << kLimbBits) | a[i];
    out[i] = static_cast<limb_t>(cur / w);
    rem = cur % w;
  }
  if (rem_out) *rem_out = static_cast<limb_t>(rem);
  trim(out);
  return out;
}

}  // namespace detail

class BigFixed {
 public:
  BigFixed() : sign_(0), frac_bits_(0) {}

  static BigFixed zero(std::int64_t frac_bits) {
    BigFixed r;
    r.frac_bits_ = check_frac(frac_bits);
    return r;
  }

  static BigFixed from_uint(limb_t v, std::int64_t frac_bits) {
    BigFixed r;
    r.frac_bits_ = check_frac(frac_bits);
    if (v != 0) {
      r.sign_ = 1;
      r.mag_ = detail::shl_mag({v}, frac_bits);
    }
    return r;
  }

  static BigFixed from_int(std::int64_t v, std::int64_t frac_bits) {
    BigFixed r = from_uint(static_cast<limb_t>(v < 0 ? -v : v), frac_bits);
    if (v < 0) r.sign_ = -1;
    return r;
  }

  // Low-level constructor; canonicalizes the parts.
  static BigFixed from_parts(int sign, std::vector<limb_t> mag,
                             std::int64_t frac_bits) {
    BigFixed r;
    r.frac_bits_ = check_frac(frac_bits);
    detail::trim(mag);
    r.mag_ = std::move(mag);
    r.sign_ = r.mag_.empty() ? 0 : (sign < 0 ? -1 : 1);
    return r;
  }

  // Exact: every finite double is a dyadic rational.
  static BigFixed from_double(double v, std::int64_t frac_bits) {
    check_frac(frac_bits);
    if (!std::isfinite(v)) throw std::invalid_argument("from_double: non-finite");
    if (v == 0.0) return zero(frac_bits);
    int e2 = 0;
    double m = std::frexp(std::fabs(v), &e2);               // m in [0.5, 1)
    auto mant = static_cast<limb_t>(std::ldexp(m, 53));     // 53-bit integer
    // v = mant * 2^(e2-53).  from_parts reads {mant} as mant * 2^-frac_bits,
    // so scale by 2^(frac_bits + e2 - 53).
    BigFixed r = from_parts(v < 0 ? -1 : 1, {mant}, frac_bits);
    return shift_raw(r, frac_bits + e2 - 53);
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  std::int64_t frac_bits() const { return frac_bits_; }
  const std::vector<limb_t>& magnitude() const { return mag_; }
  std::int64_t bit_length() const { return detail::bit_length_mag(mag_); }

  BigFixed abs() const {
    BigFixed r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  BigFixed negated() const {
    BigFixed r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  // Move to frac_bits f, truncating toward zero when f < frac_bits().
  // For f >= frac_bits() the conversion is exact, so widening then narrowing
  // back is the identity.
  BigFixed rescaled(std::int64_t f) const {
    check_frac(f);
    BigFixed r;
    r.frac_bits_ = f;
    if (is_zero()) return r;
    r.mag_ = f >= frac_bits_ ? detail::shl_mag(mag_, f - frac_bits_)
                             : detail::shr_mag(mag_, frac_bits_ - f);
    r.sign_ = r.mag_.empty() ? 0 : sign_;
    return r;
  }

  double to_double() const {
    if (is_zero()) return 0.0;
    const std::int64_t bl = bit_length();
    // Top 64 bits of the magnitude, then scale.
    std::uint64_t top = 0;
    for (int i = 0; i < 64; ++i) {
      const std::int64_t idx = bl - 1 - i;
      top = (top << 1) | (idx >= 0 && detail::bit_at(mag_, idx) ? 1u : 0u);
    }
    const double scale_exp = static_cast<double>(bl - 64 - frac_bits_);
    double v = std::ldexp(static_cast<double>(top),
                          scale_exp > 2000000 ? 2000000
                          : scale_exp < -2000000
                              ? -2000000
                              : static_cast<int>(scale_exp));
    return sign_ < 0 ? -v : v;
  }

  // Decimal expansion truncated toward zero at `digits` fractional digits.
  std::string to_decimal_string(std::int64_t digits) const {
    if (digits < 1) throw std::invalid_argument("to_decimal_string: digits < 1");
    std::string out;
    if (sign_ < 0) out += '-';
    std::vector<limb_t> ipart = detail::shr_mag(mag_, frac_bits_);
    out += mag_to_decimal(ipart);
    out += '.';
    std::vector<limb_t> frac = frac_part_mag();
    std::int64_t remaining = digits;
    while (remaining > 0) {
      const int chunk = static_cast<int>(std::min<std::int64_t>(remaining, 18));
      limb_t p10 = 1;
      for (int i = 0; i < chunk; ++i) p10 *= 10;
      frac = detail::mul_small_mag(frac, p10);
      std::vector<limb_t> block = detail::shr_mag(frac, frac_bits_);
      limb_t val = block.empty() ? 0 : block[0];
      frac = low_bits(frac, frac_bits_);
      std::string s = std::to_string(val);
      out += std::string(chunk - s.size(), '0') + s;
      remaining -= chunk;
    }
    return out;
  }

  // Accepts [sign] digits [ "." digits ].
  static BigFixed from_decimal(std::string_view text, std::int64_t frac_bits) {
    check_frac(frac_bits);
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -1;
      ++i;
    }
    std::vector<limb_t> num;  // all digits as one integer
    std::int64_t frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '.') {
        if (seen_dot) throw std::invalid_argument("from_decimal: syntax");
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') throw std::invalid_argument("from_decimal: syntax");
      seen_digit = true;
      num = detail::mul_small_mag(num, 10);
      num = detail::add_mag(num, {static_cast<limb_t>(c - '0')});
      if (seen_dot) ++frac_digits;
    }
    if (!seen_digit) throw std::invalid_argument("from_decimal: empty");
    // value = num * 10^-frac_digits; divide after widening to frac_bits.
    std::vector<limb_t> mag = detail::shl_mag(num, frac_bits);
    std::int64_t d = frac_digits;
    while (d > 0) {
      const int chunk = static_cast<int>(std::min<std::int64_t>(d, 18));
      limb_t p10 = 1;
      for (int i2 = 0; i2 < chunk; ++i2) p10 *= 10;
      mag = detail::div_small_mag(mag, p10);
      d -= chunk;
    }
    return from_parts(sign, std::move(mag), frac_bits);
  }

  friend BigFixed add(const BigFixed& a, const BigFixed& b);
  friend BigFixed sub(const BigFixed& a, const BigFixed& b);
  friend BigFixed mul(const BigFixed& a, const BigFixed& b);
  friend BigFixed mul_small(const BigFixed& a, limb_t w);
  friend BigFixed div_small(const BigFixed& a, limb_t w);
  friend BigFixed shift(const BigFixed& a, std::int64_t k);
  friend int compare(const BigFixed& a, const BigFixed& b);

 private:
  static std::int64_t check_frac(std::int64_t f) {
    if (f < 0) throw std::invalid_argument("frac_bits must be nonnegative");
    return f;
  }

  static void check_same_frac(const BigFixed& a, const BigFixed& b) {
    if (a.frac_bits_ != b.frac_bits_)
      throw std::invalid_argument("operands must share frac_bits");
  }

  static BigFixed shift_raw(const BigFixed& a, std::int64_t k) {
    BigFixed r;
    r.frac_bits_ = a.frac_bits_;
    if (a.is_zero()) return r;
    r.mag_ = k >= 0 ? detail::shl_mag(a.mag_, k) : detail::shr_mag(a.mag_, -k);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return r;
  }

  std::vector<limb_t> frac_part_mag() const {
    return low_bits(mag_, frac_bits_);
  }

  static std::vector<limb_t> low_bits(const std::vector<limb_t>& mag,
                                      std::int64_t bits) {
    const std::size_t full = static_cast<std::size_t>(bits / kLimbBits);
    const int rem = static_cast<int>(bits % kLimbBits);
    std::vector<limb_t> out(mag.begin(),
                            mag.begin() + std::min(mag.size(), full + (rem ? 1 : 0)));
    if (rem && out.size() == full + 1) out[full] &= (limb_t(1) << rem) - 1;
    detail::trim(out);
    return out;
  }

  static std::string mag_to_decimal(std::vector<limb_t> mag) {
    if (mag.empty()) return "0";
    std::string out;
    while (!mag.empty()) {
      limb_t rem = 0;
      mag = detail::div_small_mag(mag, 10000000000000000000ull, &rem);  // 10^19
      std::string part = std::to_string(rem);
      if (!mag.empty()) part = std::string(19 - part.size(), '0') + part;
      out = part + out;
    }
    return out;
  }

  int sign_;
  std::vector<limb_t> mag_;
  std::int64_t frac_bits_;
};

inline BigFixed add(const BigFixed& a, const BigFixed& b) {
  BigFixed::check_same_frac(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.sign_ == b.sign_)
    return BigFixed::from_parts(a.sign_, detail::add_mag(a.mag_, b.mag_),
                                a.frac_bits_);
  const int c = detail::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigFixed::zero(a.frac_bits_);
  return c > 0 ? BigFixed::from_parts(a.sign_, detail::sub_mag(a.mag_, b.mag_),
                                      a.frac_bits_)
               : BigFixed::from_parts(b.sign_, detail::sub_mag(b.mag_, a.mag_),
                                      a.frac_bits_);
}

inline BigFixed sub(const BigFixed& a, const BigFixed& b) {
  return add(a, b.negated());
}

// Truncated toward zero at the shared frac_bits.
inline BigFixed mul(const BigFixed& a, const BigFixed& b) {
  BigFixed::check_same_frac(a, b);
  if (a.is_zero() || b.is_zero()) return BigFixed::zero(a.frac_bits_);
  std::vector<limb_t> prod = detail::mul_mag(a.mag_, b.mag_);
  prod = detail::shr_mag(prod, a.frac_bits_);
  return BigFixed::from_parts(a.sign_ * b.sign_, std::move(prod), a.frac_bits_);
}

inline BigFixed mul_small(const BigFixed& a, limb_t w) {
  if (a.is_zero() || w == 0) return BigFixed::zero(a.frac_bits_);
  return BigFixed::from_parts(a.sign_, detail::mul_small_mag(a.mag_, w),
                              a.frac_bits_);
}

inline BigFixed div_small(const BigFixed& a, limb_t w) {
  if (w == 0) throw std::invalid_argument("div_small: divisor is zero");
  if (a.is_zero()) return a;
  return BigFixed::from_parts(a.sign_, detail::div_small_mag(a.mag_, w),
                              a.frac_bits_);
}

// Multiply by 2^k; k < 0 truncates toward zero.
inline BigFixed shift(const BigFixed& a, std::int64_t k) {
  return BigFixed::shift_raw(a, k);
}

inline int compare(const BigFixed& a, const BigFixed& b) {
  BigFixed::check_same_frac(a, b);
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  const int c = detail::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

inline BigFixed operator+(const BigFixed& a, const BigFixed& b) { return add(a, b); }
inline BigFixed operator-(const BigFixed& a, const BigFixed& b) { return sub(a, b); }
inline BigFixed operator*(const BigFixed& a, const BigFixed& b) { return mul(a, b); }
inline BigFixed operator-(const BigFixed& a) { return a.negated(); }
inline bool operator==(const BigFixed& a, const BigFixed& b) { return compare(a, b) == 0; }
inline bool operator!=(const BigFixed& a, const BigFixed& b) { return compare(a, b) != 0; }
inline bool operator<(const BigFixed& a, const BigFixed& b) { return compare(a, b) < 0; }
inline bool operator<=(const BigFixed& a, const BigFixed& b) { return compare(a, b) <= 0; }
inline bool operator>(const BigFixed& a, const BigFixed& b) { return compare(a, b) > 0; }
inline bool operator>=(const BigFixed& a, const BigFixed& b) { return compare(a, b) >= 0; }

inline std::string to_decimal_string(const BigFixed& a, std::int64_t digits) {
  return a.to_decimal_string(digits);
}

// One ulp at a's frac_bits.
inline BigFixed ulp_of(const BigFixed& a) {
  return BigFixed::from_parts(1, {1}, a.frac_bits());
}

// 10^-k, truncated toward zero at frac_bits.
inline BigFixed pow10_neg(std::int64_t k, std::int64_t frac_bits) {
  BigFixed r = BigFixed::from_uint(1, frac_bits);
  while (k > 0) {
    const int chunk = static_cast<int>(std::min<std::int64_t>(k, 18));
    limb_t p10 = 1;
    for (int i = 0; i < chunk; ++i) p10 *= 10;
    r = div_small(r, p10);
    k -= chunk;
  }
  return r;
}

}  // namespace gmill

#endif  // GMILL_BIGFIXED_HPP_
