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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "gmill/bigfixed.hpp"
#include "gmill/elementary.hpp"

using namespace gmill;

namespace {

// |a - b| <= k * 2^-F
void require_within_ulps(const BigFixed& a, const BigFixed& b, limb_t k) {
  REQUIRE(a.frac_bits() == b.frac_bits());
  BigFixed bound = mul_small(BigFixed::from_parts(1, {1}, a.frac_bits()), k);
  INFO("diff = " << sub(a, b).to_decimal_string(40));
  REQUIRE(compare(sub(a, b).abs(), bound) <= 0);
}

// Schoolbook binary long division of 1/q, independent of the Newton path.
BigFixed long_division_recip(limb_t q, std::int64_t frac_bits) {
  std::vector<limb_t> bits((frac_bits + 63) / 64, 0);
  limb_t rem = 1;
  for (std::int64_t i = 0; i < frac_bits; ++i) {
    rem <<= 1;
    const std::int64_t pos = frac_bits - 1 - i;
    if (rem >= q) {
      rem -= q;
      bits[pos / 64] |= limb_t(1) << (pos % 64);
    }
  }
  return BigFixed::from_parts(1, std::move(bits), frac_bits);
}

}  // namespace

TEST_CASE("reciprocal basics") {
  const std::int64_t F = 256;
  REQUIRE(reciprocal(BigFixed::from_uint(2, F)) == BigFixed::from_double(0.5, F));
  REQUIRE_THROWS_AS(reciprocal(BigFixed::zero(F)), division_by_zero);
}

TEST_CASE("reciprocal of 3 matches long-division oracle") {
  const std::int64_t F = 256;
  BigFixed r = reciprocal(BigFixed::from_uint(3, F));
  BigFixed oracle = long_division_recip(3, F);
  // Agreement to F - 3 bits.
  REQUIRE(compare(sub(r, oracle).abs(),
                  BigFixed::from_parts(1, {8}, F)) <= 0);
}

TEST_CASE("reciprocal round trip on [0.5, 2]") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  const std::int64_t F = 320;
  for (int i = 0; i < 40; ++i) {
    BigFixed a = BigFixed::from_double(dist(rng), F);
    require_within_ulps(reciprocal(reciprocal(a)), a, 8);
  }
}

TEST_CASE("divide is relatively accurate across magnitudes") {
  const std::int64_t F = 256;
  // q = big / big2 with values far above 1: reciprocal-then-multiply would
  // lose everything, divide must not.
  BigFixed big = BigFixed::from_double(1.75e18, F);
  BigFixed big2 = BigFixed::from_double(3.5e17, F);
  require_within_ulps(divide(big, big2), BigFixed::from_uint(5, F), 4);
  REQUIRE_THROWS_AS(divide(big, BigFixed::zero(F)), division_by_zero);
}

TEST_CASE("sqrt basics and round trips") {
  const std::int64_t F = 256;
  REQUIRE(sqrt(BigFixed::from_uint(4, F)) == BigFixed::from_uint(2, F));
  REQUIRE(sqrt(BigFixed::zero(F)).is_zero());
  REQUIRE_THROWS_AS(sqrt(BigFixed::from_int(-1, F)), std::invalid_argument);

  BigFixed two = BigFixed::from_uint(2, F);
  BigFixed s = sqrt(two);
  // |s^2 - 2| <= 8 * 2^-F * 2
  require_within_ulps(mul(s, s), two, 16);

  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> dist(0.25, 4.0);
  for (int i = 0; i < 40; ++i) {
    BigFixed a = BigFixed::from_double(dist(rng), F);
    require_within_ulps(sqrt(mul(a, a)), a, 8);
  }
}

TEST_CASE("ln basics") {
  const std::int64_t F = 256;
  REQUIRE(ln(BigFixed::from_uint(1, F)).is_zero());
  REQUIRE_THROWS_AS(ln(BigFixed::zero(F)), std::invalid_argument);
  REQUIRE_THROWS_AS(ln(BigFixed::from_int(-2, F)), std::invalid_argument);
  // ln(2) against const_ln2 to F - 6 bits.
  require_within_ulps(ln(BigFixed::from_uint(2, F)), const_ln2(Precision{F}), 64);
}

TEST_CASE("ln functional equation") {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  const std::int64_t F = 256;
  for (int i = 0; i < 25; ++i) {
    BigFixed a = BigFixed::from_double(dist(rng), F);
    BigFixed b = BigFixed::from_double(dist(rng), F);
    BigFixed lhs = ln(mul(a, b));
    require_within_ulps(lhs, add(ln(a), ln(b)), 64);
  }
}

TEST_CASE("ln of powers of two") {
  const std::int64_t F = 192;
  const BigFixed l2 = const_ln2(Precision{F});
  for (limb_t k = 1; k <= 64; ++k) {
    BigFixed p = shift(BigFixed::from_uint(1, F), static_cast<std::int64_t>(k));
    require_within_ulps(ln(p), mul_small(l2, k), 16 * k);
  }
}

TEST_CASE("const_ln2 value and functional equation") {
  const std::int64_t F = 256;
  BigFixed l2 = const_ln2(Precision{F});
  REQUIRE(l2.to_decimal_string(15) == "0.693147180559945");
  // Recompute at F + 128 and compare.
  require_within_ulps(l2, const_ln2(Precision{F + 128}).rescaled(F), 4);
  // 2*ln2 = ln 4
  require_within_ulps(shift(l2, 1), ln(BigFixed::from_uint(4, F)), 32);
}

TEST_CASE("const_pi value and self-consistency") {
  const std::int64_t F = 256;
  BigFixed pi = const_pi(Precision{F});
  REQUIRE(pi.to_decimal_string(14).substr(0, 16) == "3.14159265358979");
  require_within_ulps(pi, const_pi(Precision{F + 128}).rescaled(F), 8);
  BigFixed s = sqrt(pi);
  require_within_ulps(mul(s, s), pi, 16);
}

TEST_CASE("precision escalation stability") {
  // F and F+128 runs agree to at least F-8 bits.
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> dist(0.3, 5.0);
  const std::int64_t F = 192;
  const BigFixed bound = BigFixed::from_parts(1, {256}, F);  // 2^-(F-8)
  for (int i = 0; i < 10; ++i) {
    BigFixed a = BigFixed::from_double(dist(rng), F);
    BigFixed a_hi = a.rescaled(F + 128);
    REQUIRE(compare(sub(reciprocal(a), reciprocal(a_hi).rescaled(F)).abs(), bound) <= 0);
    REQUIRE(compare(sub(sqrt(a), sqrt(a_hi).rescaled(F)).abs(), bound) <= 0);
    REQUIRE(compare(sub(ln(a), ln(a_hi).rescaled(F)).abs(), bound) <= 0);
  }
  REQUIRE(compare(sub(const_ln2(Precision{F}),
                      const_ln2(Precision{F + 128}).rescaled(F)).abs(), bound) <= 0);
  REQUIRE(compare(sub(const_pi(Precision{F}),
                      const_pi(Precision{F + 128}).rescaled(F)).abs(), bound) <= 0);
}
