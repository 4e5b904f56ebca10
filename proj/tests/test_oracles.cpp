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

#include <cmath>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "gmill/bm.hpp"
#include "gmill/oracles.hpp"

using namespace gmill;

namespace {

BigFixed gamma_for_k0(std::int64_t x, Precision p) {
  const std::int64_t fw = k0_required_bits(x, p);
  const auto digits = static_cast<std::int64_t>(std::ceil(fw * 0.30103)) + 10;
  return compute_gamma(digits, Variant::B).gamma.rescaled(fw);
}

// Simpson quadrature of the defining integral
// phi(r) = (1/2pi) int_0^{2pi} dtheta / sqrt(1 - 2 r cos t + r^2).
double phi_simpson(double r, int n) {
  auto f = [&](double t) {
    return 1.0 / std::sqrt(1.0 - 2.0 * r * std::cos(t) + r * r);
  };
  const double h = M_PI / n;
  double sum = f(0.0) + f(M_PI);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return sum * h / 3.0 / M_PI;  // symmetric: (1/2pi) * 2 * int_0^pi
}

}  // namespace

TEST_CASE("wallis coefficients start 1, 1/4, 9/64") {
  const std::int64_t F = 192;
  CoeffTable t = wallis_w(2, Precision{F});
  REQUIRE(t.values[0] == BigFixed::from_uint(1, F));
  REQUIRE(t.values[1] == BigFixed::from_double(0.25, F));
  REQUIRE(t.values[2] == BigFixed::from_double(9.0 / 64.0, F));
  REQUIRE_THROWS_AS(wallis_w(-1, Precision{F}), std::invalid_argument);
}

TEST_CASE("wallis bounds and monotonicity on a unit-test range") {
  const std::int64_t F = 192;
  const Precision p{F};
  CoeffTable t = wallis_w(2000, p);
  const BigFixed pi = const_pi(p);
  const BigFixed one = BigFixed::from_uint(1, F);
  const BigFixed two = BigFixed::from_uint(2, F);
  for (std::int64_t k = 1; k <= 2000; ++k) {
    const BigFixed& w = t.values[static_cast<std::size_t>(k)];
    REQUIRE(compare(w, t.values[static_cast<std::size_t>(k - 1)]) < 0);
    const BigFixed u = mul(w, pi);
    REQUIRE(compare(mul_small(u, static_cast<limb_t>(2 * k + 1)), two) > 0);
    REQUIRE(compare(mul_small(u, static_cast<limb_t>(k)), one) < 0);
  }
}

TEST_CASE("pi k w_k approaches 1 from below") {
  const std::int64_t F = 192;
  const Precision p{F};
  const BigFixed pi = const_pi(p);
  BigFixed w = BigFixed::from_uint(1, F);
  const std::int64_t kmax = 100000;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const auto ku = static_cast<limb_t>(k);
    w = div_small(mul_small(w, (2 * ku - 1) * (2 * ku - 1)), (2 * ku) * (2 * ku));
  }
  const BigFixed gap = sub(BigFixed::from_uint(1, F),
                           mul_small(mul(w, pi), static_cast<limb_t>(kmax)));
  REQUIRE(gap.sign() > 0);  // from below
  REQUIRE(compare(gap, div_small(BigFixed::from_uint(1, F),
                                 static_cast<limb_t>(2 * kmax))) < 0);
}

TEST_CASE("elliptic coefficients match closed forms") {
  const std::int64_t F = 256;
  const Precision p{F};
  CoeffTable t = elliptic_c(2, p);
  const BigFixed ln2 = const_ln2(p);
  const BigFixed half = BigFixed::from_double(0.5, F);
  REQUIRE(t.values[0] == ln2);
  // c_1 = (1/4)(log 2 - 1/2), c_2 = (9/64)(log 2 - 7/12)
  BigFixed c1 = shift(sub(ln2, half), -2);
  BigFixed seven12 = div_small(BigFixed::from_uint(7, F), 12);
  BigFixed c2 = div_small(mul_small(sub(ln2, seven12), 9), 64);
  const BigFixed tol = BigFixed::from_parts(1, {8}, F);
  REQUIRE(compare(sub(t.values[1], c1).abs(), tol) <= 0);
  REQUIRE(compare(sub(t.values[2], c2).abs(), tol) <= 0);
}

TEST_CASE("elliptic coefficients positive below 1/(pi^2 k^2)") {
  const std::int64_t F = 192;
  const Precision p{F};
  CoeffTable t = elliptic_c(500, p);
  const BigFixed pi = const_pi(p);
  const BigFixed pi2 = mul(pi, pi);
  const BigFixed one = BigFixed::from_uint(1, F);
  for (std::int64_t k = 1; k <= 500; ++k) {
    const BigFixed& c = t.values[static_cast<std::size_t>(k)];
    REQUIRE(c.sign() > 0);
    REQUIRE(compare(mul_small(mul(c, pi2), static_cast<limb_t>(k * k)), one) < 0);
  }
}

TEST_CASE("partial sums of c_k approach pi/4 with the proven tail bound") {
  const std::int64_t F = 192;
  const Precision p{F};
  const std::int64_t kmax = 100;
  CoeffTable t = elliptic_c(kmax, p);
  BigFixed sum = BigFixed::zero(F);
  BigFixed prev = sum;
  for (const auto& c : t.values) {
    prev = sum;
    sum = add(sum, c);
    REQUIRE(compare(sum, prev) > 0);  // increasing toward pi/4
  }
  const BigFixed quarter_pi = shift(const_pi(p), -2);
  REQUIRE(compare(sum, quarter_pi) < 0);
  const BigFixed tail_bound = add(
      divide(BigFixed::from_uint(1, F),
             mul_small(mul(const_pi(p), const_pi(p)), static_cast<limb_t>(kmax))),
      pow10_neg(20, F));
  REQUIRE(compare(sub(quarter_pi, sum), tail_bound) < 0);
}

TEST_CASE("coefficient csv export") {
  std::ostringstream os;
  write_coeff_csv(os, wallis_w(2, Precision{128}), 6);
  REQUIRE(os.str() == "k,value\n0,1.000000\n1,0.250000\n2,0.140625\n");
}

TEST_CASE("phi at zero and basic guards") {
  REQUIRE(phi(0.0) == Catch::Approx(1.0).margin(1e-15));
  REQUIRE_THROWS_AS(phi(1.0), pole_error);
  REQUIRE_THROWS_AS(phi(-0.5), std::invalid_argument);
  const std::int64_t F = 256;
  BigFixed p0 = phi(BigFixed::zero(F), Precision{F});
  REQUIRE(compare(sub(p0, BigFixed::from_uint(1, F)).abs(),
                  BigFixed::from_parts(1, {4}, F)) <= 0);
  REQUIRE_THROWS_AS(phi(BigFixed::from_uint(1, F), Precision{F}), pole_error);
  REQUIRE_THROWS_AS(phi(BigFixed::from_int(-1, F), Precision{F}),
                    std::invalid_argument);
}

TEST_CASE("phi series and AGM agree at r = 0.3") {
  REQUIRE(std::fabs(phi(0.3) - phi_series_small_r(0.3)) <= 1e-12);
  const std::int64_t F = 256;
  BigFixed r = BigFixed::from_double(0.3, F);
  BigFixed a = phi(r, Precision{F});
  BigFixed s = phi_series_small_r(r, Precision{F});
  REQUIRE(compare(sub(a, s).abs(), BigFixed::from_parts(1, {64}, F)) <= 0);
  REQUIRE_THROWS_AS(phi_series_small_r(0.75), std::invalid_argument);
}

TEST_CASE("phi reflection identity") {
  // phi(2) = (1/2) phi(1/2): bit-identical by construction at the exact
  // dyadic point, and numerically right against the series.
  const std::int64_t F = 256;
  const Precision p{F};
  const BigFixed two = BigFixed::from_uint(2, F);
  const BigFixed half = BigFixed::from_double(0.5, F);
  BigFixed lhs = phi(two, p);
  BigFixed rhs = divide(phi(half, p), two);
  REQUIRE(lhs == rhs);
  REQUIRE(lhs.to_double() ==
          Catch::Approx(0.5 * phi_series_small_r(0.5)).epsilon(1e-13));
  REQUIRE(phi(2.0) == Catch::Approx(0.5 * phi(0.5)).epsilon(1e-14));
}

TEST_CASE("phi agrees with direct theta quadrature") {
  for (double r : {0.3, 0.9, 3.0, 7.0}) {
    REQUIRE(phi(r) == Catch::Approx(phi_simpson(r, 20000)).epsilon(1e-9));
  }
}

TEST_CASE("phi_expansion near-pole behavior") {
  REQUIRE_THROWS_AS(phi_expansion(0.0), std::invalid_argument);
  constexpr double kLn2 = 0.6931471805599453;
  const double h = 1e-8;
  const double diff = phi_expansion(h) - std::log(1.0 / h) / M_PI;
  REQUIRE(diff == Catch::Approx(3.0 * kLn2 / M_PI).margin(2e-7));
}

TEST_CASE("phi_expansion residual obeys the pole-expansion bound") {
  const double h = std::ldexp(1.0, -10);
  const double rho = phi(1.0 + h) - phi_expansion(h);
  REQUIRE(std::fabs(rho) <= h * h * (2.0 + std::log(1.0 + 1.0 / h)));
}

TEST_CASE("rho at h=2 matches quadrature-derived value") {
  // rho(2) = phi(3) - 1/pi; dual-path: AGM and theta quadrature.
  const double rho_agm = phi(3.0) - 1.0 / M_PI;
  const double rho_simpson = phi_simpson(3.0, 20000) - 1.0 / M_PI;
  REQUIRE(rho_agm == Catch::Approx(rho_simpson).margin(1e-9));
  REQUIRE(rho_agm == Catch::Approx(0.0249094).margin(2e-6));
}

TEST_CASE("i0 reference basics") {
  const std::int64_t F = 256;
  REQUIRE(i0_reference(0, Precision{F}) == BigFixed::from_uint(1, F));
  const double v = i0_reference(20, Precision{F}).to_double() *
                   std::sqrt(4.0 * M_PI * 20.0) * std::exp(-40.0);
  REQUIRE(v > 1.0);
  REQUIRE(v < 1.1);
}

TEST_CASE("i0 reference matches bm series to F-10 bits") {
  const std::int64_t F = 256;
  for (std::int64_t x : {1, 5, 10}) {
    PrecisionPlan plan = plan_precision(40, Variant::B);
    plan.x = x;
    BesselPair bp = sum_bessel_series(plan);
    BigFixed ref = i0_reference(x, Precision{F});
    const std::int64_t Fc = std::min(F, plan.frac_bits);
    BigFixed diff = sub(ref.rescaled(Fc), bp.i0.rescaled(Fc)).abs();
    // agreement to Fc - 10 bits, relative (i0 grows like e^(2x))
    REQUIRE(compare(diff, shift(ref.rescaled(Fc), -(Fc - 10))) <= 0);
  }
}

TEST_CASE("k0 reference guards and asymptotics") {
  const std::int64_t F = 192;
  const Precision p{F};
  REQUIRE_THROWS_AS(k0_reference(0, p, BigFixed::zero(F)), std::invalid_argument);
  REQUIRE_THROWS_AS(k0_reference(3, p, BigFixed::from_uint(1, F)),
                    std::invalid_argument);  // declared precision too low

  const BigFixed gref = gamma_for_k0(20, p);
  const double v = k0_reference(20, p, gref).to_double() *
                   std::sqrt(4.0 * 20.0 / M_PI) * std::exp(40.0);
  REQUIRE(v < 1.0);
  REQUIRE(v > 0.95);
}

TEST_CASE("k0 reference remainder ratio spot checks") {
  const std::int64_t F = 256;
  const Precision p{F};
  for (std::int64_t x = 1; x <= 6; ++x) {
    const BigFixed i0 = i0_reference(x, p);
    const BigFixed k0 = k0_reference(x, p, gamma_for_k0(x, p));
    const double ratio = k0.to_double() / i0.to_double();
    REQUIRE(ratio > 0.0);
    REQUIRE(ratio < M_PI * std::exp(-4.0 * static_cast<double>(x)));
  }
}

TEST_CASE("k0 reference is stable under precision escalation") {
  const std::int64_t F = 192;
  BigFixed a = k0_reference(3, Precision{F}, gamma_for_k0(3, Precision{F}));
  BigFixed b = k0_reference(3, Precision{F + 128},
                            gamma_for_k0(3, Precision{F + 128}));
  BigFixed diff = sub(a, b.rescaled(F)).abs();
  REQUIRE(compare(diff, BigFixed::from_parts(1, {1u << 16}, F)) <= 0);  // F-16 bits
}

TEST_CASE("k0 quadrature matches the series route") {
  QuadratureSpec spec;
  const BigFixed k0_2 =
      k0_reference(2, Precision{192}, gamma_for_k0(2, Precision{192}));
  REQUIRE(std::fabs(k0_quadrature(2.0, spec) - k0_2.to_double()) <= 1e-10);
  const BigFixed k0_1 =
      k0_reference(1, Precision{192}, gamma_for_k0(1, Precision{192}));
  REQUIRE(std::fabs(k0_quadrature(1.0, spec) - k0_1.to_double()) <= 1e-10);
}

TEST_CASE("k0 quadrature monotone and below the closed-form bound") {
  QuadratureSpec spec;
  double prev = std::numeric_limits<double>::infinity();
  for (double x : {1.0, 2.0, 3.0}) {
    const double v = k0_quadrature(x, spec);
    REQUIRE(v < prev);
    REQUIRE(v < std::sqrt(M_PI / (4.0 * x)) * std::exp(-2.0 * x));
    prev = v;
  }
  REQUIRE_THROWS_AS(k0_quadrature(0.25, spec), std::invalid_argument);
}

TEST_CASE("k0 quadrature budget exhaustion raises") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.max_subdivisions = 8;
  REQUIRE_THROWS_AS(k0_quadrature(1.0, spec), convergence_error);
}

TEST_CASE("product quadrature reproduces I0*K0") {
  const std::int64_t F = 256;
  const Precision p{F};
  for (std::int64_t x : {1, 2, 3}) {
    const BigFixed ref =
        mul(i0_reference(x, p), k0_reference(x, p, gamma_for_k0(x, p)));
    const double refd = ref.to_double();
    QuadratureSpec spec;
    spec.abs_tol = 1e-9 * refd;
    const double q = product_quadrature(static_cast<double>(x), spec);
    REQUIRE(q > 0.0);
    REQUIRE(std::fabs(q - refd) <= 1e-8 * refd);
  }
  QuadratureSpec spec;
  REQUIRE_THROWS_AS(product_quadrature(0.5, spec), std::invalid_argument);
}
