// Copyright 2026 The tfim-fidelity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tfim/ed_oracle.hpp"
#include "tfim/error.hpp"
#include "tfim/ising.hpp"
#include "tfim/parallel.hpp"

using doctest::Approx;
using std::numbers::pi;

namespace {

tfim::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const tfim::Error& e) {
    return e.kind();
  }
  FAIL("expected tfim::Error");
  return tfim::ErrorKind::domain;
}

double ln_f(std::int64_t n, double g, double delta) {
  return tfim::log_fidelity({n, g, delta}).log_f;
}

}  // namespace

TEST_CASE("momentum grid is the antiperiodic positive-k set") {
  const auto four = tfim::momentum_grid(4).momenta;
  REQUIRE(four.size() == 2);
  CHECK(four[0] == Approx(pi / 4));
  CHECK(four[1] == Approx(3 * pi / 4));

  const auto two = tfim::momentum_grid(2).momenta;
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Approx(pi / 2));

  const auto big = tfim::momentum_grid(100'000).momenta;
  CHECK(big.size() == 50'000);
  CHECK(big.front() == Approx(pi * 1e-5));
  for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big[i] > big[i - 1]);
  CHECK(big.back() < pi);
}

TEST_CASE("momentum grid rejects odd or non-positive sizes") {
  CHECK(kind_of([] { tfim::momentum_grid(7); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::momentum_grid(0); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::momentum_grid(-4); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::momentum_grid(200'000'002); }) == tfim::ErrorKind::domain);
  try {
    tfim::momentum_grid(5);
  } catch (const tfim::Error& e) {
    CHECK(std::string(e.what()).find("even") != std::string::npos);
  }
}

TEST_CASE("bogoliubov angle") {
  CHECK(tfim::bogoliubov_angle(pi / 2, 1.0) == Approx(pi / 4));
  CHECK(tfim::bogoliubov_angle(pi / 2, 0.0) == Approx(pi / 2));
  const double polarized = tfim::bogoliubov_angle(pi / 2, 1e12);
  CHECK(polarized > 0.0);
  CHECK(polarized < 1e-11);
  // Continuous through g = cos k, where tan theta changes sign.
  const double k = 1.0;
  CHECK(tfim::bogoliubov_angle(k, std::cos(k) - 1e-9) ==
        Approx(tfim::bogoliubov_angle(k, std::cos(k) + 1e-9)).epsilon(1e-8));
  CHECK(kind_of([] { tfim::bogoliubov_angle(0.0, 1.0); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::bogoliubov_angle(pi, 1.0); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::bogoliubov_angle(4.0, 1.0); }) == tfim::ErrorKind::domain);
}

TEST_CASE("mode overlap") {
  CHECK(tfim::mode_overlap(0.7, 1.3, 0.0) == 1.0);
  CHECK(tfim::mode_overlap(0.7, 1.3, 0.2) == tfim::mode_overlap(0.7, 1.3, -0.2));
  // cos((atan2(1, 2) - pi/2) / 2), evaluated by hand.
  CHECK(tfim::mode_overlap(pi / 2, 1.0, 1.0) == Approx(0.850650808352).epsilon(1e-10));
  // Agrees with the two-angle definition.
  for (const double k : {0.1, 1.0, 2.5}) {
    for (const double g : {0.5, 1.0, 1.7}) {
      const double direct =
          std::cos((tfim::bogoliubov_angle(k, g + 0.1) - tfim::bogoliubov_angle(k, g - 0.1)) / 2);
      CHECK(tfim::mode_overlap(k, g, 0.1) == Approx(direct).epsilon(1e-13));
      CHECK(tfim::log_mode_overlap(k, g, 0.1) == Approx(std::log(direct)).epsilon(1e-10));
    }
  }
}

TEST_CASE("log fidelity trivial and symmetric cases") {
  for (const std::int64_t n : {2, 10, 1000}) {
    const auto v = tfim::log_fidelity({n, 0.8, 0.0});
    CHECK(v.log_f == 0.0);
    CHECK(v.f == 1.0);
    CHECK_FALSE(v.orthogonal);
  }
  for (const double g : {0.3, 1.0, 1.0001, 2.5}) {
    for (const double delta : {1e-6, 1e-3, 0.2}) {
      const auto plus = tfim::log_fidelity({5000, g, delta});
      const auto minus = tfim::log_fidelity({5000, g, -delta});
      CHECK(plus.log_f == minus.log_f);
      CHECK(plus.log_f < 0.0);
      CHECK(plus.per_site * 5000 == Approx(plus.log_f).epsilon(1e-15));
    }
  }
}

TEST_CASE("log fidelity matches the exact diagonalization oracle") {
  const double product = tfim::log_fidelity({8, 1.1, 0.05}).f;
  CHECK(std::abs(product - tfim::ed_oracle_fidelity(8, 1.1, 0.05)) < 1e-10);
  CHECK(std::abs(tfim::log_fidelity({10, 0.7, 0.2}).f - tfim::ed_oracle_fidelity(10, 0.7, 0.2)) <
        1e-10);
}

TEST_CASE("critical decay carries the finite-size log-singularity correction") {
  // For fields straddling g = 1 the mode overlap vanishes like k at k -> 0.
  // The midpoint sum of ln k then exceeds its integral by (1/2) ln 2 in
  // total, so ln F = -N|delta|/4 + ln(2)/2 + O(delta) + o(1/(N delta)).
  const double value = ln_f(200'000, 1.0, 1e-4);
  CHECK(value == Approx(-5.0 + 0.5 * std::log(2.0)).epsilon(2e-4));
  const double larger = ln_f(20'000'000, 1.0, 1e-4);
  CHECK(larger == Approx(-500.0 + 0.5 * std::log(2.0)).epsilon(1e-4));
}

TEST_CASE("fidelity underflow keeps ln F") {
  const auto v = tfim::log_fidelity({1'000'000, 1.0, 0.01});
  CHECK(v.log_f < tfim::kLogUnderflowFloor);
  CHECK(std::isfinite(v.log_f));
  CHECK(v.f == 0.0);
  CHECK_FALSE(v.orthogonal);

  const auto above = tfim::log_fidelity({2000, 1.0, 0.01});
  CHECK(above.f == Approx(std::exp(above.log_f)));
}

TEST_CASE("fields of opposite infinite polarization never give NaN") {
  const auto v = tfim::log_fidelity({100, 0.0, 1e200});
  CHECK_FALSE(std::isnan(v.log_f));
  CHECK(v.log_f < -100.0);
  CHECK(v.f == 0.0);
}

TEST_CASE("invalid chain specs") {
  CHECK(kind_of([] { tfim::log_fidelity({9, 1.0, 0.1}); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::log_fidelity({10, NAN, 0.1}); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::log_fidelity({10, 1.0, INFINITY}); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { tfim::log_fidelity({10, 1e308, 1e308}); }) == tfim::ErrorKind::domain);
}

TEST_CASE("mode sum is bit-identical for any worker count") {
  const tfim::ChainSpec spec{3'000'002, 1.0 + 3e-5, 1e-5};
  tfim::set_worker_limit(1);
  const double one = tfim::log_fidelity(spec).log_f;
  for (const unsigned workers : {2u, 3u, 8u}) {
    tfim::set_worker_limit(workers);
    CHECK(tfim::log_fidelity(spec).log_f == one);
  }
  tfim::set_worker_limit(0);
  CHECK(tfim::log_fidelity(spec).log_f == one);
}

TEST_CASE("per-site integral") {
  CHECK(tfim::log_fidelity_per_site_integral(1.0, 0.0) == 0.0);
  CHECK(tfim::log_fidelity_per_site_integral(1.0, 1e-4) == Approx(-2.5e-5).epsilon(0.01));
  CHECK(tfim::log_fidelity_per_site_integral(1.3, 0.02) ==
        Approx(tfim::log_fidelity_per_site_integral(1.3, -0.02)).epsilon(1e-12));
  // Far from criticality the finite chain converges exponentially fast.
  CHECK(tfim::log_fidelity_per_site_integral(1.5, 0.1) ==
        Approx(ln_f(4000, 1.5, 0.1) / 4000).epsilon(1e-10));
}

TEST_CASE("finite chains approach the per-site integral like 1/N") {
  const double limit = tfim::log_fidelity_per_site_integral(1.0, 1e-3);
  double previous = INFINITY;
  for (std::int64_t n = 1000; n <= 1'024'000; n *= 2) {
    const double diff = std::abs(ln_f(n, 1.0, 1e-3) / n - limit);
    CHECK(diff < previous);
    previous = diff;
  }
  // diff * N -> ln(2)/2 once N|delta| >> 1.
  CHECK(previous * 1'024'000 == Approx(0.5 * std::log(2.0)).epsilon(0.01));
}

TEST_CASE("susceptibility at the critical point is N(N-1)/8") {
  // sum_{m=1}^{N/2} cot^2((2m-1) pi / 2N) = N(N-1)/2 and dtheta/dg = cot(k/2)/2.
  for (const std::int64_t n : {2, 10, 100, 10'000}) {
    const double nd = static_cast<double>(n);
    CHECK(tfim::fidelity_susceptibility(1.0, n) == Approx(nd * (nd - 1) / 8).epsilon(1e-12));
  }
  CHECK(tfim::fidelity_susceptibility(1.0, 10'000) == Approx(1e8 / 8).epsilon(0.05));
}

TEST_CASE("susceptibility away from the critical point") {
  // (1/2pi) int_0^pi sin^2 k / (1 + g^2 - 2 g cos k)^2 dk = 1 / (4 g^2 (g^2 - 1)).
  const double g = 1.1;
  auto integrand = [g](double k) {
    const double d = 1 + g * g - 2 * g * std::cos(k);
    return std::sin(k) * std::sin(k) / (d * d);
  };
  const double per_site =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, pi, 20, 1e-14) /
      (2 * pi);
  CHECK(per_site == Approx(1 / (4 * g * g * (g * g - 1))).epsilon(1e-12));
  CHECK(tfim::fidelity_susceptibility(g, 1'000'000) == Approx(1e6 * per_site).epsilon(1e-9));

  // The leading-order N / (8|eps|) holds only once |eps| << 1.
  CHECK(tfim::fidelity_susceptibility(1.001, 1'000'000) == Approx(1e6 / 0.008).epsilon(0.01));
  CHECK(tfim::fidelity_susceptibility(1e6, 100) < 1e-9);
  CHECK(kind_of([] { tfim::fidelity_susceptibility(NAN, 10); }) == tfim::ErrorKind::domain);
}

TEST_CASE("susceptibility is the second-order limit of the product") {
  const std::vector<std::pair<std::int64_t, double>> cases{{1000, 1e-5}, {20'000, 5e-7}};
  for (const auto& [n, delta] : cases) {
    for (const double g : {0.4, 0.95, 1.0, 1.2, 3.0}) {
      const double value = ln_f(n, g, delta);
      const double taylor = -delta * delta * tfim::fidelity_susceptibility(g, n) / 2;
      CHECK(std::abs(value - taylor) / std::abs(value) < 1e-3);
    }
  }
}
