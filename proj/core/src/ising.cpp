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

#include "tfim/ising.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tfim/error.hpp"
#include "tfim/parallel.hpp"

namespace tfim {
namespace {

constexpr double kPi = std::numbers::pi;

void require_chain_size(std::int64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw_error(ErrorKind::domain,
                "chain size N must be even and >= 2 (mode product runs over "
                "N/2 positive momenta), got " + std::to_string(n));
  }
  if (n > kMaxChainSize) {
    throw_error(ErrorKind::domain, "chain size N must be <= 1e8, got " +
                                       std::to_string(n));
  }
}

void require_momentum(double k) {
  if (!(k > 0.0 && k < kPi)) {
    throw_error(ErrorKind::domain, "momentum k must lie in (0, pi)");
  }
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw_error(ErrorKind::domain, std::string(name) + " must be finite");
  }
}

// g - cos k written as (g - 1) + 2 sin^2(k/2); keeps relative accuracy for
// g near 1 and small k, where both terms are tiny.
double field_offset(double shifted_field, double k) noexcept {
  const double h = std::sin(0.5 * k);
  return shifted_field + 2.0 * h * h;
}

// theta(k, g + delta) - theta(k, g - delta) from one atan2 of the cross and
// dot products of the two (g -+ delta - cos k, sin k) vectors.
double angle_difference(double k, double g, double delta) noexcept {
  const double s = std::sin(k);
  const double plus = field_offset((g - 1.0) + delta, k);
  const double minus = field_offset((g - 1.0) - delta, k);
  return std::atan2(-2.0 * delta * s, plus * minus + s * s);
}

// ln cos(d/2). Near d = 0 this is log1p(-2 sin^2(d/4)), which keeps the
// O(d^2) value when cos(d/2) rounds to 1. A vanishing overlap gives -inf.
double log_overlap_unchecked(double k, double g, double delta) noexcept {
  const double d = angle_difference(k, g, delta);
  if (std::abs(d) <= 0.5 * kPi) {
    const double q = std::sin(0.25 * d);
    return std::log1p(-2.0 * q * q);
  }
  const double f = std::cos(0.5 * d);
  return f > 0.0 ? std::log(f) : -std::numeric_limits<double>::infinity();
}

}  // namespace

void ChainSpec::validate() const {
  require_chain_size(size);
  require_finite(field, "field g");
  require_finite(half_diff, "half-difference delta");
  require_finite(field + half_diff, "g + delta");
  require_finite(field - half_diff, "g - delta");
}

ModeSet momentum_grid(std::int64_t n) {
  require_chain_size(n);
  ModeSet modes;
  modes.momenta.reserve(static_cast<std::size_t>(n / 2));
  for (std::int64_t m = 1; m <= n / 2; ++m) {
    modes.momenta.push_back(momentum(m, n));
  }
  return modes;
}

double bogoliubov_angle(double k, double g) {
  require_momentum(k);
  require_finite(g, "field g");
  return std::atan2(std::sin(k), field_offset(g - 1.0, k));
}

double mode_overlap(double k, double g, double delta) {
  require_momentum(k);
  require_finite(g, "field g");
  require_finite(delta, "half-difference delta");
  return std::cos(0.5 * angle_difference(k, g, delta));
}

double log_mode_overlap(double k, double g, double delta) {
  require_momentum(k);
  require_finite(g, "field g");
  require_finite(delta, "half-difference delta");
  return log_overlap_unchecked(k, g, delta);
}

FidelityValue log_fidelity(const ChainSpec& spec) {
  spec.validate();
  const std::int64_t n = spec.size;
  const double g = spec.field;
  const double delta = spec.half_diff;

  const CompensatedSum sum = ordered_sum(n / 2, [&](std::int64_t i) {
    return log_overlap_unchecked(momentum(i + 1, n), g, delta);
  });

  FidelityValue out;
  out.log_f = sum.value();
  out.orthogonal = !sum.finite();
  out.per_site = out.log_f / static_cast<double>(n);
  out.f = out.log_f > kLogUnderflowFloor ? std::exp(out.log_f) : 0.0;
  return out;
}

double log_fidelity_per_site_integral(double g, double delta) {
  require_finite(g, "field g");
  require_finite(delta, "half-difference delta");
  if (delta == 0.0) return 0.0;

  // The integrand varies on the scales |delta| and |g -+ 1| next to k = 0
  // and k = pi, and has an integrable log singularity at k = 0 when the
  // two fields straddle g = 1. Decade cuts towards both ends let the
  // adaptive rule resolve any of these scales down to 1e-14.
  std::vector<double> cuts{0.0};
  for (int j = 14; j >= 1; --j) cuts.push_back(std::pow(10.0, -j));
  cuts.push_back(0.5 * kPi);
  for (int j = 1; j <= 14; ++j) cuts.push_back(kPi - std::pow(10.0, -j));
  cuts.push_back(kPi);

  auto integrand = [&](double k) { return log_overlap_unchecked(k, g, delta); };
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

  CompensatedSum total;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double piece_error = 0.0;  // relative to the piece's L1 norm
    double piece_l1 = 0.0;
    total.add(Rule::integrate(integrand, cuts[i], cuts[i + 1], 15, 1e-10,
                              &piece_error, &piece_l1));
    error += piece_error * piece_l1;
  }

  const double achieved = error / (2.0 * kPi);
  if (!(achieved <= 1e-12) || !total.finite()) {
    throw_error(ErrorKind::numerical,
                "per-site integral did not reach 1e-12 absolute (achieved " +
                    std::to_string(achieved) + ")",
                achieved);
  }
  return total.value() / (2.0 * kPi);
}

double fidelity_susceptibility(double g, std::int64_t n) {
  require_chain_size(n);
  require_finite(g, "field g");
  const CompensatedSum sum = ordered_sum(n / 2, [&](std::int64_t i) {
    const double k = momentum(i + 1, n);
    const double h = std::sin(0.5 * k);
    // g^2 - 2 g cos k + 1 = (g - 1)^2 + 4 g sin^2(k/2)
    const double denom = (g - 1.0) * (g - 1.0) + 4.0 * g * h * h;
    const double dtheta = std::sin(k) / denom;
    return dtheta * dtheta;
  });
  return sum.value();
}

}  // namespace tfim
