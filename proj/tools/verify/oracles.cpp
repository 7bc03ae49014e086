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

#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfim::verify {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

double agm_ellip_k(double m) {
  if (!(m < 1.0)) throw std::domain_error("agm_ellip_k: m < 1 required");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int iter = 0; iter < 64 && std::abs(a - b) > 4e-16 * a; ++iter) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return std::numbers::pi / (2.0 * a);
}

double agm_ellip_e(double m) {
  if (!(m < 1.0)) throw std::domain_error("agm_ellip_e: m < 1 required");
  // Imaginary-modulus transformation: E(m) = sqrt(1 - m) E(m / (m - 1)).
  if (m < 0.0) return std::sqrt(1.0 - m) * agm_ellip_e(m / (m - 1.0));
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c = std::sqrt(m);
  double weight = 0.5;
  double sum = weight * c * c;
  for (int iter = 0; iter < 64 && std::abs(c) > 4e-16 * a; ++iter) {
    const double next = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = next;
    weight *= 2.0;
    sum += weight * c * c;
  }
  return std::numbers::pi / (2.0 * a) * (1.0 - sum);
}

double quadrature_ellip_k(double m) {
  auto f = [m](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  return Rule::integrate(f, 0.0, kHalfPi, 15, 1e-13);
}

double quadrature_ellip_e(double m) {
  auto f = [m](double t) {
    const double s = std::sin(t);
    return std::sqrt(1.0 - m * s * s);
  };
  return Rule::integrate(f, 0.0, kHalfPi, 15, 1e-13);
}

double quadrature_abs_im_ellip_e(double m) {
  if (!(m > 1.0)) throw std::domain_error("quadrature_abs_im_ellip_e: m > 1");
  const double start = std::asin(1.0 / std::sqrt(m));
  auto f = [m](double t) {
    const double s = std::sin(t);
    return std::sqrt(std::max(0.0, m * s * s - 1.0));
  };
  return Rule::integrate(f, start, kHalfPi, 15, 1e-13);
}

}  // namespace tfim::verify
