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

#include "tfim/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfim/error.hpp"

namespace tfim::elliptic {
namespace {

int zero_count(Complex x, Complex y, Complex z) {
  return (x == 0.0) + (y == 0.0) + (z == 0.0);
}

void require_finite(Complex x, Complex y, Complex z) {
  for (const Complex v : {x, y, z}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw_error(ErrorKind::domain, "Carlson arguments must be finite");
    }
  }
}

[[noreturn]] void no_convergence(const char* name, int max_iter) {
  throw_error(ErrorKind::numerical, std::string(name) +
                                        " duplication did not converge in " +
                                        std::to_string(max_iter) +
                                        " iterations");
}

}  // namespace

void EllipticConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-8)) {
    throw_error(ErrorKind::domain, "rel_tol must lie in (0, 1e-8]");
  }
  if (max_iter < 20) {
    throw_error(ErrorKind::domain, "max_iter must be >= 20");
  }
}

Complex carlson_rf(Complex x, Complex y, Complex z,
                   const EllipticConfig& config) {
  config.validate();
  require_finite(x, y, z);
  if (zero_count(x, y, z) > 1) {
    throw_error(ErrorKind::domain, "R_F allows at most one zero argument");
  }

  for (int iter = 0; iter < config.max_iter; ++iter) {
    const Complex mean = (x + y + z) / 3.0;
    const Complex dx = (mean - x) / mean;
    const Complex dy = (mean - y) / mean;
    const Complex dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < config.rel_tol) {
      const Complex e2 = dx * dy - dz * dz;
      const Complex e3 = dx * dy * dz;
      return (1.0 + e2 * (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) + e3 / 14.0) /
             std::sqrt(mean);
    }
    const Complex sx = std::sqrt(x);
    const Complex sy = std::sqrt(y);
    const Complex sz = std::sqrt(z);
    const Complex lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  no_convergence("R_F", config.max_iter);
}

Complex carlson_rd(Complex x, Complex y, Complex z,
                   const EllipticConfig& config) {
  config.validate();
  require_finite(x, y, z);
  if (z == 0.0 || (x == 0.0 && y == 0.0)) {
    throw_error(ErrorKind::domain,
                "R_D needs z != 0 and at most one of x, y zero");
  }

  Complex sum = 0.0;
  double scale = 1.0;
  for (int iter = 0; iter < config.max_iter; ++iter) {
    const Complex mean = (x + y + 3.0 * z) / 5.0;
    const Complex dx = (mean - x) / mean;
    const Complex dy = (mean - y) / mean;
    const Complex dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < config.rel_tol) {
      const Complex ea = dx * dy;
      const Complex eb = dz * dz;
      const Complex ec = ea - eb;
      const Complex ed = ea - 6.0 * eb;
      const Complex ee = ed + ec + ec;
      const Complex tail =
          1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 9.0 / 52.0 * dz * ee) +
          dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + dz * 3.0 / 26.0 * ea));
      return 3.0 * sum + scale * tail / (mean * std::sqrt(mean));
    }
    const Complex sx = std::sqrt(x);
    const Complex sy = std::sqrt(y);
    const Complex sz = std::sqrt(z);
    const Complex lambda = sx * (sy + sz) + sy * sz;
    sum += scale / (sz * (z + lambda));
    scale *= 0.25;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  no_convergence("R_D", config.max_iter);
}

Complex carlson_rg(Complex x, Complex y, Complex z,
                   const EllipticConfig& config) {
  require_finite(x, y, z);
  if (zero_count(x, y, z) > 1) {
    throw_error(ErrorKind::domain, "R_G allows at most one zero argument");
  }
  // Symmetric in its arguments: move a nonzero one into the z slot.
  if (z == 0.0) std::swap(x, z);
  const Complex rf = carlson_rf(x, y, z, config);
  const Complex rd = carlson_rd(x, y, z, config);
  const Complex root = std::sqrt(x) * std::sqrt(y) / std::sqrt(z);
  return 0.5 * (z * rf - (x - z) * (y - z) * rd / 3.0 + root);
}

double ellip_k(double m, const EllipticConfig& config) {
  if (!(m < 1.0)) {
    throw_error(ErrorKind::domain, "K(m) requires m < 1 (diverges at m = 1)");
  }
  return carlson_rf(0.0, 1.0 - m, 1.0, config).real();
}

Complex ellip_e(double m, const EllipticConfig& config) {
  if (!std::isfinite(m)) {
    throw_error(ErrorKind::domain, "E(m) requires finite m");
  }
  if (m == 1.0) return 1.0;
  if (m < 1.0) return 2.0 * carlson_rg(0.0, 1.0 - m, 1.0, config).real();
  return 2.0 * carlson_rg(0.0, Complex(1.0 - m, +0.0), 1.0, config);
}

}  // namespace tfim::elliptic
