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

#ifndef TFIM_ISING_HPP
#define TFIM_ISING_HPP

#include <cstdint>
#include <numbers>
#include <vector>

/// Ground-state fidelity of the transverse-field Ising chain
///
///   H(g) = -sum_i (sx_i sx_{i+1} + g sz_i),   periodic spins,
///
/// from its free-fermion (Jordan-Wigner) solution. The fidelity between the
/// ground states at g - delta and g + delta factorizes over positive
/// momenta of the antiperiodic (even-parity) fermion sector,
///
///   F = prod_{k>0} cos((theta(k, g+delta) - theta(k, g-delta)) / 2),
///   tan theta(k, g) = sin k / (g - cos k).
namespace tfim {

inline constexpr std::int64_t kMaxChainSize = 100'000'000;

/// A fidelity evaluation request: N spins, field g, half-difference delta.
struct ChainSpec {
  std::int64_t size = 2;
  double field = 1.0;
  double half_diff = 0.0;

  /// Throws a domain error unless N is even, 2 <= N <= 1e8, and g +- delta
  /// are finite.
  void validate() const;
};

/// Positive momenta k_m = (2m - 1) pi / N, m = 1..N/2, ascending.
struct ModeSet {
  std::vector<double> momenta;
};

struct FidelityValue {
  double log_f = 0.0;     // ln F, finite unless orthogonal
  double f = 1.0;         // F, reported as 0 below the underflow floor
  double per_site = 0.0;  // ln F / N
  bool orthogonal = false;  // some mode overlap vanished: log_f = -inf
};

/// ln F below which exp() underflows in double precision.
inline constexpr double kLogUnderflowFloor = -745.0;

ModeSet momentum_grid(std::int64_t n);

/// k_m for 1-based m; the single formula shared by every mode sum.
inline double momentum(std::int64_t m, std::int64_t n) noexcept;

/// Bogoliubov angle atan2(sin k, g - cos k) in (0, pi).
double bogoliubov_angle(double k, double g);

/// f_k = cos((theta(k, g+delta) - theta(k, g-delta)) / 2), in (0, 1].
double mode_overlap(double k, double g, double delta);

/// ln f_k, accurate also when f_k is within rounding of 1.
double log_mode_overlap(double k, double g, double delta);

/// Exact ln F over the N/2 modes, compensated and order-deterministic.
FidelityValue log_fidelity(const ChainSpec& spec);

/// (1/2pi) * int_0^pi ln f_k dk, the N -> infinity limit of ln F / N.
/// Throws a numerical error carrying the achieved tolerance when the
/// adaptive quadrature cannot reach 1e-12 absolute.
double log_fidelity_per_site_integral(double g, double delta);

/// chi_F = sum_{k>0} (d theta / dg)^2, so that F ~ 1 - delta^2 chi_F / 2.
double fidelity_susceptibility(double g, std::int64_t n);

// ---------------------------------------------------------------------------

inline double momentum(std::int64_t m, std::int64_t n) noexcept {
  return static_cast<double>(2 * m - 1) * std::numbers::pi /
         static_cast<double>(n);
}

}  // namespace tfim

#endif  // TFIM_ISING_HPP
