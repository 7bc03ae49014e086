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

#ifndef TFIM_SCALING_HPP
#define TFIM_SCALING_HPP

#include <cstdint>
#include <string_view>

/// Thermodynamic-limit fidelity near the Ising critical point g_c = 1.
///
/// With c = (g - 1) / |delta| the log-fidelity per site approaches
/// -|delta| A(c), where A is a universal function built from complete
/// elliptic integrals of the first and second kind. The mirror critical
/// point g_c = -1 follows from the symmetry g -> -g and is not special-cased.
namespace tfim::scaling {

/// |c| within this distance of 1 is treated as the pinch point.
inline constexpr double kPinchTolerance = 1e-9;

enum class Regime { inner, outer, pinch };

std::string_view to_string(Regime regime);

struct ScalingEval {
  double c = 0.0;
  double a_value = 0.0;
  double da_dc = 0.0;         // -inf at the pinch
  bool da_dc_infinite = false;
  Regime regime = Regime::inner;
};

enum class Formula { scaling_law, away, susceptibility };

std::string_view to_string(Formula formula);

struct Prediction {
  double log_f_predicted = 0.0;
  Formula formula = Formula::scaling_law;
};

/// A(c) together with a central-difference dA/dc. At the pinch returns the
/// limit (pi - 2) / 4pi and a flagged infinite derivative.
ScalingEval scaling_a(double c);

/// Large-|c| form 1 / (16 |c|); domain error for |c| <= 1.
double scaling_a_asymptotic(double c);

/// (A(c + h) - A(c - h)) / 2h. Requires c != +-1 and
/// 0 < h <= min(1e-4, |1 - |c|| / 10).
double scaling_a_derivative(double c, double h);

/// Largest step accepted by scaling_a_derivative at c.
double max_derivative_step(double c);

/// Closed-form ln F for one of the asymptotic regimes. Guards (regime error):
///   scaling_law:    |delta| <= 0.05 and |g - 1| <= 0.05
///   away:           |g - 1| >= 10 |delta|
///   susceptibility: N |delta| <= 0.1
/// delta = 0 short-circuits to ln F = 0.
Prediction predict_log_fidelity(double g, double delta, std::int64_t n,
                                Formula formula);

/// Leading-order fidelity per site |delta| A((g - 1) / |delta|), i.e.
/// -lim ln F / N. Same guards as the scaling law.
double scaling_parameter(double g, double delta);

/// N / min(xi(g + delta), xi(g - delta)) with the near-critical correlation
/// length xi(g) = 1 / |g - 1|. The thermodynamic regime needs this >> 1.
double thermodynamic_ratio(std::int64_t n, double g, double delta);

}  // namespace tfim::scaling

#endif  // TFIM_SCALING_HPP
