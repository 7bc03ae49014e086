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

#ifndef TFIM_ANALYSIS_HPP
#define TFIM_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tfim::analysis {

enum class SweepAxis { size, delta, field };

std::string_view to_string(SweepAxis axis);

/// Where the pair of states sits relative to g_c = 1.
struct FieldMode {
  enum class Kind { at_critical, plus_delta, plus_5delta, explicit_value };

  Kind kind = Kind::at_critical;
  double value = 1.0;  // used by explicit_value only

  static FieldMode at_critical() { return {Kind::at_critical, 1.0}; }
  static FieldMode plus_delta() { return {Kind::plus_delta, 1.0}; }
  static FieldMode plus_5delta() { return {Kind::plus_5delta, 1.0}; }
  static FieldMode explicit_field(double g) { return {Kind::explicit_value, g}; }

  /// g = 1, 1 + |delta|, 1 + 5|delta| or the explicit value.
  double resolve(double delta) const;
};

/// Parameters held fixed during a sweep; the swept one is ignored. The
/// field comes from the FieldMode.
struct SweepParams {
  std::int64_t size = 0;
  double delta = 0.0;
};

struct SweepPoint {
  double x = 0.0;
  double log_f = 0.0;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::size;
  std::vector<SweepPoint> points;
  SweepParams meta;
  FieldMode mode;
};

struct SlopePoint {
  double x = 0.0;
  double slope = 0.0;
};

struct FitResult {
  double prefactor_a = 0.0;
  double exponent_b = 0.0;
  double stderr_b = 0.0;
  std::vector<double> residuals;  // ln y - ln(a x^-b), per input point
};

/// One log_fidelity evaluation per grid point. On the field axis the grid
/// value is g and the mode is ignored. Errors from ising-core are rethrown
/// with the failing grid point named.
SweepTable sweep(SweepAxis axis, const SweepParams& fixed,
                 std::span<const double> grid, FieldMode mode);

/// d ln(-ln F) / d ln x: centered differences inside, one-sided at the ends.
std::vector<SlopePoint> local_slope(const SweepTable& table);

/// Even chain sizes, geometric from lo to hi with `per_two_decades` points per
/// factor 100, rounded to even integers and deduplicated.
std::vector<double> crossover_grid(double delta, int per_two_decades = 25);

/// x where the slope sequence first crosses target_slope from above, by
/// linear interpolation in (ln x, slope). The slope must be non-increasing
/// for two points either side of the crossing.
double locate_crossover(std::span<const SlopePoint> slopes, double target_slope);

/// N where the local slope of the size sweep crosses target_slope, located
/// by linear interpolation in (ln N, slope).
double find_crossover(double delta, FieldMode mode, double target_slope = 1.5);

/// OLS of ln y on ln x: y = a x^-b.
FitResult fit_power_law(std::span<const std::pair<double, double>> points);

/// max |(-ln F(N, 1 + c|delta|, delta) / (N|delta|)) - A(c)| over the grid.
double collapse_residuals(std::span<const double> deltas,
                          std::span<const double> c_grid, std::int64_t n);

}  // namespace tfim::analysis

#endif  // TFIM_ANALYSIS_HPP
