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

#include "tfim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "tfim/error.hpp"
#include "tfim/ising.hpp"
#include "tfim/scaling.hpp"

namespace tfim::analysis {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_even_integer(double x) {
  return std::floor(x) == x && std::fmod(x, 2.0) == 0.0;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::size:
      return "size";
    case SweepAxis::delta:
      return "delta";
    case SweepAxis::field:
      return "g";
  }
  return "unknown";
}

double FieldMode::resolve(double delta) const {
  switch (kind) {
    case Kind::at_critical:
      return 1.0;
    case Kind::plus_delta:
      return 1.0 + std::abs(delta);
    case Kind::plus_5delta:
      return 1.0 + 5.0 * std::abs(delta);
    case Kind::explicit_value:
      return value;
  }
  return value;
}

SweepTable sweep(SweepAxis axis, const SweepParams& fixed,
                 std::span<const double> grid, FieldMode mode) {
  if (grid.size() < 3) {
    throw_error(ErrorKind::arity, "a sweep needs at least 3 grid points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw_error(ErrorKind::domain, "sweep grid must be strictly increasing");
    }
  }

  SweepTable table;
  table.axis = axis;
  table.meta = fixed;
  table.mode = mode;
  table.points.reserve(grid.size());

  for (const double x : grid) {
    ChainSpec spec{fixed.size, 0.0, fixed.delta};
    switch (axis) {
      case SweepAxis::size:
        if (!is_even_integer(x)) {
          throw_error(ErrorKind::domain,
                      "size-axis grid entries must be even integers, got " +
                          format_double(x));
        }
        spec.size = static_cast<std::int64_t>(x);
        spec.field = mode.resolve(spec.half_diff);
        break;
      case SweepAxis::delta:
        spec.half_diff = x;
        spec.field = mode.resolve(x);
        break;
      case SweepAxis::field:
        spec.field = x;
        break;
    }
    try {
      table.points.push_back({x, log_fidelity(spec).log_f});
    } catch (const Error& e) {
      throw Error(e.kind(),
                  std::string(e.what()) + " (at grid point x = " +
                      format_double(x) + ")",
                  e.value());
    }
  }
  return table;
}

std::vector<SlopePoint> local_slope(const SweepTable& table) {
  const auto& pts = table.points;
  if (pts.size() < 3) {
    throw_error(ErrorKind::arity, "local slopes need at least 3 points");
  }
  std::vector<double> lx(pts.size());
  std::vector<double> ly(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(pts[i].x > 0.0)) {
      throw_error(ErrorKind::degenerate,
                  "log-log slope needs x > 0, got x = " +
                      format_double(pts[i].x));
    }
    if (!(pts[i].log_f < 0.0) || !std::isfinite(pts[i].log_f)) {
      throw_error(ErrorKind::degenerate,
                  "log-log slope needs finite ln F < 0, got " +
                      format_double(pts[i].log_f) + " at x = " +
                      format_double(pts[i].x));
    }
    lx[i] = std::log(pts[i].x);
    ly[i] = std::log(-pts[i].log_f);
  }

  const std::size_t n = pts.size();
  std::vector<SlopePoint> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    out[i] = {pts[i].x, (ly[hi] - ly[lo]) / (lx[hi] - lx[lo])};
  }
  return out;
}

std::vector<double> crossover_grid(double delta, int per_two_decades) {
  const double lo = 1e-2 / std::abs(delta);
  const double hi = 1e2 / std::abs(delta);
  const int count = 2 * per_two_decades + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(j) / (count - 1));
    const double even = std::max(2.0, 2.0 * std::round(0.5 * x));
    if (grid.empty() || even > grid.back()) grid.push_back(even);
  }
  return grid;
}

double find_crossover(double delta, FieldMode mode, double target_slope) {
  if (!(std::abs(delta) >= 1e-6 && std::abs(delta) <= 1e-2)) {
    throw_error(ErrorKind::domain,
                "crossover search needs 1e-6 <= |delta| <= 1e-2");
  }
  if (!(target_slope > 1.0 && target_slope < 2.0)) {
    throw_error(ErrorKind::domain, "target slope must lie in (1, 2)");
  }

  const std::vector<double> grid = crossover_grid(delta);
  const SweepTable table = sweep(SweepAxis::size, {0, delta}, grid, mode);
  return locate_crossover(local_slope(table), target_slope);
}

double locate_crossover(std::span<const SlopePoint> slopes, double target_slope) {
  const std::size_t n = slopes.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double s0 = slopes[i].slope;
    const double s1 = slopes[i + 1].slope;
    if (!(s0 >= target_slope && s1 < target_slope)) continue;

    const std::size_t first = i >= 2 ? i - 2 : 0;
    const std::size_t last = std::min(n - 1, i + 3);
    for (std::size_t j = first; j < last; ++j) {
      if (slopes[j + 1].slope > slopes[j].slope) {
        throw_error(ErrorKind::data_quality,
                    "local slope is not monotone across the crossing near x = " +
                        format_double(slopes[i].x));
      }
    }
    const double t = (s0 - target_slope) / (s0 - s1);
    const double l0 = std::log(slopes[i].x);
    const double l1 = std::log(slopes[i + 1].x);
    return std::exp(l0 + t * (l1 - l0));
  }
  throw_error(ErrorKind::range, "local slope never crosses " +
                                    format_double(target_slope) + " in the scanned range");
}

FitResult fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw_error(ErrorKind::arity, "power-law fit needs at least 3 points, got " +
                                      std::to_string(points.size()));
  }
  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0 && y > 0.0)) {
      throw_error(ErrorKind::domain, "power-law fit needs x > 0 and y > 0");
    }
    mean_x += std::log(x);
    mean_y += std::log(y);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - mean_y);
  }
  if (sxx == 0.0) {
    throw_error(ErrorKind::degenerate, "zero variance in ln x");
  }

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  FitResult fit;
  fit.prefactor_a = std::exp(intercept);
  fit.exponent_b = -slope;
  double ssr = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (intercept + slope * std::log(x));
    fit.residuals.push_back(r);
    ssr += r * r;
  }
  fit.stderr_b = std::sqrt(ssr / (n - 2.0) / sxx);
  return fit;
}

double collapse_residuals(std::span<const double> deltas,
                          std::span<const double> c_grid, std::int64_t n) {
  if (deltas.empty() || c_grid.empty()) {
    throw_error(ErrorKind::arity, "collapse needs at least one delta and one c");
  }
  const auto nd = static_cast<double>(n);
  for (const double delta : deltas) {
    if (delta == 0.0) {
      throw_error(ErrorKind::regime, "collapse excludes delta = 0");
    }
    if (!(nd * std::abs(delta) >= 10.0)) {
      throw_error(ErrorKind::regime, "collapse needs N |delta| >= 10, got " +
                                         format_double(nd * std::abs(delta)));
    }
    for (const double c : c_grid) {
      if (!(std::abs(delta) <= 0.05 && std::abs(c * delta) <= 0.05)) {
        throw_error(ErrorKind::regime,
                    "collapse needs |delta| <= 0.05 and |g - 1| <= 0.05");
      }
    }
  }

  double worst = 0.0;
  for (const double delta : deltas) {
    const double d = std::abs(delta);
    for (const double c : c_grid) {
      const double log_f = log_fidelity({n, 1.0 + c * d, delta}).log_f;
      const double numeric = -log_f / (nd * d);
      worst = std::max(worst, std::abs(numeric - scaling::scaling_a(c).a_value));
    }
  }
  return worst;
}

}  // namespace tfim::analysis
