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

#include "tfim/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tfim/elliptic.hpp"
#include "tfim/error.hpp"
#include "tfim/ising.hpp"

namespace tfim::scaling {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPinchValue = (kPi - 2.0) / (4.0 * kPi);

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw_error(ErrorKind::domain, std::string(name) + " must be finite");
  }
}

bool at_pinch(double abs_c) {
  return std::abs(abs_c - 1.0) <= kPinchTolerance;
}

double a_value(double c) {
  const double x = std::abs(c);
  if (at_pinch(x)) return kPinchValue;
  const double gap = x - 1.0;
  const double c1 = -4.0 * x / (gap * gap);
  const double c2 = (x + 1.0) * (x + 1.0) / (gap * gap);
  const double k_term = x * elliptic::ellip_k(c1) / (2.0 * kPi);
  const double e_term = gap * elliptic::ellip_e(c2).imag() / (4.0 * kPi);
  if (x <= 1.0) return 0.25 + k_term + e_term;
  return 0.25 * x - k_term - e_term;
}

void require_scaling_window(double g, double delta) {
  if (std::abs(delta) > 0.05) {
    throw_error(ErrorKind::regime,
                "scaling law needs |delta| <= 0.05, got |delta| = " +
                    std::to_string(std::abs(delta)));
  }
  if (std::abs(g - 1.0) > 0.05) {
    throw_error(ErrorKind::regime,
                "scaling law needs |g - 1| <= 0.05, got |g - 1| = " +
                    std::to_string(std::abs(g - 1.0)));
  }
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::inner:
      return "inner";
    case Regime::outer:
      return "outer";
    case Regime::pinch:
      return "pinch";
  }
  return "unknown";
}

std::string_view to_string(Formula formula) {
  switch (formula) {
    case Formula::scaling_law:
      return "scaling_law";
    case Formula::away:
      return "away";
    case Formula::susceptibility:
      return "susceptibility";
  }
  return "unknown";
}

ScalingEval scaling_a(double c) {
  require_finite(c, "scaled distance c");
  ScalingEval out;
  out.c = c;
  out.a_value = a_value(c);
  const double x = std::abs(c);
  if (at_pinch(x)) {
    out.regime = Regime::pinch;
    out.da_dc = -std::numeric_limits<double>::infinity();
    out.da_dc_infinite = true;
  } else {
    out.regime = x < 1.0 ? Regime::inner : Regime::outer;
    out.da_dc = scaling_a_derivative(c, max_derivative_step(c));
  }
  return out;
}

double scaling_a_asymptotic(double c) {
  require_finite(c, "scaled distance c");
  if (!(std::abs(c) > 1.0)) {
    throw_error(ErrorKind::domain,
                "asymptotic form 1/(16|c|) applies only for |c| > 1");
  }
  return 1.0 / (16.0 * std::abs(c));
}

double max_derivative_step(double c) {
  return std::min(1e-4, std::abs(1.0 - std::abs(c)) / 10.0);
}

double scaling_a_derivative(double c, double h) {
  require_finite(c, "scaled distance c");
  if (at_pinch(std::abs(c))) {
    throw_error(ErrorKind::domain, "dA/dc diverges at |c| = 1");
  }
  if (!(h > 0.0 && h <= max_derivative_step(c))) {
    throw_error(ErrorKind::domain,
                "step h must satisfy 0 < h <= min(1e-4, |1 - |c||/10)");
  }
  return (a_value(c + h) - a_value(c - h)) / (2.0 * h);
}

Prediction predict_log_fidelity(double g, double delta, std::int64_t n,
                                Formula formula) {
  require_finite(g, "field g");
  require_finite(delta, "half-difference delta");
  Prediction out;
  out.formula = formula;
  if (delta == 0.0) return out;

  const double nd = static_cast<double>(n);
  const double eps = g - 1.0;
  switch (formula) {
    case Formula::scaling_law:
      require_scaling_window(g, delta);
      out.log_f_predicted =
          -nd * std::abs(delta) * a_value(eps / std::abs(delta));
      break;
    case Formula::away:
      if (!(std::abs(eps) >= 10.0 * std::abs(delta))) {
        throw_error(ErrorKind::regime,
                    "away-from-criticality form needs |g - 1| >= 10 |delta|");
      }
      out.log_f_predicted = -nd * delta * delta / (16.0 * std::abs(eps));
      break;
    case Formula::susceptibility:
      if (!(nd * std::abs(delta) <= 0.1)) {
        throw_error(ErrorKind::regime,
                    "susceptibility form needs N |delta| <= 0.1");
      }
      out.log_f_predicted =
          -delta * delta * fidelity_susceptibility(g, n) / 2.0;
      break;
  }
  return out;
}

double scaling_parameter(double g, double delta) {
  require_finite(g, "field g");
  require_finite(delta, "half-difference delta");
  require_scaling_window(g, delta);
  if (delta == 0.0) return 0.0;
  return std::abs(delta) * a_value((g - 1.0) / std::abs(delta));
}

double thermodynamic_ratio(std::int64_t n, double g, double delta) {
  const double distance =
      std::max(std::abs(g + delta - 1.0), std::abs(g - delta - 1.0));
  return static_cast<double>(n) * distance;
}

}  // namespace tfim::scaling
