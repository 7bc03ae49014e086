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

#include "acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "tfim/analysis.hpp"
#include "tfim/ed_oracle.hpp"
#include "tfim/elliptic.hpp"
#include "tfim/ising.hpp"
#include "tfim/scaling.hpp"

namespace tfim::verify {
namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double log_f(std::int64_t n, double g, double delta) {
  return log_fidelity({n, g, delta}).log_f;
}

double rel_dev(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// Geometric grid through 10^lo_exp ... 10^hi_exp with `per_decade` points
// per decade; every power of ten is an exact grid point.
std::vector<double> decade_grid(int lo_exp, int hi_exp, int per_decade) {
  std::vector<double> grid;
  for (int j = 0; j <= (hi_exp - lo_exp) * per_decade; ++j) {
    grid.push_back(std::pow(10.0, lo_exp + static_cast<double>(j) / per_decade));
  }
  return grid;
}

double slope_at(const std::vector<analysis::SlopePoint>& slopes, double x) {
  const auto it = std::min_element(
      slopes.begin(), slopes.end(), [x](const auto& a, const auto& b) {
        return std::abs(std::log(a.x / x)) < std::abs(std::log(b.x / x));
      });
  return it->slope;
}

CriterionResult oracle_equivalence() {
  CriterionResult r{1, "oracle-equivalence", 0.0, "max |F_product - F_ED| < 1e-10"};
  double worst = 0.0;
  for (const int n : {4, 6, 8, 10, 12}) {
    for (const double g : {0.5, 1.0, 1.5, 2.0}) {
      for (const double delta : {0.05, 0.1, 0.3}) {
        const double product = log_fidelity({n, g, delta}).f;
        const double exact = ed_oracle_fidelity(n, g, delta);
        worst = std::max(worst, std::abs(product - exact));
      }
    }
  }
  r.measured = worst;
  r.pass = worst < 1e-10;
  r.detail = "60 (N, g, delta) combinations";
  return r;
}

CriterionResult critical_decay() {
  CriterionResult r{2, "critical-point-decay", 0.0,
                    "|ln F + 5| / 5 < 0.02 at N=2e5, g=1, delta=1e-4"};
  const double value = log_f(200'000, 1.0, 1e-4);
  r.measured = rel_dev(value, -5.0);
  r.pass = r.measured < 0.02;
  r.detail = "ln F = " + num(value) + ", N|delta|/4 = 5";
  return r;
}

CriterionResult pinch_value() {
  CriterionResult r{3, "pinch-value", 0.0,
                    "|ln F + N|delta|(pi-2)/4pi| / |ln F| < 0.02"};
  const std::int64_t n = 200'000;
  const double delta = 1e-4;
  const double value = log_f(n, 1.0 + delta, delta);
  const double predicted = -static_cast<double>(n) * delta * (kPi - 2.0) / (4.0 * kPi);
  r.measured = std::abs(value - predicted) / std::abs(value);
  r.pass = r.measured < 0.02;
  r.detail = "ln F = " + num(value) + ", predicted " + num(predicted);
  return r;
}

CriterionResult scaling_function_oracle() {
  CriterionResult r{4, "scaling-function-oracle", 0.0,
                    "max_c |A(c) + ln F/(N|delta|)| < 1e-3, c in [-3,3] x25"};
  const std::int64_t n = 200'000;
  const double delta = 1e-4;
  std::vector<double> c_grid;
  for (int i = 0; i < 25; ++i) c_grid.push_back(-3.0 + 0.25 * i);
  r.measured = analysis::collapse_residuals(std::array{delta}, c_grid, n);
  r.pass = r.measured < 1e-3;

  double inner = 0.0;
  double outer = 0.0;
  for (const double c : c_grid) {
    const double numeric = -log_f(n, 1.0 + c * delta, delta) / (n * delta);
    const double res = std::abs(numeric - scaling::scaling_a(c).a_value);
    if (std::abs(c) < 1.0) {
      inner = std::max(inner, res);
    } else {
      outer = std::max(outer, res);
    }
  }
  r.detail = "max residual |c|<1: " + num(inner) + ", |c|>=1: " + num(outer);
  return r;
}

CriterionResult crossover_exponent() {
  CriterionResult r{5, "crossover-exponent", 0.0, "b in [0.985, 1.005] for all g-modes"};
  const std::array deltas{1e-3, 3e-4, 1e-4, 3e-5};
  const std::array<std::pair<const char*, analysis::FieldMode>, 3> modes{{
      {"critical", analysis::FieldMode::at_critical()},
      {"plus-delta", analysis::FieldMode::plus_delta()},
      {"plus-5delta", analysis::FieldMode::plus_5delta()},
  }};
  double worst = 0.995;
  bool pass = true;
  for (const auto& [label, mode] : modes) {
    std::vector<std::pair<double, double>> points;
    for (const double delta : deltas) {
      points.emplace_back(delta, analysis::find_crossover(delta, mode));
    }
    const auto fit = analysis::fit_power_law(points);
    const double b = fit.exponent_b;
    pass = pass && b >= 0.985 && b <= 1.005;
    if (std::abs(b - 0.995) > std::abs(worst - 0.995)) worst = b;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + label + ": b=" +
                num(b) + " a=" + num(fit.prefactor_a);
  }
  r.measured = worst;
  r.pass = pass;
  return r;
}

CriterionResult regime_slopes() {
  CriterionResult r{6, "regime-slopes", 0.0,
                    "slope in [1.8,2.0] at N|delta|=0.1, in [1.0,1.1] at N|delta|=100"};
  const double delta = 1e-4;
  std::vector<double> sizes;
  for (const double x : decade_grid(2, 7, 10)) sizes.push_back(2.0 * std::round(0.5 * x));
  const auto by_size = analysis::local_slope(analysis::sweep(
      analysis::SweepAxis::size, {0, delta}, sizes, analysis::FieldMode::at_critical()));
  const double small_n = slope_at(by_size, 1e3);
  const double large_n = slope_at(by_size, 1e6);

  const auto by_delta = analysis::local_slope(
      analysis::sweep(analysis::SweepAxis::delta, {100'000, 0.0}, decade_grid(-7, -2, 10),
                      analysis::FieldMode::at_critical()));
  const double small_d = slope_at(by_delta, 1e-6);
  const double large_d = slope_at(by_delta, 1e-3);

  auto in = [](double x, double lo, double hi) { return x >= lo && x <= hi; };
  const bool checks[] = {in(small_n, 1.8, 2.0), in(large_n, 1.0, 1.1),
                         in(small_d, 1.8, 2.0), in(large_d, 1.0, 1.1)};
  r.pass = std::all_of(std::begin(checks), std::end(checks), [](bool b) { return b; });
  // Report the value furthest outside (or closest to the edge of) its band.
  const std::array<std::pair<double, std::pair<double, double>>, 4> all{{
      {small_n, {1.8, 2.0}}, {large_n, {1.0, 1.1}}, {small_d, {1.8, 2.0}}, {large_d, {1.0, 1.1}}}};
  double margin = 1e300;
  for (const auto& [v, band] : all) {
    const double m = std::min(v - band.first, band.second - v);
    if (m < margin) {
      margin = m;
      r.measured = v;
    }
  }
  r.detail = "N-axis: slope(1e3)=" + num(small_n) + " slope(1e6)=" + num(large_n) +
             "; delta-axis at N=1e5: slope(1e-6)=" + num(small_d) +
             " slope(1e-3)=" + num(large_d);
  return r;
}

CriterionResult away_from_criticality() {
  CriterionResult r{7, "away-from-criticality", 0.0,
                    "|ln F + N delta^2/(16*0.1)| / |ln F| < 0.05"};
  const std::int64_t n = 1'000'000;
  const double delta = 1e-5;
  const double value = log_f(n, 1.1, delta);
  const double predicted =
      scaling::predict_log_fidelity(1.1, delta, n, scaling::Formula::away).log_f_predicted;
  r.measured = std::abs(value - predicted) / std::abs(value);
  r.pass = r.measured < 0.05;
  r.detail = "ln F = " + num(value) + ", predicted " + num(predicted);
  return r;
}

CriterionResult susceptibility_limits() {
  CriterionResult r{8, "susceptibility-limits", 0.0,
                    "Taylor rel < 1e-3; chi(1,1e4) and chi(1.1,1e6) within 5%"};
  double taylor = 0.0;
  const std::array<std::pair<std::int64_t, double>, 3> small{
      {{1'000, 1e-5}, {10'000, 1e-6}, {100'000, 1e-7}}};
  for (const auto& [n, delta] : small) {
    for (const double g : {0.5, 0.9, 1.0, 1.1, 2.0}) {
      const double value = log_f(n, g, delta);
      const double chi = fidelity_susceptibility(g, n);
      taylor = std::max(taylor, std::abs(value + delta * delta * chi / 2.0) / std::abs(value));
    }
  }
  const double critical = rel_dev(fidelity_susceptibility(1.0, 10'000), 1e8 / 8.0);
  const double away = rel_dev(fidelity_susceptibility(1.1, 1'000'000), 1e6 / 0.8);
  r.pass = taylor < 1e-3 && critical < 0.05 && away < 0.05;
  r.measured = std::max({taylor / 1e-3, critical / 0.05, away / 0.05});
  r.bound = "worst (deviation / tolerance) < 1";
  r.detail = "Taylor rel " + num(taylor) + ", chi(1,1e4) rel " + num(critical) +
             ", chi(1.1,1e6) rel " + num(away);
  return r;
}

CriterionResult log_divergence() {
  CriterionResult r{9, "log-divergence", 0.0,
                    "slope vs ln|1-c| = 1/4pi within 2%; jump = 1/4 within 2%"};
  std::vector<std::pair<double, double>> xy;
  for (int j = 2; j <= 6; ++j) {
    const double c = 1.0 - std::pow(10.0, -j);
    xy.emplace_back(std::log(1.0 - c),
                    scaling::scaling_a_derivative(c, scaling::max_derivative_step(c)));
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= xy.size();
  my /= xy.size();
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  const double slope = sxy / sxx;
  const double slope_dev = rel_dev(slope, 1.0 / (4.0 * kPi));

  const double eps = 1e-6;
  const double above = scaling::scaling_a_derivative(1.0 + eps, scaling::max_derivative_step(1.0 + eps));
  const double below = scaling::scaling_a_derivative(1.0 - eps, scaling::max_derivative_step(1.0 - eps));
  const double jump_dev = rel_dev(above - below, 0.25);

  r.measured = std::max(slope_dev, jump_dev);
  r.bound = "max(rel slope dev, rel jump dev) < 0.02";
  r.pass = slope_dev < 0.02 && jump_dev < 0.02;
  r.detail = "slope*4pi = " + num(slope * 4.0 * kPi) + ", jump = " + num(above - below);
  return r;
}

CriterionResult elliptic_layer() {
  CriterionResult r{10, "elliptic-layer", 0.0,
                    "Legendre rel < 1e-9; AGM rel < 1e-10; Im E -> 0 at m -> 1+"};
  double legendre = 0.0;
  for (const double m : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double mc = 1.0 - m;
    const double k = elliptic::ellip_k(m);
    const double kc = elliptic::ellip_k(mc);
    const double e = elliptic::ellip_e(m).real();
    const double ec = elliptic::ellip_e(mc).real();
    legendre = std::max(legendre, rel_dev(e * kc + ec * k - k * kc, kPi / 2.0));
  }
  double agm = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double m = 0.99 * i / 99.0;
    agm = std::max(agm, rel_dev(elliptic::ellip_k(m), agm_ellip_k(m)));
  }
  // Im E(1 + eps) must fall monotonically to zero with eps.
  bool continuous = true;
  double previous = elliptic::ellip_e(1.1).imag();
  for (int j = 2; j <= 12; ++j) {
    const double im = elliptic::ellip_e(1.0 + std::pow(10.0, -j)).imag();
    continuous = continuous && im >= 0.0 && im < previous;
    previous = im;
  }
  continuous = continuous && previous < 1e-6;

  r.pass = legendre < 1e-9 && agm < 1e-10 && continuous;
  r.measured = std::max(legendre / 1e-9, agm / 1e-10);
  r.bound = "worst (deviation / tolerance) < 1 and Im E continuous";
  r.detail = "Legendre rel " + num(legendre) + ", AGM rel " + num(agm) +
             ", Im E(1+1e-12) = " + num(previous);
  return r;
}

CriterionResult small_system_collapse() {
  CriterionResult r{11, "small-system-collapse", 0.0,
                    "pairwise |dln F| < 1% of delta^2 N^2/16 at N=1e3, delta=1e-7"};
  const std::int64_t n = 1'000;
  const double delta = 1e-7;
  const double reference = delta * delta * static_cast<double>(n * n) / 16.0;
  const std::array values{log_f(n, 1.0, delta), log_f(n, 1.0 + delta, delta),
                          log_f(n, 1.0 + 5.0 * delta, delta)};
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      worst = std::max(worst, std::abs(values[i] - values[j]) / reference);
    }
  }
  r.measured = worst;
  r.pass = worst < 0.01;
  r.detail = "ln F = " + num(values[0]) + ", " + num(values[1]) + ", " + num(values[2]) +
             "; -delta^2 N^2/16 = " + num(-reference);
  return r;
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "oracle-equivalence", oracle_equivalence},
      {2, "critical-point-decay", critical_decay},
      {3, "pinch-value", pinch_value},
      {4, "scaling-function-oracle", scaling_function_oracle},
      {5, "crossover-exponent", crossover_exponent},
      {6, "regime-slopes", regime_slopes},
      {7, "away-from-criticality", away_from_criticality},
      {8, "susceptibility-limits", susceptibility_limits},
      {9, "log-divergence", log_divergence},
      {10, "elliptic-layer", elliptic_layer},
      {11, "small-system-collapse", small_system_collapse},
  };
}

CriterionResult run_criterion(const Criterion& criterion) {
  try {
    return criterion.run();
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = criterion.id;
    r.name = criterion.name;
    r.measured = std::nan("");
    r.bound = "criterion raised";
    r.detail = e.what();
    return r;
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) results.push_back(run_criterion(c));
  return results;
}

}  // namespace tfim::verify
