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

#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "csv.hpp"
#include "grid_spec.hpp"
#include "tfim/analysis.hpp"
#include "tfim/ed_oracle.hpp"
#include "tfim/ising.hpp"
#include "tfim/parallel.hpp"
#include "tfim/scaling.hpp"

namespace tfim::cli {
namespace {

using json = nlohmann::json;
using analysis::FieldMode;

enum class OutputFormat { csv, json };

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

FieldMode parse_field_mode(const std::string& text) {
  if (text == "critical") return FieldMode::at_critical();
  if (text == "plus-delta") return FieldMode::plus_delta();
  if (text == "plus-5delta") return FieldMode::plus_5delta();
  double g = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), g);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(g)) {
    throw_error(ErrorKind::domain,
                "--g-mode must be critical, plus-delta, plus-5delta or a number, got '" +
                    text + "'");
  }
  return FieldMode::explicit_field(g);
}

void apply_thread_limit() {
  const char* env = std::getenv("FIDELITY_THREADS");
  if (env == nullptr || *env == '\0') return;
  unsigned value = 0;
  const std::string text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw_error(ErrorKind::domain, "FIDELITY_THREADS must be a positive integer");
  }
  set_worker_limit(value);
}

// Where emitted data go.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw_error(ErrorKind::domain, "cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(Sink& sink, OutputFormat format, const CsvTable& table, const json& doc) {
  if (format == OutputFormat::csv) {
    write_csv(sink.stream(), table);
  } else {
    sink.stream() << doc.dump(2) << '\n';
  }
}

struct FidelityArgs {
  std::int64_t size = 0;
  double g = 1.0;
  double delta = 0.0;
  bool oracle = false;
};

struct ScanArgs {
  std::string axis;
  std::string grid;
  std::string g_mode = "critical";
  std::optional<std::int64_t> size;
  std::optional<double> delta;
};

struct ScalingArgs {
  double c_min = -3.0;
  double c_max = 3.0;
  long points = 25;
  bool numeric = false;
  std::optional<std::int64_t> size;
  std::optional<double> delta;
};

struct CrossoverArgs {
  std::vector<double> deltas;
  std::string g_mode = "critical";
};

void cmd_fidelity(const FidelityArgs& a, OutputFormat format, Sink& sink) {
  const ChainSpec spec{a.size, a.g, a.delta};
  spec.validate();
  FidelityValue value;
  if (a.oracle) {
    if (a.size > kMaxOracleSize) {
      throw_error(ErrorKind::resource, "--oracle is limited to N <= 12");
    }
    const double f = ed_oracle_fidelity(static_cast<int>(a.size), a.g, a.delta);
    value.f = f;
    value.log_f = std::log(f);
    value.orthogonal = f == 0.0;
    value.per_site = value.log_f / static_cast<double>(a.size);
  } else {
    value = log_fidelity(spec);
  }

  CsvTable table{{"n", "g", "delta", "log_fidelity", "fidelity", "per_site"},
                 {{static_cast<double>(a.size), a.g, a.delta, value.log_f, value.f,
                   value.per_site}}};
  json doc{{"n", a.size},
           {"g", a.g},
           {"delta", a.delta},
           {"log_fidelity", number(value.log_f)},
           {"fidelity", value.f},
           {"per_site", number(value.per_site)},
           {"orthogonal", value.orthogonal},
           {"method", a.oracle ? "exact_diagonalization" : "mode_product"}};
  emit(sink, format, table, doc);
}

void cmd_scan(const ScanArgs& a, OutputFormat format, Sink& sink, std::ostream& err) {
  analysis::SweepAxis axis{};
  if (a.axis == "size") {
    axis = analysis::SweepAxis::size;
  } else if (a.axis == "delta") {
    axis = analysis::SweepAxis::delta;
  } else if (a.axis == "g") {
    axis = analysis::SweepAxis::field;
  } else {
    throw_error(ErrorKind::domain, "--axis must be size, delta or g");
  }
  const FieldMode mode = parse_field_mode(a.g_mode);

  std::vector<double> grid = parse_grid_spec(a.grid);
  analysis::SweepParams fixed;
  if (axis == analysis::SweepAxis::size) {
    if (!a.delta) throw_error(ErrorKind::domain, "scan --axis size needs --delta");
    grid = even_size_grid(grid);
    fixed.delta = *a.delta;
  } else {
    if (!a.size) throw_error(ErrorKind::domain, "scan needs --size on this axis");
    fixed.size = *a.size;
    if (axis == analysis::SweepAxis::field) {
      if (!a.delta) throw_error(ErrorKind::domain, "scan --axis g needs --delta");
      fixed.delta = *a.delta;
    }
    // Check the fixed size before the first evaluation.
    ChainSpec{fixed.size, 1.0, 0.0}.validate();
  }

  err << "# scan axis=" << a.axis << " points=" << grid.size()
      << " threads=" << worker_limit() << '\n';
  const analysis::SweepTable sweep = analysis::sweep(axis, fixed, grid, mode);

  std::vector<double> slopes(sweep.points.size(), std::nan(""));
  try {
    const auto s = analysis::local_slope(sweep);
    for (std::size_t i = 0; i < s.size(); ++i) slopes[i] = s[i].slope;
  } catch (const Error& e) {
    err << "# local slope unavailable: " << e.what() << '\n';
  }

  CsvTable table{{"x", "log_fidelity", "per_site", "local_slope"}, {}};
  json rows = json::array();
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    const auto& p = sweep.points[i];
    const double n = axis == analysis::SweepAxis::size ? p.x : static_cast<double>(fixed.size);
    const double per_site = p.log_f / n;
    table.rows.push_back({p.x, p.log_f, per_site, slopes[i]});
    rows.push_back({{"x", p.x},
                    {"log_fidelity", number(p.log_f)},
                    {"per_site", number(per_site)},
                    {"local_slope", number(slopes[i])}});
  }
  json doc{{"axis", a.axis}, {"g_mode", a.g_mode}, {"rows", rows}};
  if (a.size) doc["size"] = *a.size;
  if (a.delta) doc["delta"] = *a.delta;
  emit(sink, format, table, doc);
}

void cmd_scaling_function(const ScalingArgs& a, OutputFormat format, Sink& sink) {
  if (a.points < 1 || (a.points == 1 && a.c_min != a.c_max)) {
    throw_error(ErrorKind::domain, "--points must be >= 2 unless --c-min == --c-max");
  }
  if (!(a.c_max >= a.c_min)) throw_error(ErrorKind::domain, "--c-max must be >= --c-min");
  if (a.numeric) {
    if (!a.size || !a.delta) {
      throw_error(ErrorKind::domain, "--numeric needs --size and --delta");
    }
    if (*a.delta == 0.0) throw_error(ErrorKind::domain, "--numeric needs delta != 0");
    ChainSpec{*a.size, 1.0, *a.delta}.validate();
  }

  CsvTable table{{"c", "a_analytic", "da_dc"}, {}};
  if (a.numeric) {
    table.header.push_back("a_numeric");
    table.header.push_back("residual");
  }
  json rows = json::array();
  for (long j = 0; j < a.points; ++j) {
    const double c = a.points == 1
                         ? a.c_min
                         : a.c_min + (a.c_max - a.c_min) * static_cast<double>(j) /
                                         static_cast<double>(a.points - 1);
    const scaling::ScalingEval eval = scaling::scaling_a(c);
    std::vector<double> row{c, eval.a_value, eval.da_dc};
    json entry{{"c", c},
               {"a_analytic", eval.a_value},
               {"da_dc", number(eval.da_dc)},
               {"regime", scaling::to_string(eval.regime)}};
    if (a.numeric) {
      const double d = std::abs(*a.delta);
      const double log_f = log_fidelity({*a.size, 1.0 + c * d, *a.delta}).log_f;
      const double numeric = -log_f / (static_cast<double>(*a.size) * d);
      row.push_back(numeric);
      row.push_back(numeric - eval.a_value);
      entry["a_numeric"] = number(numeric);
      entry["residual"] = number(numeric - eval.a_value);
    }
    table.rows.push_back(std::move(row));
    rows.push_back(std::move(entry));
  }
  json doc{{"rows", rows}};
  if (a.numeric) {
    doc["size"] = *a.size;
    doc["delta"] = *a.delta;
  }
  emit(sink, format, table, doc);
}

void cmd_crossover(const CrossoverArgs& a, OutputFormat format, Sink& sink,
                   std::ostream& err) {
  const FieldMode mode = parse_field_mode(a.g_mode);
  if (a.deltas.size() < 3) {
    throw_error(ErrorKind::arity, "crossover fit needs at least 3 deltas, got " +
                                      std::to_string(a.deltas.size()));
  }
  for (const double d : a.deltas) {
    if (!(std::abs(d) >= 1e-6 && std::abs(d) <= 1e-2)) {
      throw_error(ErrorKind::domain, "crossover deltas must satisfy 1e-6 <= |delta| <= 1e-2");
    }
  }

  std::vector<std::pair<double, double>> points;
  for (const double d : a.deltas) {
    err << "# crossover delta=" << format_number(d) << " threads=" << worker_limit() << '\n';
    points.emplace_back(std::abs(d), analysis::find_crossover(d, mode));
  }
  const analysis::FitResult fit = analysis::fit_power_law(points);

  CsvTable table{{"delta", "n_three_halves", "fit_a", "fit_b", "fit_stderr_b"}, {}};
  json per_delta = json::array();
  for (const auto& [d, n] : points) {
    table.rows.push_back({d, n, fit.prefactor_a, fit.exponent_b, fit.stderr_b});
    per_delta.push_back({{"delta", d}, {"n_three_halves", n}});
  }
  json doc{{"g_mode", a.g_mode},
           {"points", per_delta},
           {"fit", {{"a", fit.prefactor_a}, {"b", fit.exponent_b}, {"stderr_b", fit.stderr_b}}}};
  emit(sink, format, table, doc);
}

int cmd_check(Sink& sink, std::ostream& err) {
  json criteria = json::array();
  bool all_pass = true;
  for (const auto& criterion : verify::acceptance_criteria()) {
    const verify::CriterionResult r = verify::run_criterion(criterion);
    err << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << '\n';
    all_pass = all_pass && r.pass;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"measured", number(r.measured)},
                        {"bound", r.bound},
                        {"pass", r.pass},
                        {"detail", r.detail}});
  }
  json doc{{"criteria", criteria}, {"all_pass", all_pass}};
  sink.stream() << doc.dump(2) << '\n';
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::regime:
      return kExitRegime;
    case ErrorKind::numerical:
    case ErrorKind::precision:
    case ErrorKind::range:
    case ErrorKind::data_quality:
      return kExitNumerical;
    case ErrorKind::domain:
    case ErrorKind::resource:
    case ErrorKind::arity:
    case ErrorKind::degenerate:
      return kExitDomain;
  }
  return kExitDomain;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground-state fidelity of the transverse-field Ising chain", "fidelity"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_flag;
  std::string output_path;
  app.add_option("--format", format_flag, "csv or json (default depends on command)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", output_path, "write data to this file instead of stdout");

  FidelityArgs fid;
  auto* fid_cmd = app.add_subcommand("fidelity", "ln F for one (N, g, delta)");
  fid_cmd->add_option("--size", fid.size, "number of spins N (even)")->required();
  fid_cmd->add_option("--g", fid.g, "transverse field g")->required();
  fid_cmd->add_option("--delta", fid.delta, "half-difference delta")->required();
  fid_cmd->add_flag("--oracle", fid.oracle, "use exact diagonalization (N <= 12)");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "sweep N, delta or g");
  scan_cmd->add_option("--axis", scan.axis, "size, delta or g")->required();
  scan_cmd->add_option("--grid", scan.grid, "start:stop:count:geometric|linear")->required();
  scan_cmd->add_option("--g-mode", scan.g_mode, "critical, plus-delta, plus-5delta or a value");
  scan_cmd->add_option("--size", scan.size, "fixed N");
  scan_cmd->add_option("--delta", scan.delta, "fixed delta");

  ScalingArgs sf;
  auto* sf_cmd = app.add_subcommand("scaling-function", "A(c) and dA/dc on a linear c grid");
  sf_cmd->add_option("--c-min", sf.c_min);
  sf_cmd->add_option("--c-max", sf.c_max);
  sf_cmd->add_option("--points", sf.points);
  sf_cmd->add_flag("--numeric", sf.numeric, "add -ln F/(N|delta|) from the mode product");
  sf_cmd->add_option("--size", sf.size);
  sf_cmd->add_option("--delta", sf.delta);

  CrossoverArgs cross;
  auto* cross_cmd = app.add_subcommand("crossover", "N_{3/2} per delta and power-law fit");
  cross_cmd->add_option("--delta-list", cross.deltas, "comma-separated deltas")
      ->required()
      ->delimiter(',');
  cross_cmd->add_option("--g-mode", cross.g_mode);

  auto* check_cmd = app.add_subcommand("check", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "fidelity: " << e.what() << '\n';
    return kExitDomain;
  }

  auto format_for = [&](OutputFormat fallback) {
    if (format_flag == "csv") return OutputFormat::csv;
    if (format_flag == "json") return OutputFormat::json;
    return fallback;
  };

  try {
    apply_thread_limit();
    Sink sink(output_path, out);
    if (*fid_cmd) {
      cmd_fidelity(fid, format_for(OutputFormat::json), sink);
    } else if (*scan_cmd) {
      cmd_scan(scan, format_for(OutputFormat::csv), sink, err);
    } else if (*sf_cmd) {
      cmd_scaling_function(sf, format_for(OutputFormat::csv), sink);
    } else if (*cross_cmd) {
      cmd_crossover(cross, format_for(OutputFormat::json), sink, err);
    } else if (*check_cmd) {
      return cmd_check(sink, err);
    }
  } catch (const Error& e) {
    err << "fidelity: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "fidelity: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace tfim::cli
