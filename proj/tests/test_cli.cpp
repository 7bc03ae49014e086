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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "csv.hpp"
#include "grid_spec.hpp"
#include "json.hpp"
#include "tfim/error.hpp"
#include "tfim/ising.hpp"
#include "tfim/parallel.hpp"

using doctest::Approx;
using nlohmann::json;
namespace cli = tfim::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fidelity");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

tfim::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const tfim::Error& e) {
    return e.kind();
  }
  FAIL("expected tfim::Error");
  return tfim::ErrorKind::domain;
}

}  // namespace

TEST_CASE("CSV round trip preserves every double bit for bit") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int trial = 0; trial < 200; ++trial) {
    cli::CsvTable table{{"a", "b", "c"}, {}};
    const int rows = 1 + trial % 7;
    for (int r = 0; r < rows; ++r) {
      std::vector<double> row;
      for (int c = 0; c < 3; ++c) row.push_back(std::ldexp(mantissa(rng), exponent(rng)));
      table.rows.push_back(row);
    }
    if (trial % 5 == 0) table.rows[0][0] = -0.0;
    if (trial % 11 == 0) table.rows[0][1] = 5e-324;
    std::stringstream buffer;
    cli::write_csv(buffer, table);
    const cli::CsvTable back = cli::read_csv(buffer);
    REQUIRE(back.header == table.header);
    REQUIRE(back.rows.size() == table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK(std::signbit(back.rows[r][c]) == std::signbit(table.rows[r][c]));
        CHECK(back.rows[r][c] == table.rows[r][c]);
      }
    }
  }
}

TEST_CASE("CSV special values and malformed input") {
  cli::CsvTable table{{"x", "y"}, {{std::nan(""), INFINITY}, {1.5, -INFINITY}}};
  std::stringstream buffer;
  cli::write_csv(buffer, table);
  const auto back = cli::read_csv(buffer);
  CHECK(std::isnan(back.rows[0][0]));
  CHECK(back.rows[0][1] == INFINITY);
  CHECK(back.rows[1][1] == -INFINITY);
  CHECK(cli::format_number(0.1) == "0.10000000000000001");

  std::istringstream ragged("x,y\n1,2\n3\n");
  CHECK(kind_of([&] { cli::read_csv(ragged); }) == tfim::ErrorKind::domain);
  std::istringstream junk("x\nabc\n");
  CHECK(kind_of([&] { cli::read_csv(junk); }) == tfim::ErrorKind::domain);
}

TEST_CASE("grid specifications") {
  const auto geo = cli::parse_grid_spec("10:1000:3:geometric");
  REQUIRE(geo.size() == 3);
  CHECK(geo[0] == 10);
  CHECK(geo[1] == Approx(100));
  CHECK(geo[2] == 1000);
  const auto lin = cli::parse_grid_spec("0.1:0.3:3:linear");
  CHECK(lin[0] == 0.1);
  CHECK(lin[1] == Approx(0.2));
  CHECK(lin[2] == 0.3);
  CHECK(kind_of([] { cli::parse_grid_spec("1:10:3"); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { cli::parse_grid_spec("1:10:1:linear"); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { cli::parse_grid_spec("-1:10:3:geometric"); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { cli::parse_grid_spec("1:x:3:linear"); }) == tfim::ErrorKind::domain);
  CHECK(kind_of([] { cli::parse_grid_spec("1:10:3:cubic"); }) == tfim::ErrorKind::domain);

  const auto even = cli::even_size_grid({3, 4, 4.9, 9.7, 1});
  CHECK(even == std::vector<double>{4, 10});
}

TEST_CASE("fidelity subcommand") {
  const auto r = invoke({"fidelity", "--size", "1000", "--g", "1.0", "--delta", "1e-3"});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["n"] == 1000);
  CHECK(doc["method"] == "mode_product");
  CHECK(doc["log_fidelity"].get<double>() == tfim::log_fidelity({1000, 1.0, 1e-3}).log_f);
  CHECK(doc["orthogonal"] == false);

  const auto oracle = invoke({"fidelity", "--size", "8", "--g", "1.1", "--delta", "0.05", "--oracle"});
  REQUIRE(oracle.code == cli::kExitOk);
  const auto odoc = json::parse(oracle.out);
  CHECK(odoc["method"] == "exact_diagonalization");
  CHECK(odoc["fidelity"].get<double>() ==
        Approx(tfim::log_fidelity({8, 1.1, 0.05}).f).epsilon(1e-10));

  const auto csv = invoke({"--format", "csv", "fidelity", "--size", "10", "--g", "1", "--delta", "0.1"});
  std::istringstream in(csv.out);
  const auto table = cli::read_csv(in);
  CHECK(table.header.front() == "n");
  CHECK(table.rows.size() == 1);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"fidelity", "--size", "7", "--g", "1", "--delta", "0.1"}).code == cli::kExitDomain);
  CHECK(invoke({"fidelity", "--size", "100", "--g", "1"}).code == cli::kExitDomain);
  CHECK(invoke({"bogus"}).code == cli::kExitDomain);
  CHECK(invoke({"fidelity", "--size", "20", "--g", "1", "--delta", "0.1", "--oracle"}).code ==
        cli::kExitDomain);
  const auto regime = invoke({"scaling-function", "--numeric", "--size", "100", "--delta", "0.2"});
  CHECK(regime.code == cli::kExitOk);  // A(c) itself has no regime restriction
  const auto arity = invoke({"crossover", "--delta-list", "1e-3,1e-4"});
  CHECK(arity.code == cli::kExitDomain);
  CHECK(arity.err.find("at least 3") != std::string::npos);
  CHECK(cli::exit_code_for(tfim::ErrorKind::regime) == cli::kExitRegime);
  CHECK(cli::exit_code_for(tfim::ErrorKind::numerical) == cli::kExitNumerical);
  CHECK(cli::exit_code_for(tfim::ErrorKind::domain) == cli::kExitDomain);
}

TEST_CASE("scan output") {
  const auto r = invoke({"scan", "--axis", "size", "--grid", "100:10000:5:geometric", "--delta", "1e-3"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  const auto table = cli::read_csv(in);
  CHECK(table.header == std::vector<std::string>{"x", "log_fidelity", "per_site", "local_slope"});
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows[0][0] == 100);
  CHECK(table.rows[0][1] == tfim::log_fidelity({100, 1.0, 1e-3}).log_f);
  CHECK(table.rows[0][3] == Approx(2.0).epsilon(0.01));
  CHECK(r.err.find("# scan") != std::string::npos);

  const auto flat = invoke({"scan", "--axis", "delta", "--grid", "0:0.01:3:linear", "--size", "100"});
  REQUIRE(flat.code == cli::kExitOk);
  std::istringstream flat_in(flat.out);
  CHECK(std::isnan(cli::read_csv(flat_in).rows[0][3]));

  CHECK(invoke({"scan", "--axis", "size", "--grid", "100:1000:3:geometric"}).code == cli::kExitDomain);
  CHECK(invoke({"scan", "--axis", "volume", "--grid", "1:2:3:linear", "--size", "4"}).code ==
        cli::kExitDomain);
}

TEST_CASE("scaling-function output") {
  const auto r = invoke({"scaling-function", "--c-min", "-2", "--c-max", "2", "--points", "5"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  const auto table = cli::read_csv(in);
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows[2][1] == Approx(0.25));
  CHECK(table.rows[0][1] == table.rows[4][1]);

  const auto pinch = invoke({"--format", "json", "scaling-function", "--c-min", "1", "--c-max", "1",
                             "--points", "1"});
  REQUIRE(pinch.code == cli::kExitOk);
  const auto doc = json::parse(pinch.out);
  CHECK(doc["rows"][0]["regime"] == "pinch");
  CHECK(doc["rows"][0]["da_dc"].is_null());  // JSON has no infinity
}

TEST_CASE("output file and thread determinism") {
  const auto path = std::filesystem::temp_directory_path() / "tfim_cli_test_output.csv";
  const std::vector<std::string> args{"--output", path.string(), "scan", "--axis", "size",
                                      "--grid", "1000:2000000:4:geometric", "--delta", "1e-4"};
  ::setenv("FIDELITY_THREADS", "1", 1);
  const auto single = invoke(args);
  REQUIRE(single.code == cli::kExitOk);
  CHECK(single.out.empty());
  std::ifstream first(path);
  const std::string one((std::istreambuf_iterator<char>(first)), {});

  ::setenv("FIDELITY_THREADS", "4", 1);
  REQUIRE(invoke(args).code == cli::kExitOk);
  std::ifstream second(path);
  const std::string four((std::istreambuf_iterator<char>(second)), {});
  CHECK(one == four);
  CHECK_FALSE(one.empty());

  ::setenv("FIDELITY_THREADS", "zero", 1);
  CHECK(invoke(args).code == cli::kExitDomain);
  ::unsetenv("FIDELITY_THREADS");
  tfim::set_worker_limit(0);
  std::filesystem::remove(path);
}

TEST_CASE("check subcommand reports every criterion and sets the exit code") {
  const auto r = invoke({"check"});
  const auto doc = json::parse(r.out);
  REQUIRE(doc["criteria"].size() == 11);
  bool all = true;
  for (const auto& c : doc["criteria"]) all = all && c["pass"].get<bool>();
  CHECK(doc["all_pass"] == all);
  CHECK(r.code == (all ? cli::kExitOk : cli::kExitCheckFailed));
  std::size_t lines = 0;
  for (const char ch : r.err) lines += ch == '\n';
  CHECK(lines == 11);
}
