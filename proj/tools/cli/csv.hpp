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

#ifndef TFIM_CLI_CSV_HPP
#define TFIM_CLI_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tfim::cli {

/// Numeric table with a header row. Cells are written with 17 significant
/// digits, '.' decimal point, ',' separator and LF line endings, so a
/// write/read cycle reproduces every double exactly.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  bool operator==(const CsvTable&) const = default;
};

/// 17 significant digits; non-finite values are spelled nan, inf, -inf.
std::string format_number(double x);

void write_csv(std::ostream& out, const CsvTable& table);

/// Throws a domain error on malformed input (ragged rows, bad numbers).
CsvTable read_csv(std::istream& in);

}  // namespace tfim::cli

#endif  // TFIM_CLI_CSV_HPP
