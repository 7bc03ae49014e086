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

#ifndef TFIM_ERROR_HPP
#define TFIM_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tfim {

enum class ErrorKind {
  domain,        // argument outside the mathematical domain of an operation
  regime,        // asymptotic formula used outside its validity window
  numerical,     // iteration or quadrature failed to converge
  resource,      // request too large for the implementation (e.g. ED size)
  precision,     // result not resolvable in double precision
  range,         // searched quantity not found in the scanned range
  data_quality,  // input data do not have the shape an estimator requires
  arity,         // too few data points
  degenerate,    // data without spread (zero variance, zero values)
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<double> value = std::nullopt)
      : std::runtime_error(what), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Quantitative detail, e.g. the achieved tolerance of a failed quadrature.
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<double> value_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string& what,
                              std::optional<double> value = std::nullopt);

}  // namespace tfim

#endif  // TFIM_ERROR_HPP
