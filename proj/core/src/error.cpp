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

#include "tfim/error.hpp"

namespace tfim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain:
      return "domain error";
    case ErrorKind::regime:
      return "regime error";
    case ErrorKind::numerical:
      return "numerical error";
    case ErrorKind::resource:
      return "resource error";
    case ErrorKind::precision:
      return "precision error";
    case ErrorKind::range:
      return "range error";
    case ErrorKind::data_quality:
      return "data-quality error";
    case ErrorKind::arity:
      return "arity error";
    case ErrorKind::degenerate:
      return "degenerate-data error";
  }
  return "error";
}

void throw_error(ErrorKind kind, const std::string& what,
                 std::optional<double> value) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what, value);
}

}  // namespace tfim
