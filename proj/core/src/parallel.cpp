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

#include "tfim/parallel.hpp"

namespace tfim {
namespace {

std::atomic<unsigned> g_worker_limit{0};

}  // namespace

void set_worker_limit(unsigned workers) noexcept { g_worker_limit = workers; }

unsigned worker_limit() noexcept {
  const unsigned limit = g_worker_limit.load();
  if (limit != 0) return limit;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace tfim
