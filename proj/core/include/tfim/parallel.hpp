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

#ifndef TFIM_PARALLEL_HPP
#define TFIM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace tfim {

/// Caps the number of worker threads used by mode sums. 0 restores the
/// default (hardware concurrency).
void set_worker_limit(unsigned workers) noexcept;
unsigned worker_limit() noexcept;

/// Neumaier compensated accumulator. Non-finite terms are tracked apart so
/// that a -inf term yields -inf rather than NaN.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    if (!std::isfinite(x)) {
      special_ += x;
      return;
    }
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
    special_ += other.special_;
  }

  bool finite() const noexcept { return special_ == 0.0; }
  double value() const noexcept {
    return finite() ? sum_ + comp_ : special_;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double special_ = 0.0;
};

inline constexpr std::int64_t kSumBlockSize = std::int64_t{1} << 14;

/// Sums term(i) for i in [0, count). The index range is cut into blocks of
/// fixed size and block partials are merged in ascending order, so the
/// result is bit-identical for any worker count.
template <class Term>
CompensatedSum ordered_sum(std::int64_t count, const Term& term,
                           unsigned workers = worker_limit()) {
  const std::int64_t blocks = (count + kSumBlockSize - 1) / kSumBlockSize;
  std::vector<CompensatedSum> partial(static_cast<std::size_t>(blocks));
  auto run_block = [&](std::int64_t b) {
    CompensatedSum s;
    const std::int64_t end = std::min(count, (b + 1) * kSumBlockSize);
    for (std::int64_t i = b * kSumBlockSize; i < end; ++i) s.add(term(i));
    partial[static_cast<std::size_t>(b)] = s;
  };

  const auto used = static_cast<std::int64_t>(
      std::clamp<std::int64_t>(workers, 1, std::max<std::int64_t>(blocks, 1)));
  if (used <= 1) {
    for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(used));
    for (std::int64_t w = 0; w < used; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t b = next++; b < blocks; b = next++) run_block(b);
      });
    }
  }

  CompensatedSum total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace tfim

#endif  // TFIM_PARALLEL_HPP
