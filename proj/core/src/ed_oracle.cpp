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

#include "tfim/ed_oracle.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "tfim/error.hpp"

namespace tfim {
namespace {

using State = std::uint32_t;

State rotate(State s, int n) {
  const State mask = (State{1} << n) - 1;
  return ((s << 1) | (s >> (n - 1))) & mask;
}

// Smallest pattern in the translation orbit of s, and the orbit length.
std::pair<State, int> representative(State s, int n) {
  State best = s;
  State t = s;
  for (int j = 1; j <= n; ++j) {
    t = rotate(t, n);
    if (t == s) return {best, j};
    best = std::min(best, t);
  }
  return {best, n};
}

struct OrbitBasis {
  std::vector<State> reps;
  std::vector<int> orbit_size;
  std::unordered_map<State, int> index;
};

// Even spin-flip parity means an even number of down spins (set bits).
OrbitBasis even_zero_momentum_basis(int n) {
  OrbitBasis basis;
  const State count = State{1} << n;
  for (State s = 0; s < count; ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    const auto [rep, size] = representative(s, n);
    if (rep != s) continue;
    basis.index.emplace(s, static_cast<int>(basis.reps.size()));
    basis.reps.push_back(s);
    basis.orbit_size.push_back(size);
  }
  return basis;
}

Eigen::MatrixXd block_hamiltonian(const OrbitBasis& basis, int n, double g) {
  const auto dim = static_cast<Eigen::Index>(basis.reps.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const State s = basis.reps[static_cast<std::size_t>(a)];
    const int la = basis.orbit_size[static_cast<std::size_t>(a)];
    // -g sum_i sz_i, with sz = +1 for a clear bit.
    h(a, a) += -g * static_cast<double>(n - 2 * std::popcount(s));
    // -sum_i sx_i sx_{i+1} flips the bond pair; for N = 2 both bonds act on
    // the same pair and add up.
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const State flipped = s ^ (State{1} << i) ^ (State{1} << j);
      const auto [rep, size] = representative(flipped, n);
      const int b = basis.index.at(rep);
      h(b, a) += -std::sqrt(static_cast<double>(la) / size);
    }
  }
  return h;
}

}  // namespace

EdGroundState ed_even_ground_state(int n, double g) {
  if (n > kMaxOracleSize) {
    throw_error(ErrorKind::resource,
                "exact diagonalization is limited to N <= 12, got " +
                    std::to_string(n));
  }
  if (n < 2 || n % 2 != 0) {
    throw_error(ErrorKind::domain,
                "exact diagonalization needs even N >= 2, got " +
                    std::to_string(n));
  }
  if (!std::isfinite(g)) throw_error(ErrorKind::domain, "field g must be finite");

  const OrbitBasis basis = even_zero_momentum_basis(n);
  const Eigen::MatrixXd h = block_hamiltonian(basis, n, g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw_error(ErrorKind::numerical, "dense eigensolver did not converge");
  }

  EdGroundState out;
  const auto& values = solver.eigenvalues();
  out.energy = values(0);
  out.gap = values.size() > 1 ? values(1) - values(0)
                              : std::numeric_limits<double>::infinity();
  if (out.gap < 1e-12) {
    throw_error(ErrorKind::precision,
                "lowest even-sector pair is degenerate within 1e-12", out.gap);
  }

  Eigen::VectorXd v = solver.eigenvectors().col(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  out.amplitudes.assign(v.data(), v.data() + v.size());
  return out;
}

double ed_oracle_fidelity(int n, double g, double delta) {
  if (!(std::abs(g) >= 0.3)) {
    throw_error(ErrorKind::domain,
                "oracle requires |g| >= 0.3 to resolve the parity splitting");
  }
  if (!std::isfinite(delta)) {
    throw_error(ErrorKind::domain, "half-difference delta must be finite");
  }
  const EdGroundState lower = ed_even_ground_state(n, g - delta);
  const EdGroundState upper = ed_even_ground_state(n, g + delta);
  double overlap = 0.0;
  for (std::size_t i = 0; i < lower.amplitudes.size(); ++i) {
    overlap += lower.amplitudes[i] * upper.amplitudes[i];
  }
  return std::min(1.0, std::abs(overlap));
}

}  // namespace tfim
