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

#ifndef TFIM_ED_ORACLE_HPP
#define TFIM_ED_ORACLE_HPP

#include <vector>

namespace tfim {

inline constexpr int kMaxOracleSize = 12;

/// Lowest state of the periodic chain in the even spin-flip-parity sector,
/// expanded in the zero-momentum orbit basis (sz eigenstates, canonical
/// representative = smallest bit pattern of each translation orbit).
struct EdGroundState {
  std::vector<double> amplitudes;  // normalized, first nonzero entry > 0
  double energy = 0.0;
  double gap = 0.0;  // to the next level in the same block
};

/// Dense diagonalization of H(g) for 2 <= N <= 12 spins.
EdGroundState ed_even_ground_state(int n, double g);

/// |<g - delta | g + delta>| from two exact diagonalizations. Independent of
/// the free-fermion mode product; used as its oracle.
double ed_oracle_fidelity(int n, double g, double delta);

}  // namespace tfim

#endif  // TFIM_ED_ORACLE_HPP
