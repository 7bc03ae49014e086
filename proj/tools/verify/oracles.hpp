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

#ifndef TFIM_VERIFY_ORACLES_HPP
#define TFIM_VERIFY_ORACLES_HPP

// Reference evaluations that share no code path with the Carlson engine.
namespace tfim::verify {

/// K(m) = pi / (2 AGM(1, sqrt(1 - m))), m < 1.
double agm_ellip_k(double m);

/// E(m) from the AGM with the Gauss-Legendre c_n sum, m < 1.
double agm_ellip_e(double m);

/// Adaptive quadrature of the defining integrals, m < 1.
double quadrature_ellip_k(double m);
double quadrature_ellip_e(double m);

/// int over the arc where 1 - m sin^2 t < 0 of sqrt(m sin^2 t - 1), m > 1:
/// the magnitude of Im E(m).
double quadrature_abs_im_ellip_e(double m);

}  // namespace tfim::verify

#endif  // TFIM_VERIFY_ORACLES_HPP
