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

#ifndef TFIM_ELLIPTIC_HPP
#define TFIM_ELLIPTIC_HPP

#include <complex>

/// Complete elliptic integrals on the whole real parameter line, assembled
/// from Carlson's symmetric forms evaluated by argument duplication over
/// the complex numbers (Carlson, Numer. Algorithms 10, 13 (1995); DLMF 19.36).
///
/// Legendre integrals use the parameter convention m = k^2:
///   K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt,
///   E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt.
namespace tfim::elliptic {

using Complex = std::complex<double>;

struct EllipticConfig {
  double rel_tol = 1e-12;  // stop duplicating once the relative spread is below
  int max_iter = 100;

  /// Domain error unless 0 < rel_tol <= 1e-8 and max_iter >= 20.
  void validate() const;
};

/// R_F(x,y,z) = 1/2 int_0^inf [(t+x)(t+y)(t+z)]^{-1/2} dt.
///
/// At most one argument may be zero. An argument on the negative real axis
/// is taken as the limit from the side given by the sign of its (zero)
/// imaginary part, so Complex(-a, +0.0) and Complex(-a, -0.0) select the two
/// continuations.
Complex carlson_rf(Complex x, Complex y, Complex z,
                   const EllipticConfig& config = {});

/// R_D(x,y,z) = 3/2 int_0^inf [(t+x)(t+y)]^{-1/2} (t+z)^{-3/2} dt; z != 0.
Complex carlson_rd(Complex x, Complex y, Complex z,
                   const EllipticConfig& config = {});

/// R_G(x,y,z), from R_F and R_D (DLMF 19.21.10). Same argument rules as R_F.
Complex carlson_rg(Complex x, Complex y, Complex z,
                   const EllipticConfig& config = {});

/// K(m) = R_F(0, 1 - m, 1) for m < 1.
double ellip_k(double m, const EllipticConfig& config = {});

/// E(m) = 2 R_G(0, 1 - m, 1). Real for m <= 1; for m > 1 the argument 1 - m
/// is taken just above the cut, which gives Im E(m) > 0.
Complex ellip_e(double m, const EllipticConfig& config = {});

}  // namespace tfim::elliptic

#endif  // TFIM_ELLIPTIC_HPP
