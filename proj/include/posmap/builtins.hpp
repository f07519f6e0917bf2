// Copyright 2026 The posmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference witnesses and maps with known structure: the Choi-Lam map on
// H_3, an extremal 2x4 map with two rings of zeros, and the rank one
// preservers (identity, transposition, unitary conjugation).

#ifndef POSMAP_BUILTINS_HPP
#define POSMAP_BUILTINS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "posmap/bipartite.hpp"

namespace posmap {

/// kMap: the witness of the Choi-Lam map exactly as written, including its
/// factor 1/2, so the map is unital and trace preserving. kPaper: twice
/// that, whose partial transpose is the familiar integer matrix.
enum class WitnessScale { kMap, kPaper };

// ---- Choi-Lam ---------------------------------------------------------------

Witness choi_lam_witness(WitnessScale scale = WitnessScale::kMap);

/// Y = 1/2 [[X11+X33, -X12, -X13], [-X21, X11+X22, -X23], [-X31, -X32, X22+X33]].
ComplexMatrix choi_lam_map_linear(const ComplexMatrix& x);
HermitianMatrix choi_lam_map_apply(const HermitianMatrix& x);

/// phi(alpha, beta) = e1 + e^{i alpha} e2 + e^{i beta} e3 (norm sqrt 3).
ComplexVector choi_lam_continuum_vector(double alpha, double beta);

struct ContinuumPoint {
  HermitianMatrix rho;    // phi phi^dagger / 3, a pure state
  HermitianMatrix image;  // choi_lam_map_apply(rho) = (I - rho)/2
};

ContinuumPoint choi_lam_continuum(double alpha, double beta);

/// Section tangent to the continuum surface at alpha = beta = 0.
struct TangentSection {
  HermitianMatrix rho0;  // I/3
  HermitianMatrix rho1;  // rho(0, 0)
  HermitianMatrix rho2;  // rho1 + D(0, 0)
  double a;              // orthonormalizes the image of rho1 - rho0
  double b;              // orthonormalizes the image of rho2 - rho1
};

TangentSection choi_lam_tangent_section();

// ---- 2x4 extremal map ---------------------------------------------------------

/// The 19 decimal constants a_1..a_19 defining the 2x4 map, verbatim.
const std::array<std::string_view, 19>& horodecki_2x4_constant_strings();

/// Parsed a_1..a_19 (index 0 holds a_1).
const std::array<double, 19>& horodecki_2x4_constants();

/// B_0, B_1, B_2, B_3 as 4x4 Hermitian matrices.
const std::array<HermitianMatrix, 4>& horodecki_2x4_basis();

/// u B_0 + x B_1 + y B_2 + z B_3, the image of (1/2)[[u+z, x-iy], [x+iy, u-z]].
HermitianMatrix horodecki_2x4_map_apply(double u, double x, double y, double z);

/// Witness with m = 2, n = 4.
Witness horodecki_2x4_witness();

// ---- ring parametrization of the 2x4 zeros -----------------------------------

struct RingParams {
  double a = 0.1807362587783353;
  double b = 0.047422228589395;
  double theta0 = 1.121090508802759;
};

enum class Branch { kPlus, kMinus };

struct BlochPoint {
  double x;
  double y;
  double z;
};

/// Point on a ring of zeros. Within 1e-9 of a singular angle
/// theta = theta0 + pi/2 (mod pi) the analytic limit (0, 0, +-1) is returned,
/// taking the side theta -> theta_s from below.
BlochPoint ring_zero(double theta, Branch branch, const RingParams& p = {});

/// The eight zeros shared by every ring family member: both branches at
/// theta in {0, pi/3, -pi/3}, then (0,0,1) and (0,0,-1). Throws if the six
/// theta points move by more than 1e-10 when theta0 is shifted by 0.3.
std::vector<BlochPoint> ring_common_zeros(const RingParams& p = {});

/// Bloch coordinates (x, y, z) of phi phi^dagger for a unit phi in C^2.
BlochPoint bloch_coordinates(const ComplexVector& phi);

// ---- rank one preservers -----------------------------------------------------

Witness identity_witness(int k);
Witness transposition_witness(int k);
/// Witness of X -> U X U^dagger; throws unless U is unitary to 1e-10.
Witness unitary_conjugation_witness(const ComplexMatrix& u);

}  // namespace posmap

#endif  // POSMAP_BUILTINS_HPP
