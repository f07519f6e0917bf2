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

// Two dimensional sections through the set of density matrices.
//
// A plane through rho0, rho1, rho2 has traceless axes
//
//     B = a (rho1 - rho0),    C = b (rho2 - rho0) + c (rho1 - rho0)
//
// with a > 0, b > 0 and c fixed by Gram-Schmidt, either in the source
// (B, C orthonormal) or in the image of a map M (M B, M C orthonormal).
// A point (x, y) of the plane is X = rho0 + x B + y C, and because M is
// linear its image M X = M rho0 + x M B + y M C has the same coordinates
// in the image plane.

#ifndef POSMAP_SECTIONS_HPP
#define POSMAP_SECTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posmap/bipartite.hpp"

namespace posmap {

enum class Frame { kSource, kImage };

const char* to_string(Frame frame);

struct SectionPlane {
  int k = 0;
  HermitianMatrix rho0, rho1, rho2;
  HermitianMatrix b_axis, c_axis;
  double a = 0.0, b = 0.0, c = 0.0;
  Frame frame = Frame::kSource;

  /// Present when the plane was built with a map.
  std::optional<Witness> witness;
  HermitianMatrix image_rho0, image_b_axis, image_c_axis;

  /// Origin and axes of the declared frame.
  const HermitianMatrix& origin() const { return frame == Frame::kSource ? rho0 : image_rho0; }
  const HermitianMatrix& axis1() const { return frame == Frame::kSource ? b_axis : image_b_axis; }
  const HermitianMatrix& axis2() const { return frame == Frame::kSource ? c_axis : image_c_axis; }

  /// rho0 + x B + y C.
  HermitianMatrix source_point(double x, double y) const;
  /// M rho0 + x M B + y M C. Requires a witness.
  HermitianMatrix image_point(double x, double y) const;
};

/// Throws Error(kPrecondition) if rho1 - rho0 and rho2 - rho0 are
/// dependent (Gram determinant <= 1e-14), or, for the image frame, if no
/// witness is given or the map collapses the plane.
SectionPlane plane_from_states(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                               const HermitianMatrix& rho2, Frame frame,
                               const std::optional<Witness>& witness = std::nullopt);

enum class Transform { kNone, kMap, kImagePlane };

enum class CurveLabel { kSource, kImageOfSource, kImagePlane };

const char* to_string(CurveLabel label);

struct PolarSample {
  double theta;
  double r;
};

struct BoundaryCurve {
  std::vector<PolarSample> samples;
  CurveLabel label = CurveLabel::kSource;
};

/// Polar boundary scan on a uniform grid theta_j = 2 pi j / n_theta.
///
///   kNone       largest r with rho0 + r(cos B + sin C) >= -tol_b;
///   kMap        the same source boundary point X, reported as the polar
///               form of project_point(plane, M X);
///   kImagePlane largest r with M rho0 + r(cos M B + sin M C) >= -tol_b.
///
/// Throws Error(kNumerical) "unbounded section" if a ray stays positive up
/// to r = 1e3.
BoundaryCurve scan_boundary(const SectionPlane& plane, Transform transform = Transform::kNone,
                            int n_theta = 720, double tol_b = 1e-10);

/// Largest r along a single ray of the source (image == false) or image
/// plane, by exponential bracketing and bisection to relative width 1e-10.
double boundary_radius(const SectionPlane& plane, double theta, bool image = false,
                       double tol_b = 1e-10);

/// Orthogonal projection onto the declared frame:
/// (<X - origin, axis1>, <X - origin, axis2>).
std::pair<double, double> project_point(const SectionPlane& plane, const HermitianMatrix& x);

enum class SectionType { kA, kB, kC, kD, kE, kF };

/// Parses "A".."F" (case insensitive).
SectionType parse_section_type(const std::string& s);

struct SectionSpec {
  int k = 3;
  std::uint64_t seed = 42;
  Frame frame = Frame::kSource;
  std::optional<Witness> witness;
  /// Pure-state vectors to use instead of random ones (types B-F).
  std::vector<ComplexVector> vectors;
  /// Tangent direction for type F; random when empty.
  std::optional<ComplexVector> xi;
};

/// The six section types:
///   A  rho1, rho2 random of rank two, rho0 = I/k;
///   B  rho1 pure, rho2 random of full rank, rho0 = I/k;
///   C  rho1, rho2 pure, rho0 = I/k;
///   D  three pure states from independent vectors, rho0 their even mix;
///   E  three pure states from dependent vectors (rank two span), rho0
///      their even mix;
///   F  rho1 = phi phi^dagger, rho2 = rho1 + phi xi^dagger + xi phi^dagger with
///      Re <phi, xi> = 0, rho0 = I/k.
SectionPlane section_of_type(SectionType type, const SectionSpec& spec = {});

}  // namespace posmap

#endif  // POSMAP_SECTIONS_HPP
