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

#include "posmap/sections.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "posmap/random.hpp"

namespace posmap {

namespace {

constexpr double kGramFloor = 1e-14;
constexpr double kMaxRadius = 1e3;
constexpr double kRelativeWidth = 1e-10;

struct Orthonormalizer {
  double a, b, c;
};

// Coefficients making a e1 and b e2 + c e1 orthonormal.
std::optional<Orthonormalizer> gram_schmidt(const HermitianMatrix& e1, const HermitianMatrix& e2) {
  const double g11 = hs_inner(e1, e1);
  const double g12 = hs_inner(e1, e2);
  const double g22 = hs_inner(e2, e2);
  if (!(g11 * g22 - g12 * g12 > kGramFloor)) return std::nullopt;
  const double a = 1.0 / std::sqrt(g11);
  const double b = 1.0 / std::sqrt(g22 - g12 * g12 / g11);
  return Orthonormalizer{a, b, -b * g12 / g11};
}

HermitianMatrix pure_state(const ComplexVector& v) {
  return (1.0 / v.squaredNorm()) * HermitianMatrix::outer(v);
}

double min_eigenvalue(const HermitianMatrix& x) { return eig_hermitian(x).min(); }

double ray_radius(const HermitianMatrix& origin, const HermitianMatrix& dir, double tol_b) {
  auto feasible = [&](double r) { return min_eigenvalue(origin + r * dir) >= -tol_b; };
  if (!feasible(0.0)) return 0.0;
  double lo = 0.0;
  double hi = 0.125;
  while (feasible(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kMaxRadius) throw Error(ErrorKind::kNumerical, "unbounded section");
  }
  while (hi - lo > kRelativeWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double wrap_angle(double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

ComplexVector vector_or_random(const SectionSpec& spec, std::size_t i, Rng& rng) {
  if (i < spec.vectors.size()) {
    const ComplexVector& v = spec.vectors[i];
    if (v.size() != spec.k) throw precondition_error("section_of_type: vector has the wrong dimension");
    if (v.norm() == 0.0) throw precondition_error("section_of_type: zero vector");
    return v;
  }
  return rng.unit_vector(spec.k);
}

int column_rank(const std::vector<ComplexVector>& vs) {
  ComplexMatrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i] / vs[i].norm();
  return numerical_rank(m, 1e-9);
}

}  // namespace

const char* to_string(Frame frame) { return frame == Frame::kSource ? "source" : "image"; }

const char* to_string(CurveLabel label) {
  switch (label) {
    case CurveLabel::kSource:
      return "source";
    case CurveLabel::kImageOfSource:
      return "image_of_source";
    case CurveLabel::kImagePlane:
      return "image_plane";
  }
  return "unknown";
}

HermitianMatrix SectionPlane::source_point(double x, double y) const {
  return rho0 + x * b_axis + y * c_axis;
}

HermitianMatrix SectionPlane::image_point(double x, double y) const {
  if (!witness) throw precondition_error("section plane has no map");
  return image_rho0 + x * image_b_axis + y * image_c_axis;
}

SectionPlane plane_from_states(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                               const HermitianMatrix& rho2, Frame frame,
                               const std::optional<Witness>& witness) {
  const int k = rho0.dim();
  if (rho1.dim() != k || rho2.dim() != k) {
    throw precondition_error("plane_from_states: states have different dimensions");
  }
  if (witness && witness->m() != k) {
    throw precondition_error("plane_from_states: map input dimension does not match the states");
  }
  if (frame == Frame::kImage && !witness) {
    throw precondition_error("plane_from_states: the image frame needs a map");
  }
  const HermitianMatrix d1 = rho1 - rho0;
  const HermitianMatrix d2 = rho2 - rho0;
  if (std::abs(d1.trace()) > 1e-10 || std::abs(d2.trace()) > 1e-10) {
    throw precondition_error("plane_from_states: states must have equal trace");
  }

  SectionPlane p;
  p.k = k;
  p.rho0 = rho0;
  p.rho1 = rho1;
  p.rho2 = rho2;
  p.frame = frame;
  p.witness = witness;

  if (!gram_schmidt(d1, d2)) {
    throw precondition_error("plane_from_states: rho1 - rho0 and rho2 - rho0 are linearly dependent");
  }
  std::optional<Orthonormalizer> coeffs;
  if (frame == Frame::kSource) {
    coeffs = gram_schmidt(d1, d2);
  } else {
    coeffs = gram_schmidt(apply_map(*witness, d1), apply_map(*witness, d2));
    if (!coeffs) throw precondition_error("plane_from_states: the map collapses the plane");
  }
  p.a = coeffs->a;
  p.b = coeffs->b;
  p.c = coeffs->c;
  p.b_axis = p.a * d1;
  p.c_axis = p.b * d2 + p.c * d1;
  if (witness) {
    p.image_rho0 = apply_map(*witness, rho0);
    p.image_b_axis = apply_map(*witness, p.b_axis);
    p.image_c_axis = apply_map(*witness, p.c_axis);
  }
  return p;
}

std::pair<double, double> project_point(const SectionPlane& plane, const HermitianMatrix& x) {
  if (x.dim() != plane.origin().dim()) {
    throw precondition_error("project_point: matrix does not live in the plane's space");
  }
  const HermitianMatrix d = x - plane.origin();
  return {hs_inner(d, plane.axis1()), hs_inner(d, plane.axis2())};
}

double boundary_radius(const SectionPlane& plane, double theta, bool image, double tol_b) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  if (image) {
    if (!plane.witness) throw precondition_error("boundary_radius: section plane has no map");
    return ray_radius(plane.image_rho0, ct * plane.image_b_axis + st * plane.image_c_axis, tol_b);
  }
  return ray_radius(plane.rho0, ct * plane.b_axis + st * plane.c_axis, tol_b);
}

BoundaryCurve scan_boundary(const SectionPlane& plane, Transform transform, int n_theta,
                            double tol_b) {
  if (n_theta < 1) throw precondition_error("scan_boundary: n_theta must be positive");
  if (transform != Transform::kNone && !plane.witness) {
    throw precondition_error("scan_boundary: this transform needs a map");
  }
  if (transform == Transform::kMap && plane.frame == Frame::kSource &&
      plane.witness->n() != plane.k) {
    throw precondition_error("scan_boundary: source-frame image coordinates need m == n");
  }
  BoundaryCurve curve;
  curve.label = transform == Transform::kNone  ? CurveLabel::kSource
                : transform == Transform::kMap ? CurveLabel::kImageOfSource
                                               : CurveLabel::kImagePlane;
  curve.samples.reserve(static_cast<std::size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_theta;
    if (transform == Transform::kImagePlane) {
      curve.samples.push_back({theta, boundary_radius(plane, theta, true, tol_b)});
      continue;
    }
    const double r = boundary_radius(plane, theta, false, tol_b);
    if (transform == Transform::kNone) {
      curve.samples.push_back({theta, r});
      continue;
    }
    const HermitianMatrix image =
        apply_map(*plane.witness, plane.source_point(r * std::cos(theta), r * std::sin(theta)));
    const auto [x, y] = project_point(plane, image);
    curve.samples.push_back({wrap_angle(std::atan2(y, x)), std::hypot(x, y)});
  }
  return curve;
}

SectionType parse_section_type(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A':
        return SectionType::kA;
      case 'B':
        return SectionType::kB;
      case 'C':
        return SectionType::kC;
      case 'D':
        return SectionType::kD;
      case 'E':
        return SectionType::kE;
      case 'F':
        return SectionType::kF;
      default:
        break;
    }
  }
  throw precondition_error("unknown section type '" + s + "' (expected A-F)");
}

SectionPlane section_of_type(SectionType type, const SectionSpec& spec) {
  const int k = spec.k;
  if (k < 2) throw precondition_error("section_of_type: k must be at least 2");
  Rng rng(spec.seed);
  const HermitianMatrix mixed = (1.0 / k) * HermitianMatrix::identity(k);

  switch (type) {
    case SectionType::kA: {
      const HermitianMatrix r1 = rng.density_matrix(k, 2);
      const HermitianMatrix r2 = rng.density_matrix(k, 2);
      return plane_from_states(mixed, r1, r2, spec.frame, spec.witness);
    }
    case SectionType::kB: {
      const HermitianMatrix r1 = pure_state(vector_or_random(spec, 0, rng));
      const HermitianMatrix r2 = rng.density_matrix(k, k);
      return plane_from_states(mixed, r1, r2, spec.frame, spec.witness);
    }
    case SectionType::kC: {
      const HermitianMatrix r1 = pure_state(vector_or_random(spec, 0, rng));
      const HermitianMatrix r2 = pure_state(vector_or_random(spec, 1, rng));
      return plane_from_states(mixed, r1, r2, spec.frame, spec.witness);
    }
    case SectionType::kD:
    case SectionType::kE: {
      std::vector<ComplexVector> vs = {vector_or_random(spec, 0, rng), vector_or_random(spec, 1, rng)};
      if (spec.vectors.size() > 2 || type == SectionType::kD) {
        vs.push_back(vector_or_random(spec, 2, rng));
      } else {
        const cplx alpha(rng.normal(), rng.normal());
        const cplx beta(rng.normal(), rng.normal());
        vs.push_back(alpha * vs[0] + beta * vs[1]);
      }
      const int rank = column_rank(vs);
      if (type == SectionType::kD && rank != 3) {
        throw precondition_error("section type D needs three linearly independent vectors");
      }
      if (type == SectionType::kE && rank != 2) {
        throw precondition_error("section type E needs three vectors spanning two dimensions");
      }
      const HermitianMatrix r1 = pure_state(vs[0]);
      const HermitianMatrix r2 = pure_state(vs[1]);
      const HermitianMatrix r3 = pure_state(vs[2]);
      const HermitianMatrix origin = (1.0 / 3.0) * (r1 + r2 + r3);
      return plane_from_states(origin, r1, r2, spec.frame, spec.witness);
    }
    case SectionType::kF: {
      const ComplexVector phi = vector_or_random(spec, 0, rng);
      ComplexVector xi;
      if (spec.xi) {
        xi = *spec.xi;
        if (xi.size() != k) throw precondition_error("section type F: xi has the wrong dimension");
        if (std::abs(phi.dot(xi).real()) > 1e-12 * phi.norm() * xi.norm()) {
          throw precondition_error("section type F needs Re <phi, xi> = 0");
        }
      } else {
        xi = rng.gaussian(k, 1).col(0);
        xi -= phi * (phi.dot(xi) / phi.squaredNorm());
        xi *= phi.norm() / xi.norm();
      }
      // First-order change of phi phi^dagger / |phi|^2 under phi -> phi + xi.
      const HermitianMatrix d(
          ComplexMatrix((phi * xi.adjoint() + xi * phi.adjoint()) / phi.squaredNorm()));
      const HermitianMatrix r1 = pure_state(phi);
      return plane_from_states(mixed, r1, r1 + d, spec.frame, spec.witness);
    }
  }
  throw precondition_error("section_of_type: unknown type");
}

}  // namespace posmap
