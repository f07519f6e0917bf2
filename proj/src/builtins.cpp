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

#include "posmap/builtins.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace posmap {

namespace {

constexpr cplx kI(0.0, 1.0);

// Near a singular ring angle s blows up; closer than this we return the limit.
constexpr double kRingSingularWidth = 1e-9;

double parse_decimal(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw parse_error("bad embedded constant: " + std::string(s));
  }
  return v;
}

std::array<HermitianMatrix, 4> build_2x4_basis() {
  const auto& c = horodecki_2x4_constants();
  auto a = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };

  ComplexMatrix plus(4, 4);  // B_0 + B_3
  plus << a(1), -kI * a(3), kI * a(4), a(1),
          kI * a(3), a(2), 0.0, kI * a(3),
          -kI * a(4), 0.0, a(2), -kI * a(4),
          a(1), -kI * a(3), kI * a(4), a(1);

  ComplexMatrix minus(4, 4);  // B_0 - B_3
  minus << a(5), kI * a(7), kI * a(8), -a(5),
           -kI * a(7), a(6), 0.0, kI * a(7),
           -kI * a(8), 0.0, a(6), kI * a(8),
           -a(5), -kI * a(7), -kI * a(8), a(5);

  ComplexMatrix b1(4, 4);
  b1 << 0.0, -a(9) - kI * a(10), a(11) - kI * a(12), -kI * a(13),
        -a(9) + kI * a(10), 0.0, -a(14) - kI * a(15), a(11) + kI * a(16),
        a(11) + kI * a(12), -a(14) + kI * a(15), 0.0, -a(9) - kI * a(17),
        kI * a(13), a(11) - kI * a(16), -a(9) + kI * a(17), 0.0;

  // Element (4,2) is the conjugate of (2,4). With the opposite sign on a_9
  // there the matrix is not Hermitian and the map is not positive.
  ComplexMatrix b2(4, 4);
  b2 << 0.0, -a(11) - kI * a(12), -a(9) + kI * a(10), kI * a(18),
        -a(11) + kI * a(12), -a(14), kI * a(19), a(9) - kI * a(17),
        -a(9) - kI * a(10), -kI * a(19), a(14), a(11) - kI * a(16),
        -kI * a(18), a(9) + kI * a(17), a(11) + kI * a(16), 0.0;

  // Exact Hermiticity is checked here with zero tolerance.
  HermitianTolerances exact;
  exact.hermiticity = 0.0;
  return {HermitianMatrix(0.5 * (plus + minus), exact), HermitianMatrix(b1, exact),
          HermitianMatrix(b2, exact), HermitianMatrix(0.5 * (plus - minus), exact)};
}

ComplexMatrix horodecki_2x4_linear(const ComplexMatrix& x) {
  const auto& b = horodecki_2x4_basis();
  const cplx u = x(0, 0) + x(1, 1);
  const cplx z = x(0, 0) - x(1, 1);
  const cplx bx = x(0, 1) + x(1, 0);
  const cplx by = kI * (x(0, 1) - x(1, 0));
  return u * b[0].matrix() + bx * b[1].matrix() + by * b[2].matrix() + z * b[3].matrix();
}

}  // namespace

// ---- Choi-Lam ---------------------------------------------------------------

ComplexMatrix choi_lam_map_linear(const ComplexMatrix& x) {
  if (x.rows() != 3 || x.cols() != 3) throw precondition_error("Choi-Lam map acts on 3x3 matrices");
  ComplexMatrix y(3, 3);
  y << x(0, 0) + x(2, 2), -x(0, 1), -x(0, 2),
       -x(1, 0), x(0, 0) + x(1, 1), -x(1, 2),
       -x(2, 0), -x(2, 1), x(1, 1) + x(2, 2);
  return 0.5 * y;
}

HermitianMatrix choi_lam_map_apply(const HermitianMatrix& x) {
  return HermitianMatrix(choi_lam_map_linear(x.matrix()));
}

Witness choi_lam_witness(WitnessScale scale) {
  Witness w = witness_from_linear_map(3, 3, choi_lam_map_linear);
  if (scale == WitnessScale::kPaper) return Witness(3, 3, 2.0 * w.matrix());
  return w;
}

ComplexVector choi_lam_continuum_vector(double alpha, double beta) {
  ComplexVector phi(3);
  phi << 1.0, std::polar(1.0, alpha), std::polar(1.0, beta);
  return phi;
}

ContinuumPoint choi_lam_continuum(double alpha, double beta) {
  HermitianMatrix rho = (1.0 / 3.0) * HermitianMatrix::outer(choi_lam_continuum_vector(alpha, beta));
  HermitianMatrix image = choi_lam_map_apply(rho);
  return ContinuumPoint{std::move(rho), std::move(image)};
}

TangentSection choi_lam_tangent_section() {
  const ComplexVector phi = choi_lam_continuum_vector(0.0, 0.0);
  ComplexVector xi = ComplexVector::Zero(3);
  xi(1) = kI;  // d phi / d alpha at alpha = 0
  const HermitianMatrix d(ComplexMatrix((xi * phi.adjoint() + phi * xi.adjoint()) / 3.0));

  TangentSection s{(1.0 / 3.0) * HermitianMatrix::identity(3),
                   (1.0 / 3.0) * HermitianMatrix::outer(phi), HermitianMatrix(), 0.0, 0.0};
  s.rho2 = s.rho1 + d;

  // Gram-Schmidt on the images of rho1 - rho0 and rho2 - rho0.
  const HermitianMatrix d1 = choi_lam_map_apply(s.rho1 - s.rho0);
  const HermitianMatrix d2 = choi_lam_map_apply(s.rho2 - s.rho0);
  s.a = 1.0 / d1.hs_norm();
  const HermitianMatrix r = d2 - (hs_inner(d2, d1) / hs_inner(d1, d1)) * d1;
  s.b = 1.0 / r.hs_norm();
  return s;
}

// ---- 2x4 extremal map ---------------------------------------------------------

const std::array<std::string_view, 19>& horodecki_2x4_constant_strings() {
  static constexpr std::array<std::string_view, 19> kStrings = {
      "0.0244482760740412", "0.2152770862261020", "0.0114377547217477",
      "0.0500075452822933", "0.0644909685779951", "0.1957836691218616",
      "0.0774551312933996", "0.0177155824920755", "0.0363521121932822",
      "0.0276760626964089", "0.0094553411157518", "0.0293657267910500",
      "0.0130745578191192", "0.1714859526438769", "0.0675990471881839",
      "0.0121590711417975", "0.0384768416753617", "0.0082070224528484",
      "0.0424325553291989",
  };
  return kStrings;
}

const std::array<double, 19>& horodecki_2x4_constants() {
  static const std::array<double, 19> kValues = [] {
    std::array<double, 19> v{};
    const auto& s = horodecki_2x4_constant_strings();
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = parse_decimal(s[i]);
    return v;
  }();
  return kValues;
}

const std::array<HermitianMatrix, 4>& horodecki_2x4_basis() {
  static const std::array<HermitianMatrix, 4> kBasis = build_2x4_basis();
  return kBasis;
}

HermitianMatrix horodecki_2x4_map_apply(double u, double x, double y, double z) {
  const auto& b = horodecki_2x4_basis();
  return u * b[0] + x * b[1] + y * b[2] + z * b[3];
}

Witness horodecki_2x4_witness() { return witness_from_linear_map(2, 4, horodecki_2x4_linear); }

// ---- rings ------------------------------------------------------------------

BlochPoint ring_zero(double theta, Branch branch, const RingParams& p) {
  const double sign = branch == Branch::kPlus ? 1.0 : -1.0;
  const double denom = std::cos(theta - p.theta0);
  if (std::abs(denom) < kRingSingularWidth) {
    // t -> 0 and t*s -> -b + sign * sgn(s), so z -> -sign * sgn(s).
    const double left = theta - 1e-6;
    const double s_left = p.a * std::cos(2 * left + p.theta0) / std::cos(left - p.theta0);
    return BlochPoint{0.0, 0.0, -sign * (s_left >= 0 ? 1.0 : -1.0)};
  }
  const double s = p.a * std::cos(2 * theta + p.theta0) / denom;
  const double t = (-p.b * s + sign * std::sqrt(1 + s * s - p.b * p.b)) / (1 + s * s);
  return BlochPoint{t * std::cos(theta), t * std::sin(theta), -p.b - t * s};
}

std::vector<BlochPoint> ring_common_zeros(const RingParams& p) {
  constexpr double kPi = std::numbers::pi;
  const std::array<double, 3> thetas = {0.0, kPi / 3, -kPi / 3};
  RingParams shifted = p;
  shifted.theta0 += 0.3;

  std::vector<BlochPoint> out;
  for (double th : thetas) {
    for (Branch br : {Branch::kPlus, Branch::kMinus}) {
      const BlochPoint q = ring_zero(th, br, p);
      const BlochPoint r = ring_zero(th, br, shifted);
      const double d = std::hypot(q.x - r.x, q.y - r.y, q.z - r.z);
      if (d > 1e-10) {
        std::ostringstream os;
        os << "ring_common_zeros: point at theta=" << th << " moved by " << d
           << " under a theta0 shift";
        throw Error(ErrorKind::kNumerical, os.str());
      }
      out.push_back(q);
    }
  }
  out.push_back(BlochPoint{0.0, 0.0, 1.0});
  out.push_back(BlochPoint{0.0, 0.0, -1.0});
  return out;
}

BlochPoint bloch_coordinates(const ComplexVector& phi) {
  if (phi.size() != 2) throw precondition_error("bloch_coordinates needs a vector in C^2");
  const double norm2 = phi.squaredNorm();
  const cplx off = phi(1) * std::conj(phi(0));
  return BlochPoint{2 * off.real() / norm2, 2 * off.imag() / norm2,
                    (std::norm(phi(0)) - std::norm(phi(1))) / norm2};
}

// ---- rank one preservers -----------------------------------------------------

Witness identity_witness(int k) {
  return witness_from_linear_map(k, k, [](const ComplexMatrix& x) { return x; });
}

Witness transposition_witness(int k) {
  return witness_from_linear_map(
      k, k, [](const ComplexMatrix& x) -> ComplexMatrix { return x.transpose(); });
}

Witness unitary_conjugation_witness(const ComplexMatrix& u) {
  const auto k = u.rows();
  if (u.cols() != k ||
      (u.adjoint() * u - ComplexMatrix::Identity(k, k)).norm() > 1e-10) {
    throw precondition_error("unitary_conjugation_witness: U is not unitary");
  }
  return witness_from_linear_map(static_cast<int>(k), static_cast<int>(k),
                                 [&u](const ComplexMatrix& x) -> ComplexMatrix {
                                   return u * x * u.adjoint();
                                 });
}

}  // namespace posmap
