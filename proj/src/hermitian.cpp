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

#include "posmap/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace posmap {

namespace {

// Eigen's tridiagonal QR gives up after this many sweeps per eigenvalue.
constexpr int kEigenMaxIterationsPerValue = 30;

std::string describe_dims(int a, int b) {
  std::ostringstream os;
  os << "dimension mismatch: " << a << " vs " << b;
  return os.str();
}

HermitianMatrix apply_spectral(const Spectrum& s, const RealVector& f) {
  const ComplexMatrix& v = s.eigenvectors;
  ComplexMatrix r = v * f.cast<cplx>().asDiagonal() * v.adjoint();
  return HermitianMatrix(r);
}

}  // namespace

HermitianMatrix::HermitianMatrix() : m_(ComplexMatrix::Zero(1, 1)) {}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m,
                                 const HermitianTolerances& tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "Hermitian matrix must be square and non-empty, got " << m.rows()
       << "x" << m.cols();
    throw precondition_error(os.str());
  }
  const double norm = m.norm();
  const double residual = (m - m.adjoint()).norm();
  if (residual > tol.hermiticity * norm) {
    std::ostringstream os;
    os << "matrix is not Hermitian: relative residual "
       << (norm > 0 ? residual / norm : residual) << " exceeds "
       << tol.hermiticity;
    throw precondition_error(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int k) {
  return HermitianMatrix(ComplexMatrix::Identity(k, k), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(int k) {
  return HermitianMatrix(ComplexMatrix::Zero(k, k), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  ComplexMatrix m = d.cast<cplx>().asDiagonal();
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::outer(const ComplexVector& v) {
  ComplexMatrix m = v * v.adjoint();
  // Exact Hermiticity: the diagonal of v v^dagger is |v_i|^2.
  return HermitianMatrix(0.5 * (m + m.adjoint()), Unchecked{});
}

double HermitianMatrix::trace() const { return m_.trace().real(); }

double HermitianMatrix::hs_norm() const { return m_.norm(); }

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw precondition_error(describe_dims(dim(), other.dim()));
  m_ += other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw precondition_error(describe_dims(dim(), other.dim()));
  m_ -= other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

double hs_inner(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) throw precondition_error(describe_dims(x.dim(), y.dim()));
  // Tr(XY) = sum_ij X_ij Y_ji = sum_ij X_ij conj(Y_ij) for Hermitian Y.
  return (x.matrix().array() * y.matrix().array().conjugate()).sum().real();
}

Spectrum eig_hermitian(const HermitianMatrix& x) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "Hermitian eigensolver did not converge within "
       << kEigenMaxIterationsPerValue * x.dim() << " iterations";
    throw Error(ErrorKind::kConvergence, os.str());
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix sqrt_psd(const HermitianMatrix& x, const HermitianTolerances& tol) {
  const Spectrum s = eig_hermitian(x);
  const double floor = -tol.psd_clamp * x.hs_norm();
  if (s.min() < floor) {
    std::ostringstream os;
    os << "matrix is not PSD: eigenvalue " << s.min();
    throw SpectrumError(os.str(), s.min());
  }
  RealVector f = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return apply_spectral(s, f);
}

HermitianMatrix inv_pd(const HermitianMatrix& x, const HermitianTolerances& tol) {
  const Spectrum s = eig_hermitian(x);
  if (s.min() <= tol.pd_floor) {
    std::ostringstream os;
    os << "matrix is singular/ill-conditioned: eigenvalue " << s.min()
       << " <= " << tol.pd_floor;
    throw SpectrumError(os.str(), s.min());
  }
  RealVector f = s.eigenvalues.cwiseInverse();
  return apply_spectral(s, f);
}

std::vector<HermitianMatrix> hermitian_basis(int k) {
  if (k < 1) throw precondition_error("hermitian_basis: k must be >= 1");
  std::vector<HermitianMatrix> basis;
  basis.reserve(static_cast<std::size_t>(k) * k);
  basis.push_back((1.0 / std::sqrt(static_cast<double>(k))) * HermitianMatrix::identity(k));

  for (int l = 1; l < k; ++l) {
    RealVector d = RealVector::Zero(k);
    d.head(l).setOnes();
    d(l) = -l;
    d /= std::sqrt(static_cast<double>(l) * (l + 1));
    basis.push_back(HermitianMatrix::diagonal(d));
  }

  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(k, k);
      sym(i, j) = s;
      sym(j, i) = s;
      basis.emplace_back(sym);
      ComplexMatrix anti = ComplexMatrix::Zero(k, k);
      anti(i, j) = cplx(0, -s);
      anti(j, i) = cplx(0, s);
      basis.emplace_back(anti);
    }
  }
  return basis;
}

RealVector basis_coordinates(const HermitianMatrix& x) {
  const auto basis = hermitian_basis(x.dim());
  RealVector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) c(a) = hs_inner(basis[a], x);
  return c;
}

HermitianMatrix from_basis_coordinates(int k, const RealVector& coords) {
  const auto basis = hermitian_basis(k);
  if (coords.size() != static_cast<Eigen::Index>(basis.size())) {
    throw precondition_error(describe_dims(static_cast<int>(coords.size()),
                                           static_cast<int>(basis.size())));
  }
  HermitianMatrix x = HermitianMatrix::zero(k);
  for (std::size_t a = 0; a < basis.size(); ++a) x += coords(a) * basis[a];
  return x;
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

int numerical_rank(const RealMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

}  // namespace posmap
