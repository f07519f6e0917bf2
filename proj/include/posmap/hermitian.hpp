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

// Dense Hermitian matrices with Hilbert-Schmidt geometry.
//
// HermitianMatrix is a value type wrapping a square complex Eigen matrix.
// Construction symmetrizes the input as (X + X^dagger)/2 and rejects input
// whose anti-Hermitian part exceeds a relative tolerance, so that witness
// files carrying rounding noise load cleanly while genuinely non-Hermitian
// data does not.

#ifndef POSMAP_HERMITIAN_HPP
#define POSMAP_HERMITIAN_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "posmap/error.hpp"

namespace posmap {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds for the spectral operations. The defaults are the
/// ones every caller gets unless it opts out.
struct HermitianTolerances {
  /// Largest accepted ||X - X^dagger||_HS / ||X||_HS at construction.
  double hermiticity = 1e-8;
  /// sqrt_psd clamps eigenvalues in [-psd_clamp * ||X||, 0) to zero.
  double psd_clamp = 1e-10;
  /// inv_pd rejects any eigenvalue <= pd_floor.
  double pd_floor = 1e-12;
};

class HermitianMatrix {
 public:
  /// 1x1 zero matrix.
  HermitianMatrix();

  /// Throws Error(kPrecondition) for non-square or empty input, or when the
  /// anti-Hermitian residual exceeds tol.hermiticity (relative).
  explicit HermitianMatrix(const ComplexMatrix& m,
                           const HermitianTolerances& tol = {});

  static HermitianMatrix identity(int k);
  static HermitianMatrix zero(int k);
  static HermitianMatrix diagonal(const RealVector& d);
  /// v v^dagger.
  static HermitianMatrix outer(const ComplexVector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  double trace() const;
  double hs_norm() const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) {
    return a += b;
  }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) {
    return a -= b;
  }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  HermitianMatrix operator-() const { return -1.0 * *this; }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Eigen-decomposition with ascending eigenvalues; eigenvectors are the
/// columns of a unitary frame.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
  ComplexVector vector(int i) const { return eigenvectors.col(i); }
};

/// Tr(XY). Throws on dimension mismatch.
double hs_inner(const HermitianMatrix& x, const HermitianMatrix& y);

Spectrum eig_hermitian(const HermitianMatrix& x);

/// Positive square root. Negative eigenvalues down to -psd_clamp*||X|| are
/// treated as zero; anything more negative throws SpectrumError.
HermitianMatrix sqrt_psd(const HermitianMatrix& x,
                         const HermitianTolerances& tol = {});

/// Inverse of a positive definite matrix. Throws SpectrumError carrying the
/// smallest eigenvalue when it is <= pd_floor.
HermitianMatrix inv_pd(const HermitianMatrix& x,
                       const HermitianTolerances& tol = {});

/// Orthonormal basis of H_k under Tr(XY). Element 0 is I/sqrt(k); the
/// remaining k^2-1 are traceless: first the k-1 diagonal generalized
/// Gell-Mann matrices, then for each pair i<j the symmetric and the
/// antisymmetric off-diagonal element.
std::vector<HermitianMatrix> hermitian_basis(int k);

/// Real coordinates <G_c, X> of X in hermitian_basis(X.dim()).
RealVector basis_coordinates(const HermitianMatrix& x);

/// Inverse of basis_coordinates.
HermitianMatrix from_basis_coordinates(int k, const RealVector& coords);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double rel_tol);
int numerical_rank(const RealMatrix& m, double rel_tol);

}  // namespace posmap

#endif  // POSMAP_HERMITIAN_HPP
