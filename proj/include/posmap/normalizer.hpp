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

// Product transformation of a positive map to unital, trace preserving form.
//
// We look for positive X in H_m, Y in H_n with
//
//     M X = Y^-1,    M^T Y = X^-1        (up to the scale noted below)
//
// by iterating X -> (M^T ((M X)^-1))^-1. The equations are invariant under
// (X, Y) -> (lambda X, Y / lambda), so every iterate is rescaled to
// Tr X = m. With U = sqrt(X) and V = sqrt(Y) the transformed witness
// (U (x) V) A (U (x) V)^dagger then satisfies M~ (I_m/sqrt(m)) = I_n/sqrt(n)
// and M~^T (I_n/sqrt(n)) = I_m/sqrt(m). For m == n that is plain
// unitality and trace preservation.

#ifndef POSMAP_NORMALIZER_HPP
#define POSMAP_NORMALIZER_HPP

#include <optional>
#include <vector>

#include "posmap/bipartite.hpp"

namespace posmap {

/// The map was not strictly positive on the current iterate: M X_k or
/// M^T Y_k had an eigenvalue at or below the PD floor.
class NotStrictlyPositiveError : public Error {
 public:
  NotStrictlyPositiveError(const std::string& what, HermitianMatrix iterate, double eigenvalue)
      : Error(ErrorKind::kNumerical, what),
        iterate_(std::move(iterate)),
        eigenvalue_(eigenvalue) {}

  const HermitianMatrix& iterate() const { return iterate_; }
  double eigenvalue() const { return eigenvalue_; }

 private:
  HermitianMatrix iterate_;
  double eigenvalue_;
};

struct NormalizerOptions {
  double tol = 1e-12;
  int max_iter = 200;
  /// Starting point; identity when empty. Must be positive definite.
  std::optional<HermitianMatrix> x0;
  HermitianTolerances linalg;
};

struct NormalizationResult {
  Witness witness_out;
  ComplexMatrix u;
  ComplexMatrix v;
  HermitianMatrix x;  // u^dagger u
  HermitianMatrix y;  // v^dagger v
  /// ||X_{k+1} - X_k||_HS for every step taken.
  std::vector<double> history;
  bool converged = false;
  int iterations = 0;
  /// Residuals of witness_out in the scaled sense (see diagnostics()).
  double unitality_residual = 0.0;
  double trace_preservation_residual = 0.0;
};

/// One step X_k -> (M^T ((M X_k)^-1))^-1, rescaled to trace m.
HermitianMatrix iterate_step(const Witness& w, const HermitianMatrix& x_k,
                             const HermitianTolerances& tol = {});

/// Runs the iteration until ||X_{k+1} - X_k||_HS <= tol. A run that
/// exhausts max_iter returns converged = false with the history so far and
/// the transform built from the last iterate.
NormalizationResult normalize(const Witness& w, const NormalizerOptions& opts = {});

/// Y matched to X: sqrt(m/n) (M X)^-1.
HermitianMatrix matching_y(const Witness& w, const HermitianMatrix& x,
                           const HermitianTolerances& tol = {});

/// Residual of the fixed-point equations at (X, Y), after removing the
/// scale freedom: ||(M X) Y / alpha - I|| + ||(M^T Y) X / beta - I|| with
/// alpha, beta the mean eigenvalues of the two products.
double fixed_point_residual(const Witness& w, const HermitianMatrix& x, const HermitianMatrix& y);

/// Magnitudes of the eigenvalues of the linearized, gauge-fixed step at a
/// fixed point, on the traceless subspace of H_m, in descending order.
/// Throws Error(kPrecondition) if fixed_point_residual exceeds
/// fixed_point_tol.
std::vector<double> contraction_spectrum(const Witness& w, const HermitianMatrix& x_star,
                                         const HermitianMatrix& y_star,
                                         double fixed_point_tol = 1e-8);

/// The linearized step as a real (m^2-1) x (m^2-1) matrix in the traceless
/// part of hermitian_basis(m). Exposed for testing.
RealMatrix contraction_matrix(const Witness& w, const HermitianMatrix& x_star,
                              const HermitianTolerances& tol = {});

}  // namespace posmap

#endif  // POSMAP_NORMALIZER_HPP
