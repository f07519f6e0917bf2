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

// Zeros of the biquadratic form f_A(phi, chi) over unit product vectors.
//
// Tangent coordinates. At a unit pair (phi, chi) we pick orthonormal bases
// w_1..w_{m-1} of phi^perp and v_1..v_{n-1} of chi^perp and use the
// 2(m-1) + 2(n-1) real directions w_1, i w_1, ..., v_1, i v_1, ... in that
// order. Global phases of phi and chi are thereby excluded.

#ifndef POSMAP_ZEROS_HPP
#define POSMAP_ZEROS_HPP

#include <cstdint>
#include <vector>

#include "posmap/bipartite.hpp"

namespace posmap {

enum class ZeroKind { kQuadratic, kQuartic };

const char* to_string(ZeroKind kind);

struct ProductZero {
  ComplexVector phi;
  ComplexVector chi;
  double value = 0.0;
  ZeroKind kind = ZeroKind::kQuadratic;
  /// Ascending eigenvalues of the tangent-space Hessian.
  std::vector<double> hessian_spectrum;
  /// Heuristic: the zero appears to lie on a positive-dimensional set.
  bool in_continuum = false;
};

struct AlternatingResult {
  ComplexVector phi;
  ComplexVector chi;
  double value;
  int iterations;
};

/// Alternates chi := lowest eigenvector of M(phi phi^dagger) and
/// phi := lowest eigenvector of M^T(chi chi^dagger). f never increases.
/// Stops when one full round changes f by at most tol, or after max_iter
/// rounds.
AlternatingResult alternating_minimize(const Witness& w, const ComplexVector& phi0,
                                       int max_iter = 300, double tol = 1e-15);

/// Damped Newton descent of f on the product of unit spheres, using the
/// exact gradient and Hessian in tangent coordinates. Used to sharpen the
/// output of alternating_minimize, which converges only sublinearly at
/// quartic zeros.
AlternatingResult polish_zero(const Witness& w, const ComplexVector& phi,
                              const ComplexVector& chi, int max_iter = 200);

struct ZeroSearchOptions {
  int starts = 500;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int alternation_iters = 300;
  int polish_iters = 200;
  /// Pairs with |<phi_i,phi_j>| |<chi_i,chi_j>| > 1 - dedup_tol are merged.
  double dedup_tol = 1e-6;
  /// Hessian classification threshold relative to ||A||_HS.
  double hess_tol_rel = 1e-7;
  /// Continuum flag: a cluster of more than cluster_k zeros, chained by
  /// pairwise distances 1 - overlap below chain_distance.
  int cluster_k = 3;
  double chain_distance = 0.1;
};

/// Multistart search from Haar-random phi_0. Survivors are sorted by
/// value, deduplicated modulo phases, classified, and flagged as continuum
/// members either by clustering or because a probe along a flat Hessian
/// direction lands on a different zero.
std::vector<ProductZero> find_zeros(const Witness& w, const ZeroSearchOptions& opts = {});

struct ZeroClassification {
  ZeroKind kind;
  std::vector<double> hessian_spectrum;
};

/// Classifies a zero by the smallest eigenvalue of the finite-difference
/// tangent Hessian against hess_tol_rel * ||A||_HS. Throws
/// Error(kPrecondition) if f(phi, chi) > zero_tol.
ZeroClassification classify_zero(const Witness& w, const ComplexVector& phi,
                                 const ComplexVector& chi, double zero_tol = 1e-9,
                                 double hess_tol_rel = 1e-7);

/// Orthonormal basis of the complex orthogonal complement of a unit vector,
/// as columns.
ComplexMatrix orthogonal_complement(const ComplexVector& v);

/// Tangent Hessian of f at (phi, chi): central second differences at h and
/// h/2 combined by Richardson extrapolation.
RealMatrix tangent_hessian_fd(const Witness& w, const ComplexVector& phi,
                              const ComplexVector& chi, double h = 1e-3);

/// Exact tangent gradient and Hessian of f restricted to the unit spheres.
struct TangentDerivatives {
  double value;
  RealVector gradient;
  RealMatrix hessian;
};

TangentDerivatives tangent_derivatives(const Witness& w, const ComplexVector& phi,
                                       const ComplexVector& chi);

/// One row per real linear constraint on the witness, in the coordinates of
/// hermitian_basis(m*n) (N^2 of them).
struct ConstraintSystem {
  RealMatrix rows;
  int rank = 0;
  int zero_count = 0;
  int rows_per_zero = 0;
  RealVector singular_values;
};

/// First-derivative constraints at each zero: Re f = 0, then Re and Im of
/// (phi (x) chi)^dagger A (w_s (x) chi) and of (phi (x) chi)^dagger A (phi (x) v_t).
/// That is 2(m+n) - 3 rows per zero. The rank counts singular values above
/// rank_tol * sigma_max.
ConstraintSystem constraint_rank(const Witness& w, const std::vector<ProductZero>& zeros,
                                 double zero_tol = 1e-9, double rank_tol = 1e-9);

struct ImageRanks {
  int rank_forward;     // rank of M(phi phi^dagger)
  int rank_transposed;  // rank of M^T(chi chi^dagger)
  double forward_kernel_residual;     // ||M(phi phi^dagger) chi||
  double transposed_kernel_residual;  // ||M^T(chi chi^dagger) phi||
};

/// Ranks of the images of the two pure states of a zero. Throws
/// Error(kPrecondition) if the pair is not a zero or either kernel residual
/// exceeds 1e-9.
ImageRanks image_rank_at_zero(const Witness& w, const ProductZero& z,
                              double zero_tol = 1e-9, double rank_tol = 1e-7);

}  // namespace posmap

#endif  // POSMAP_ZEROS_HPP
