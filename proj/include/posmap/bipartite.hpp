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

// Bipartite structure on H_{mn}.
//
// Composite indices are row-major: the pair (i, j) with i in [0, m) and
// j in [0, n) is the single index i*n + j, and A_{ij;kl} is the element
// A(i*n + j, k*n + l). Every function and file format in this library
// uses that convention.
//
// A witness A on H_{mn} and its map M_A : H_m -> H_n are related by
// A_{ij;kl} = M_{jl;ki}, where (M X)_{jl} = sum_{ik} M_{jl;ik} X_{ik}.
// Equivalently M_A X = Tr_1(A (X (x) I_n)) and M_A^T Y = Tr_2(A (I_m (x) Y)).

#ifndef POSMAP_BIPARTITE_HPP
#define POSMAP_BIPARTITE_HPP

#include <functional>

#include "posmap/hermitian.hpp"

namespace posmap {

class Witness {
 public:
  /// Throws unless m, n >= 2 and a.dim() == m*n.
  Witness(int m, int n, HermitianMatrix a);

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ * n_; }
  const HermitianMatrix& matrix() const { return a_; }

  /// A_{ij;kl}.
  cplx at(int i, int j, int k, int l) const {
    return a_(i * n_ + j, k * n_ + l);
  }

 private:
  int m_;
  int n_;
  HermitianMatrix a_;
};

/// The map in the orthonormal bases E_a = hermitian_basis(m) and
/// F_b = hermitian_basis(n): coeffs(b, a) = <F_b, M E_a>, an n^2 x m^2 real
/// matrix. Row 0 is delta_{0a} for trace-preserving maps, column 0 is
/// delta_{b0} for unital ones (in the scaled sense E_0 -> F_0).
struct MapMatrix {
  int m;
  int n;
  RealMatrix coeffs;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// B (x) C with components B_{ik} C_{jl}.
HermitianMatrix tensor(const HermitianMatrix& b, const HermitianMatrix& c);

/// Transpose on the second factor: (A^P)_{ij;kl} = A_{il;kj}.
Witness partial_transpose(const Witness& w);

/// (Tr_1 A)_{jl} = sum_i A_{ij;il}, an n x n matrix.
HermitianMatrix partial_trace_1(const Witness& w);
/// (Tr_2 A)_{ik} = sum_j A_{ij;kj}, an m x m matrix.
HermitianMatrix partial_trace_2(const Witness& w);

/// M_A X, X in H_m.
HermitianMatrix apply_map(const Witness& w, const HermitianMatrix& x);
/// M_A^T Y, Y in H_n.
HermitianMatrix apply_transposed_map(const Witness& w, const HermitianMatrix& y);

/// Complex-linear extensions of the two maps to arbitrary square matrices.
ComplexMatrix apply_map_linear(const Witness& w, const ComplexMatrix& x);
ComplexMatrix apply_transposed_map_linear(const Witness& w, const ComplexMatrix& y);

/// f_A(phi, chi) = (phi (x) chi)^dagger A (phi (x) chi). The vectors are
/// used as given; normalize first if that matters to the caller.
double biquadratic_form(const Witness& w, const ComplexVector& phi,
                        const ComplexVector& chi);

/// (U (x) V) A (U (x) V)^dagger. Throws Error(kNumerical) when U or V is
/// singular (smallest singular value zero or condition number above 1e15).
Witness product_transform(const Witness& w, const ComplexMatrix& u,
                          const ComplexMatrix& v);

/// 2-norm condition number sigma_max / sigma_min (inf for singular input).
double condition_number(const ComplexMatrix& m);

MapMatrix map_matrix(const Witness& w);
/// A = sum_{ab} M_ba E_a (x) F_b.
Witness witness_from_map_matrix(const MapMatrix& mm);

/// Witness of an arbitrary linear map H_m -> H_n. The callable receives
/// matrix units E_{ki} and must act complex-linearly on them.
Witness witness_from_linear_map(
    int m, int n, const std::function<ComplexMatrix(const ComplexMatrix&)>& map);

struct Diagnostics {
  int m;
  int n;
  double trace;
  double min_eigenvalue;
  /// Smallest eigenvalue of A^P; >= 0 means the map is completely positive.
  double min_eigenvalue_pt;
  /// ||M_A E_0 - F_0||_HS.
  double unitality_residual;
  /// ||M_A^T F_0 - E_0||_HS.
  double trace_preservation_residual;
  RealVector map_row0;
  RealVector map_col0;

  bool ppt(double tol = 1e-12) const { return min_eigenvalue_pt >= -tol; }
};

Diagnostics diagnostics(const Witness& w);

}  // namespace posmap

#endif  // POSMAP_BIPARTITE_HPP
