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

#include "posmap/bipartite.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace posmap {

namespace {

constexpr double kSingularCondition = 1e15;

void require_dim(const char* what, int got, int want) {
  if (got != want) {
    std::ostringstream os;
    os << what << ": dimension " << got << ", expected " << want;
    throw precondition_error(os.str());
  }
}

}  // namespace

Witness::Witness(int m, int n, HermitianMatrix a) : m_(m), n_(n), a_(std::move(a)) {
  if (m < 2 || n < 2) {
    std::ostringstream os;
    os << "witness factor dimensions must be >= 2, got " << m << "x" << n;
    throw precondition_error(os.str());
  }
  require_dim("witness matrix", a_.dim(), m * n);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      r.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return r;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector r(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
  return r;
}

HermitianMatrix tensor(const HermitianMatrix& b, const HermitianMatrix& c) {
  return HermitianMatrix(kron(b.matrix(), c.matrix()));
}

Witness partial_transpose(const Witness& w) {
  const int m = w.m();
  const int n = w.n();
  ComplexMatrix p(w.dim(), w.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) p(i * n + j, k * n + l) = w.at(i, l, k, j);
  return Witness(m, n, HermitianMatrix(p));
}

HermitianMatrix partial_trace_1(const Witness& w) {
  const int m = w.m();
  const int n = w.n();
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) t(j, l) += w.at(i, j, i, l);
  return HermitianMatrix(t);
}

HermitianMatrix partial_trace_2(const Witness& w) {
  const int m = w.m();
  const int n = w.n();
  ComplexMatrix t = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j) t(i, k) += w.at(i, j, k, j);
  return HermitianMatrix(t);
}

ComplexMatrix apply_map_linear(const Witness& w, const ComplexMatrix& x) {
  const int m = w.m();
  const int n = w.n();
  require_dim("apply_map input", static_cast<int>(x.rows()), m);
  require_dim("apply_map input", static_cast<int>(x.cols()), m);
  // Y_jl = sum_{ik} A_{ij;kl} X_ki.
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const cplx xki = x(k, i);
      if (xki == cplx(0.0)) continue;
      y += xki * w.matrix().matrix().block(i * n, k * n, n, n);
    }
  return y;
}

ComplexMatrix apply_transposed_map_linear(const Witness& w, const ComplexMatrix& y) {
  const int m = w.m();
  const int n = w.n();
  require_dim("apply_transposed_map input", static_cast<int>(y.rows()), n);
  require_dim("apply_transposed_map input", static_cast<int>(y.cols()), n);
  // X_ik = sum_{jl} A_{ij;kl} Y_lj = Tr(block_{ik} Y).
  ComplexMatrix x(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      x(i, k) = (w.matrix().matrix().block(i * n, k * n, n, n) * y).trace();
  return x;
}

HermitianMatrix apply_map(const Witness& w, const HermitianMatrix& x) {
  return HermitianMatrix(apply_map_linear(w, x.matrix()));
}

HermitianMatrix apply_transposed_map(const Witness& w, const HermitianMatrix& y) {
  return HermitianMatrix(apply_transposed_map_linear(w, y.matrix()));
}

double biquadratic_form(const Witness& w, const ComplexVector& phi,
                        const ComplexVector& chi) {
  require_dim("biquadratic_form phi", static_cast<int>(phi.size()), w.m());
  require_dim("biquadratic_form chi", static_cast<int>(chi.size()), w.n());
  const ComplexVector psi = kron(phi, chi);
  return psi.dot(w.matrix().matrix() * psi).real();
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

Witness product_transform(const Witness& w, const ComplexMatrix& u,
                          const ComplexMatrix& v) {
  require_dim("product_transform U rows", static_cast<int>(u.rows()), w.m());
  require_dim("product_transform U cols", static_cast<int>(u.cols()), w.m());
  require_dim("product_transform V rows", static_cast<int>(v.rows()), w.n());
  require_dim("product_transform V cols", static_cast<int>(v.cols()), w.n());
  for (const ComplexMatrix* t : {&u, &v}) {
    const double cond = condition_number(*t);
    if (!(cond < kSingularCondition)) {
      std::ostringstream os;
      os << "product_transform: singular factor (condition number " << cond << ")";
      throw Error(ErrorKind::kNumerical, os.str());
    }
  }
  const ComplexMatrix uv = kron(u, v);
  return Witness(w.m(), w.n(), HermitianMatrix(uv * w.matrix().matrix() * uv.adjoint()));
}

MapMatrix map_matrix(const Witness& w) {
  const auto e = hermitian_basis(w.m());
  const auto f = hermitian_basis(w.n());
  RealMatrix c(f.size(), e.size());
  for (std::size_t a = 0; a < e.size(); ++a) {
    const HermitianMatrix image = apply_map(w, e[a]);
    for (std::size_t b = 0; b < f.size(); ++b) c(b, a) = hs_inner(f[b], image);
  }
  return MapMatrix{w.m(), w.n(), std::move(c)};
}

Witness witness_from_map_matrix(const MapMatrix& mm) {
  const auto e = hermitian_basis(mm.m);
  const auto f = hermitian_basis(mm.n);
  require_dim("map matrix rows", static_cast<int>(mm.coeffs.rows()), mm.n * mm.n);
  require_dim("map matrix cols", static_cast<int>(mm.coeffs.cols()), mm.m * mm.m);
  ComplexMatrix a = ComplexMatrix::Zero(mm.m * mm.n, mm.m * mm.n);
  for (std::size_t ia = 0; ia < e.size(); ++ia)
    for (std::size_t ib = 0; ib < f.size(); ++ib) {
      const double c = mm.coeffs(ib, ia);
      if (c != 0.0) a += c * kron(e[ia].matrix(), f[ib].matrix());
    }
  return Witness(mm.m, mm.n, HermitianMatrix(a));
}

Witness witness_from_linear_map(
    int m, int n, const std::function<ComplexMatrix(const ComplexMatrix&)>& map) {
  // A = sum_{ik} E_ik (x) M(E_ki).
  ComplexMatrix a = ComplexMatrix::Zero(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      ComplexMatrix unit = ComplexMatrix::Zero(m, m);
      unit(k, i) = 1.0;
      const ComplexMatrix y = map(unit);
      require_dim("linear map output", static_cast<int>(y.rows()), n);
      a.block(i * n, k * n, n, n) = y;
    }
  return Witness(m, n, HermitianMatrix(a));
}

Diagnostics diagnostics(const Witness& w) {
  const int m = w.m();
  const int n = w.n();
  Diagnostics d;
  d.m = m;
  d.n = n;
  d.trace = w.matrix().trace();
  d.min_eigenvalue = eig_hermitian(w.matrix()).min();
  d.min_eigenvalue_pt = eig_hermitian(partial_transpose(w).matrix()).min();

  const HermitianMatrix e0 = (1.0 / std::sqrt(static_cast<double>(m))) * HermitianMatrix::identity(m);
  const HermitianMatrix f0 = (1.0 / std::sqrt(static_cast<double>(n))) * HermitianMatrix::identity(n);
  d.unitality_residual = (apply_map(w, e0) - f0).hs_norm();
  d.trace_preservation_residual = (apply_transposed_map(w, f0) - e0).hs_norm();

  const MapMatrix mm = map_matrix(w);
  d.map_row0 = mm.coeffs.row(0).transpose();
  d.map_col0 = mm.coeffs.col(0);
  return d;
}

}  // namespace posmap
