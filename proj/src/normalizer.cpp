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

#include "posmap/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace posmap {

namespace {

HermitianMatrix gauge_fix(const HermitianMatrix& x, int m) {
  return (static_cast<double>(m) / x.trace()) * x;
}

// Inverse of a PD matrix produced inside the iteration. A failure here means
// the map lost strict positivity on the iterate.
HermitianMatrix invert_image(const HermitianMatrix& image, const HermitianMatrix& iterate,
                             const char* stage, const HermitianTolerances& tol) {
  try {
    return inv_pd(image, tol);
  } catch (const SpectrumError& e) {
    std::ostringstream os;
    os << "map not strictly positive at iterate (" << stage << " eigenvalue "
       << e.eigenvalue() << ")";
    throw NotStrictlyPositiveError(os.str(), iterate, e.eigenvalue());
  }
}

// X_k -> (M^T ((M X_k)^-1))^-1 without the gauge fix.
HermitianMatrix raw_step(const Witness& w, const HermitianMatrix& x,
                         const HermitianTolerances& tol) {
  const HermitianMatrix s = apply_map(w, x);
  const HermitianMatrix y = invert_image(s, x, "M X", tol);
  const HermitianMatrix t = apply_transposed_map(w, y);
  return invert_image(t, x, "M^T Y", tol);
}

}  // namespace

HermitianMatrix iterate_step(const Witness& w, const HermitianMatrix& x_k,
                             const HermitianTolerances& tol) {
  if (x_k.dim() != w.m()) throw precondition_error("iterate_step: X has the wrong dimension");
  return gauge_fix(raw_step(w, x_k, tol), w.m());
}

HermitianMatrix matching_y(const Witness& w, const HermitianMatrix& x,
                           const HermitianTolerances& tol) {
  const double scale = std::sqrt(static_cast<double>(w.m()) / w.n());
  return scale * invert_image(apply_map(w, x), x, "M X", tol);
}

NormalizationResult normalize(const Witness& w, const NormalizerOptions& opts) {
  const int m = w.m();
  HermitianMatrix x = opts.x0.value_or(HermitianMatrix::identity(m));
  if (x.dim() != m) throw precondition_error("normalize: X0 has the wrong dimension");
  if (eig_hermitian(x).min() <= opts.linalg.pd_floor) {
    throw precondition_error("normalize: X0 must be positive definite");
  }
  x = gauge_fix(x, m);

  std::vector<double> history;
  bool converged = false;
  int iterations = 0;
  while (iterations < opts.max_iter) {
    HermitianMatrix next = iterate_step(w, x, opts.linalg);
    const double delta = (next - x).hs_norm();
    history.push_back(delta);
    ++iterations;
    x = std::move(next);
    if (delta <= opts.tol) {
      converged = true;
      break;
    }
  }

  HermitianMatrix y = matching_y(w, x, opts.linalg);
  HermitianMatrix u = sqrt_psd(x, opts.linalg);
  HermitianMatrix v = sqrt_psd(y, opts.linalg);
  Witness out = product_transform(w, u.matrix(), v.matrix());
  const Diagnostics d = diagnostics(out);

  return NormalizationResult{std::move(out),
                             u.matrix(),
                             v.matrix(),
                             std::move(x),
                             std::move(y),
                             std::move(history),
                             converged,
                             iterations,
                             d.unitality_residual,
                             d.trace_preservation_residual};
}

double fixed_point_residual(const Witness& w, const HermitianMatrix& x, const HermitianMatrix& y) {
  const ComplexMatrix p = apply_map(w, x).matrix() * y.matrix();
  const ComplexMatrix q = apply_transposed_map(w, y).matrix() * x.matrix();
  const double alpha = p.trace().real() / w.n();
  const double beta = q.trace().real() / w.m();
  return (p / alpha - ComplexMatrix::Identity(w.n(), w.n())).norm() +
         (q / beta - ComplexMatrix::Identity(w.m(), w.m())).norm();
}

RealMatrix contraction_matrix(const Witness& w, const HermitianMatrix& x_star,
                              const HermitianTolerances& tol) {
  const int m = w.m();
  const HermitianMatrix x = gauge_fix(x_star, m);

  // F(X) = T^-1 with S = M X, T = M^T S^-1. Its derivative is
  //   DF(dX) = T^-1 M^T(S^-1 (M dX) S^-1) T^-1,
  // the two minus signs of the inverse linearizations cancelling.
  const HermitianMatrix s_inv = invert_image(apply_map(w, x), x, "M X", tol);
  const HermitianMatrix t_inv =
      invert_image(apply_transposed_map(w, s_inv), x, "M^T Y", tol);
  // F(X*) = c X*; the gauge-fixed step G = m F / Tr F has derivative
  //   DG(dX) = (DF(dX) - X* Tr(DF(dX)) / m) / c.
  const double c = t_inv.trace() / m;

  const auto basis = hermitian_basis(m);
  const int dim = m * m - 1;
  RealMatrix d(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const HermitianMatrix& dx = basis[static_cast<std::size_t>(col + 1)];
    const HermitianMatrix ds = apply_map(w, dx);
    const HermitianMatrix inner(ComplexMatrix(s_inv.matrix() * ds.matrix() * s_inv.matrix()));
    const HermitianMatrix dt = apply_transposed_map(w, inner);
    const HermitianMatrix df(ComplexMatrix(t_inv.matrix() * dt.matrix() * t_inv.matrix()));
    const HermitianMatrix dg = (1.0 / c) * (df - (df.trace() / m) * x);
    for (int row = 0; row < dim; ++row) {
      d(row, col) = hs_inner(basis[static_cast<std::size_t>(row + 1)], dg);
    }
  }
  return d;
}

std::vector<double> contraction_spectrum(const Witness& w, const HermitianMatrix& x_star,
                                         const HermitianMatrix& y_star,
                                         double fixed_point_tol) {
  const double residual = fixed_point_residual(w, x_star, y_star);
  if (!(residual <= fixed_point_tol)) {
    std::ostringstream os;
    os << "contraction_spectrum: (X, Y) is not a fixed point (residual " << residual << ")";
    throw precondition_error(os.str());
  }
  const RealMatrix d = contraction_matrix(w, x_star);
  Eigen::EigenSolver<RealMatrix> solver(d, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergence, "contraction_spectrum: eigensolver did not converge");
  }
  std::vector<double> mags;
  mags.reserve(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index i = 0; i < d.rows(); ++i) mags.push_back(std::abs(solver.eigenvalues()(i)));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  return mags;
}

}  // namespace posmap
