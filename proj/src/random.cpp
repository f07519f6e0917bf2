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

#include "posmap/random.hpp"

#include <cmath>

namespace posmap {

ComplexMatrix Rng::gaussian(int k, int r) {
  ComplexMatrix g(k, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < k; ++i) {
      const double re = normal();
      const double im = normal();
      g(i, j) = cplx(re, im);
    }
  return g;
}

ComplexVector Rng::unit_vector(int k) {
  ComplexVector v = gaussian(k, 1).col(0);
  return v / v.norm();
}

ComplexMatrix Rng::unitary(int k) {
  const ComplexMatrix g = gaussian(k, k);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

HermitianMatrix Rng::density_matrix(int k, int rank) {
  const ComplexMatrix v = gaussian(k, rank);
  ComplexMatrix rho = v * v.adjoint();
  rho /= rho.trace().real();
  return HermitianMatrix(rho);
}

HermitianMatrix Rng::positive_definite(int k, double lo, double hi) {
  const ComplexMatrix u = unitary(k);
  RealVector d(k);
  for (int i = 0; i < k; ++i) d(i) = uniform(lo, hi);
  return HermitianMatrix(u * d.cast<cplx>().asDiagonal() * u.adjoint());
}

}  // namespace posmap
