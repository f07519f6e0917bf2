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

#ifndef POSMAP_RANDOM_HPP
#define POSMAP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "posmap/hermitian.hpp"

namespace posmap {

/// Seeded source of the random objects used by searches and section
/// constructors. Identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// k x r matrix with i.i.d. standard complex Gaussian entries.
  ComplexMatrix gaussian(int k, int r);

  /// Haar-random unit vector in C^k.
  ComplexVector unit_vector(int k);

  /// Haar-random unitary (QR of a Gaussian matrix with phase fix).
  ComplexMatrix unitary(int k);

  /// V V^dagger / Tr for V a k x rank Gaussian matrix: a random density
  /// matrix of the given rank.
  HermitianMatrix density_matrix(int k, int rank);

  /// Random positive definite matrix with eigenvalues in [lo, hi].
  HermitianMatrix positive_definite(int k, double lo = 0.2, double hi = 2.0);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace posmap

#endif  // POSMAP_RANDOM_HPP
