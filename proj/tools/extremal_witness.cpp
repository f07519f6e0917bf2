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

// Builds a generic extremal witness by accumulating quadratic zeros.
//
// Start from A = I. Each round draws a random direction B that keeps every
// known zero a stationary zero (B in the kernel of the zero constraints,
// orthogonal to A) and moves to A + t B with the largest t for which
// A + t B stays nonnegative on product vectors. That t is found by
// iterating t <- f_A(psi) / -f_B(psi) at the most negative product psi of
// A + t B, which decreases t until no negative product remains; psi is
// the new zero. A step that would instead flatten the Hessian of an
// existing zero is rejected and redrawn. The process stops when the
// kernel is spanned by A alone.
//
// Usage: posmap_extremal [--m 3] [--n 3] [--seed 7] [-o witness.json]

#include <cmath>
#include <iostream>
#include <limits>
#include <vector>

#include "CLI11.hpp"
#include "posmap/io.hpp"
#include "posmap/random.hpp"
#include "posmap/zeros.hpp"

namespace posmap {
namespace {

struct Config {
  int m = 3;
  int n = 3;
  std::uint64_t seed = 7;
  int starts = 60;
  int verify_starts = 2000;
  int max_redraws = 200;
  std::string output;
};

struct Minimum {
  double value = std::numeric_limits<double>::infinity();
  ComplexVector phi;
  ComplexVector chi;
};

Minimum product_minimum(const Witness& w, Rng& rng, int starts, const std::vector<ComplexVector>& warm) {
  Minimum best;
  auto consider = [&](const ComplexVector& phi0) {
    const AlternatingResult r = alternating_minimize(w, phi0);
    if (r.value < best.value) best = {r.value, r.phi, r.chi};
  };
  for (const ComplexVector& p : warm) consider(p);
  for (int s = 0; s < starts; ++s) consider(rng.unit_vector(w.m()));
  return best;
}

// Largest t keeping every existing zero's tangent Hessian of A + t B
// positive definite. Hessians are linear in the witness at a zero.
double hessian_limit(const Witness& a, const Witness& b, const std::vector<ProductZero>& zeros) {
  double limit = std::numeric_limits<double>::infinity();
  for (const ProductZero& z : zeros) {
    const RealMatrix ha = tangent_derivatives(a, z.phi, z.chi).hessian;
    const RealMatrix hb = tangent_derivatives(b, z.phi, z.chi).hessian;
    Eigen::GeneralizedSelfAdjointEigenSolver<RealMatrix> ges(hb, ha);
    const double lo = ges.eigenvalues()(0);
    if (lo < 0) limit = std::min(limit, -1.0 / lo);
  }
  return limit;
}

double overlap_distance(const ProductZero& a, const ProductZero& b) {
  return 1.0 - std::abs(a.phi.dot(b.phi)) * std::abs(a.chi.dot(b.chi));
}

Witness build(const Config& cfg, std::ostream& log) {
  const int big = cfg.m * cfg.n;
  const int dim = big * big;
  Rng rng(cfg.seed);
  Witness a(cfg.m, cfg.n, HermitianMatrix::identity(big));
  std::vector<ProductZero> zeros;
  int redraws = 0;

  while (true) {
    RealMatrix kernel;
    if (zeros.empty()) {
      kernel = RealMatrix::Identity(dim, dim);
    } else {
      const ConstraintSystem cs = constraint_rank(a, zeros, 1e-12);
      Eigen::JacobiSVD<RealMatrix> svd(cs.rows, Eigen::ComputeFullV);
      kernel = svd.matrixV().rightCols(dim - cs.rank);
    }
    log << "zeros " << zeros.size() << ", kernel dimension " << kernel.cols() << "\n";
    if (kernel.cols() <= 1) break;

    RealVector ac = basis_coordinates(a.matrix());
    ac.normalize();
    RealVector bc = kernel * RealVector::NullaryExpr(kernel.cols(), [&] { return rng.normal(); });
    bc -= ac * ac.dot(bc);
    bc.normalize();
    const Witness b(cfg.m, cfg.n, from_basis_coordinates(big, bc));

    const double scale = a.matrix().hs_norm();
    double t = std::min(hessian_limit(a, b, zeros), 1e3) * (1.0 - 1e-6);
    std::vector<ComplexVector> warm;
    Minimum found;
    while (true) {
      const Witness trial(cfg.m, cfg.n, a.matrix() + t * b.matrix());
      Minimum mn = product_minimum(trial, rng, cfg.starts, warm);
      if (mn.value >= -1e-14 * scale) {
        mn = product_minimum(trial, rng, 5 * cfg.starts, warm);
        if (mn.value >= -1e-14 * scale) break;
      }
      t = biquadratic_form(a, mn.phi, mn.chi) / -biquadratic_form(b, mn.phi, mn.chi);
      warm = {mn.phi};
      found = mn;
    }
    if (warm.empty()) {
      if (++redraws > cfg.max_redraws) throw Error(ErrorKind::kConvergence, "too many redraws");
      log << "  redraw: an existing zero flattens first\n";
      continue;
    }

    const Witness next(cfg.m, cfg.n, a.matrix() + t * b.matrix());
    const AlternatingResult pol = polish_zero(next, found.phi, found.chi);
    ProductZero z;
    z.phi = pol.phi;
    z.chi = pol.chi;
    bool repeated = false;
    for (const ProductZero& old : zeros) repeated = repeated || overlap_distance(z, old) < 1e-4;
    if (repeated || std::abs(pol.value) > 1e-12) {
      if (++redraws > cfg.max_redraws) throw Error(ErrorKind::kConvergence, "too many redraws");
      log << "  redraw: no new zero\n";
      continue;
    }
    a = next;
    zeros.push_back(z);
    // Keep every zero sharp for the next constraint system.
    for (ProductZero& old : zeros) {
      const AlternatingResult p = polish_zero(a, old.phi, old.chi);
      old.phi = p.phi;
      old.chi = p.chi;
    }
    log << "  t = " << t << ", f(new zero) = " << pol.value << "\n";
  }

  const Witness out(cfg.m, cfg.n, (1.0 / a.matrix().trace()) * a.matrix());
  const Minimum check = product_minimum(out, rng, cfg.verify_starts, {});
  log << "minimum over " << cfg.verify_starts << " starts: " << check.value << "\n";
  if (check.value < -1e-12) throw Error(ErrorKind::kNumerical, "result is not a witness");
  return out;
}

}  // namespace
}  // namespace posmap

int main(int argc, char** argv) {
  posmap::Config cfg;
  CLI::App app{"Build a generic extremal witness by accumulating zeros", "posmap_extremal"};
  app.add_option("--m", cfg.m, "Input dimension")->check(CLI::Range(2, 4));
  app.add_option("--n", cfg.n, "Output dimension")->check(CLI::Range(2, 4));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("-o,--output", cfg.output, "Witness JSON path (default stdout)");
  CLI11_PARSE(app, argc, argv);
  try {
    const posmap::Witness w = posmap::build(cfg, std::cerr);
    const std::string text = posmap::to_json(w).dump(2) + "\n";
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      posmap::write_file_atomic(cfg.output, text);
    }
  } catch (const posmap::Error& e) {
    std::cerr << "posmap_extremal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
