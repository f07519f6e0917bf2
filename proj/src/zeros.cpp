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

#include "posmap/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "posmap/random.hpp"

namespace posmap {

namespace {

constexpr cplx kI(0.0, 1.0);

// Real tangent directions at a unit pair, in the order documented in the
// header.
struct TangentFrame {
  std::vector<ComplexVector> dphi;
  std::vector<ComplexVector> dchi;

  int size() const { return static_cast<int>(dphi.size() + dchi.size()); }
};

TangentFrame tangent_frame(const ComplexVector& phi, const ComplexVector& chi) {
  TangentFrame f;
  const ComplexMatrix wp = orthogonal_complement(phi);
  for (Eigen::Index s = 0; s < wp.cols(); ++s) {
    f.dphi.push_back(wp.col(s));
    f.dphi.push_back(kI * wp.col(s));
  }
  const ComplexMatrix wc = orthogonal_complement(chi);
  for (Eigen::Index s = 0; s < wc.cols(); ++s) {
    f.dchi.push_back(wc.col(s));
    f.dchi.push_back(kI * wc.col(s));
  }
  return f;
}

// Displaced pair for tangent coordinates p (first the phi block).
std::pair<ComplexVector, ComplexVector> displace(const ComplexVector& phi,
                                                 const ComplexVector& chi,
                                                 const TangentFrame& frame,
                                                 const RealVector& p) {
  ComplexVector a = phi;
  ComplexVector b = chi;
  const int np = static_cast<int>(frame.dphi.size());
  for (int r = 0; r < np; ++r) a += p(r) * frame.dphi[static_cast<std::size_t>(r)];
  for (std::size_t s = 0; s < frame.dchi.size(); ++s) b += p(np + static_cast<int>(s)) * frame.dchi[s];
  return {a, b};
}

// f on the product of unit spheres.
double normalized_form(const Witness& w, const ComplexVector& phi, const ComplexVector& chi) {
  return biquadratic_form(w, phi, chi) / (phi.squaredNorm() * chi.squaredNorm());
}

ComplexVector fix_phase(const ComplexVector& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const cplx c = v(k);
  if (std::abs(c) == 0.0) return v;
  return v * (std::conj(c) / std::abs(c));
}

ComplexVector lowest_eigenvector(const HermitianMatrix& x) { return eig_hermitian(x).vector(0); }

double overlap(const ComplexVector& a, const ComplexVector& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

double pair_distance(const ProductZero& a, const ProductZero& b) {
  return 1.0 - overlap(a.phi, b.phi) * overlap(a.chi, b.chi);
}

// Minimal union-find over zero indices.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

const char* to_string(ZeroKind kind) {
  return kind == ZeroKind::kQuadratic ? "quadratic" : "quartic";
}

ComplexMatrix orthogonal_complement(const ComplexVector& v) {
  const auto k = v.size();
  const ComplexMatrix vm = v;
  Eigen::HouseholderQR<ComplexMatrix> qr(vm);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(k, k);
  return q.rightCols(k - 1);
}

AlternatingResult alternating_minimize(const Witness& w, const ComplexVector& phi0,
                                       int max_iter, double tol) {
  if (phi0.size() != w.m()) throw precondition_error("alternating_minimize: phi0 has the wrong dimension");
  ComplexVector phi = phi0 / phi0.norm();
  ComplexVector chi;
  double value = std::numeric_limits<double>::infinity();
  int it = 0;
  while (it < max_iter) {
    ++it;
    chi = lowest_eigenvector(apply_map(w, HermitianMatrix::outer(phi)));
    phi = lowest_eigenvector(apply_transposed_map(w, HermitianMatrix::outer(chi)));
    const double next = biquadratic_form(w, phi, chi);
    const bool done = std::abs(value - next) <= tol;
    value = next;
    if (done) break;
  }
  return AlternatingResult{phi, chi, value, it};
}

TangentDerivatives tangent_derivatives(const Witness& w, const ComplexVector& phi_in,
                                       const ComplexVector& chi_in) {
  const ComplexVector phi = phi_in / phi_in.norm();
  const ComplexVector chi = chi_in / chi_in.norm();
  const TangentFrame frame = tangent_frame(phi, chi);
  const ComplexMatrix& a = w.matrix().matrix();
  const int np = static_cast<int>(frame.dphi.size());
  const int dim = frame.size();

  const ComplexVector psi = kron(phi, chi);
  const ComplexVector apsi = a * psi;
  const double f0 = psi.dot(apsi).real();

  // First-order variations of psi, and A applied to them.
  std::vector<ComplexVector> d(static_cast<std::size_t>(dim));
  for (int r = 0; r < np; ++r) d[static_cast<std::size_t>(r)] = kron(frame.dphi[static_cast<std::size_t>(r)], chi);
  for (int s = np; s < dim; ++s) d[static_cast<std::size_t>(s)] = kron(phi, frame.dchi[static_cast<std::size_t>(s - np)]);
  std::vector<ComplexVector> ad(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) ad[i] = a * d[i];

  TangentDerivatives out{f0, RealVector(dim), RealMatrix(dim, dim)};
  for (int i = 0; i < dim; ++i) out.gradient(i) = 2.0 * d[static_cast<std::size_t>(i)].dot(apsi).real();
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      double h = 2.0 * d[static_cast<std::size_t>(i)].dot(ad[static_cast<std::size_t>(j)]).real();
      if (i < np && j >= np) {
        // Bilinear cross term dphi_i (x) dchi_j.
        const ComplexVector cross = kron(frame.dphi[static_cast<std::size_t>(i)],
                                         frame.dchi[static_cast<std::size_t>(j - np)]);
        h += 2.0 * cross.dot(apsi).real();
      }
      out.hessian(i, j) = h;
      out.hessian(j, i) = h;
    }
  }
  // Restriction to the spheres: f / (|phi|^2 |chi|^2) with |.|^2 = 1 + |p|^2.
  out.hessian.diagonal().array() -= 2.0 * f0;
  return out;
}

AlternatingResult polish_zero(const Witness& w, const ComplexVector& phi_in,
                              const ComplexVector& chi_in, int max_iter) {
  ComplexVector phi = phi_in / phi_in.norm();
  ComplexVector chi = chi_in / chi_in.norm();
  const double scale = w.matrix().hs_norm();
  const double noise = 1e-15 * scale;
  const double curvature_floor = 1e-13 * scale;

  TangentDerivatives td = tangent_derivatives(w, phi, chi);
  int it = 0;
  for (; it < max_iter; ++it) {
    if (td.gradient.norm() <= noise) break;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(td.hessian);
    const RealVector g = es.eigenvectors().transpose() * td.gradient;
    RealVector step_eig(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      step_eig(i) = -g(i) / std::max(std::abs(es.eigenvalues()(i)), curvature_floor);
    }
    RealVector step = es.eigenvectors() * step_eig;

    const TangentFrame frame = tangent_frame(phi, chi);
    bool accepted = false;
    double t = 1.0;
    for (int ls = 0; ls < 40 && !accepted; ++ls, t *= 0.5) {
      auto [a, b] = displace(phi, chi, frame, t * step);
      a /= a.norm();
      b /= b.norm();
      TangentDerivatives next = tangent_derivatives(w, a, b);
      // Below the rounding floor of f, progress is judged by the gradient.
      const bool lower = next.value < td.value;
      const bool flat = next.value <= td.value + noise && next.gradient.norm() < td.gradient.norm();
      if (lower || flat) {
        phi = a;
        chi = b;
        td = std::move(next);
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  return AlternatingResult{phi, chi, td.value, it};
}

RealMatrix tangent_hessian_fd(const Witness& w, const ComplexVector& phi_in,
                              const ComplexVector& chi_in, double h) {
  const ComplexVector phi = phi_in / phi_in.norm();
  const ComplexVector chi = chi_in / chi_in.norm();
  const TangentFrame frame = tangent_frame(phi, chi);
  const int dim = frame.size();
  const double f0 = normalized_form(w, phi, chi);

  auto eval = [&](const RealVector& p) {
    auto [a, b] = displace(phi, chi, frame, p);
    return normalized_form(w, a, b);
  };
  auto hessian_at = [&](double step) {
    RealMatrix hm(dim, dim);
    for (int i = 0; i < dim; ++i) {
      RealVector p = RealVector::Zero(dim);
      p(i) = step;
      hm(i, i) = (eval(p) - 2.0 * f0 + eval(-p)) / (step * step);
      for (int j = i + 1; j < dim; ++j) {
        RealVector q = RealVector::Zero(dim);
        q(i) = step;
        RealVector r = q;
        q(j) = step;
        r(j) = -step;
        const double v = (eval(q) - eval(r) - eval(-r) + eval(-q)) / (4.0 * step * step);
        hm(i, j) = v;
        hm(j, i) = v;
      }
    }
    return hm;
  };
  return (4.0 * hessian_at(0.5 * h) - hessian_at(h)) / 3.0;
}

ZeroClassification classify_zero(const Witness& w, const ComplexVector& phi,
                                 const ComplexVector& chi, double zero_tol,
                                 double hess_tol_rel) {
  const double value = normalized_form(w, phi, chi);
  if (!(std::abs(value) <= zero_tol)) {
    std::ostringstream os;
    os << "classify_zero: not a zero (f = " << value << ")";
    throw precondition_error(os.str());
  }
  const RealMatrix hm = tangent_hessian_fd(w, phi, chi);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(hm, Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();
  ZeroClassification out;
  out.hessian_spectrum.assign(ev.data(), ev.data() + ev.size());
  const double hess_tol = hess_tol_rel * w.matrix().hs_norm();
  out.kind = ev(0) > hess_tol ? ZeroKind::kQuadratic : ZeroKind::kQuartic;
  return out;
}

std::vector<ProductZero> find_zeros(const Witness& w, const ZeroSearchOptions& opts) {
  Rng rng(opts.seed);
  std::vector<ProductZero> candidates;
  for (int s = 0; s < opts.starts; ++s) {
    const ComplexVector phi0 = rng.unit_vector(w.m());
    const AlternatingResult alt = alternating_minimize(w, phi0, opts.alternation_iters);
    const AlternatingResult pol = polish_zero(w, alt.phi, alt.chi, opts.polish_iters);
    if (std::abs(pol.value) <= opts.tol) {
      ProductZero z;
      z.phi = fix_phase(pol.phi);
      z.chi = fix_phase(pol.chi);
      z.value = pol.value;
      candidates.push_back(std::move(z));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ProductZero& a, const ProductZero& b) {
                     return std::abs(a.value) < std::abs(b.value);
                   });

  std::vector<ProductZero> zeros;
  for (auto& c : candidates) {
    const bool dup = std::any_of(zeros.begin(), zeros.end(), [&](const ProductZero& z) {
      return pair_distance(c, z) < opts.dedup_tol;
    });
    if (!dup) zeros.push_back(std::move(c));
  }

  const double hess_tol = opts.hess_tol_rel * w.matrix().hs_norm();
  for (auto& z : zeros) {
    ZeroClassification cls = classify_zero(w, z.phi, z.chi, opts.tol, opts.hess_tol_rel);
    z.kind = cls.kind;
    z.hessian_spectrum = std::move(cls.hessian_spectrum);
  }

  // Continuum by clustering.
  const int count = static_cast<int>(zeros.size());
  DisjointSets sets(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (pair_distance(zeros[static_cast<std::size_t>(i)], zeros[static_cast<std::size_t>(j)]) <
          opts.chain_distance)
        sets.unite(i, j);
  std::vector<int> component_size(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) ++component_size[static_cast<std::size_t>(sets.find(i))];
  for (int i = 0; i < count; ++i) {
    if (component_size[static_cast<std::size_t>(sets.find(i))] > opts.cluster_k) {
      zeros[static_cast<std::size_t>(i)].in_continuum = true;
    }
  }

  // Continuum by probing: step off a quartic zero along a flat direction
  // and re-polish. An isolated zero pulls the probe back; a continuum
  // offers a different zero nearby.
  constexpr double kProbeStep = 1e-2;
  for (auto& z : zeros) {
    if (z.in_continuum || z.kind != ZeroKind::kQuartic) continue;
    const TangentDerivatives td = tangent_derivatives(w, z.phi, z.chi);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(td.hessian);
    const TangentFrame frame = tangent_frame(z.phi, z.chi);
    for (Eigen::Index i = 0; i < es.eigenvalues().size() && !z.in_continuum; ++i) {
      if (es.eigenvalues()(i) > hess_tol) break;
      auto [a, b] = displace(z.phi, z.chi, frame, kProbeStep * es.eigenvectors().col(i));
      const AlternatingResult probe = polish_zero(w, a, b, opts.polish_iters);
      if (std::abs(probe.value) > opts.tol) continue;
      ProductZero other;
      other.phi = probe.phi;
      other.chi = probe.chi;
      if (pair_distance(z, other) > opts.dedup_tol) z.in_continuum = true;
    }
  }
  return zeros;
}

ConstraintSystem constraint_rank(const Witness& w, const std::vector<ProductZero>& zeros,
                                 double zero_tol, double rank_tol) {
  const int m = w.m();
  const int n = w.n();
  const int big_n = m * n;
  const int per_zero = 2 * (m + n) - 3;
  const auto basis = hermitian_basis(big_n);

  ConstraintSystem cs;
  cs.zero_count = static_cast<int>(zeros.size());
  cs.rows_per_zero = per_zero;
  cs.rows = RealMatrix::Zero(per_zero * cs.zero_count, big_n * big_n);

  // Re and Im of <alpha, A beta> = Tr(A beta alpha^dagger) as coordinate rows.
  auto functional_rows = [&](const ComplexVector& alpha, const ComplexVector& beta,
                             RealVector& re, RealVector& im) {
    const ComplexMatrix k = beta * alpha.adjoint();
    const HermitianMatrix k_re(ComplexMatrix(0.5 * (k + k.adjoint())));
    const HermitianMatrix k_im(ComplexMatrix((k - k.adjoint()) / (2.0 * kI)));
    re.resize(static_cast<Eigen::Index>(basis.size()));
    im.resize(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      re(static_cast<Eigen::Index>(c)) = hs_inner(basis[c], k_re);
      im(static_cast<Eigen::Index>(c)) = hs_inner(basis[c], k_im);
    }
  };

  int row = 0;
  for (const ProductZero& z : zeros) {
    const double value = normalized_form(w, z.phi, z.chi);
    if (!(std::abs(value) <= zero_tol)) {
      std::ostringstream os;
      os << "constraint_rank: not a zero (f = " << value << ")";
      throw precondition_error(os.str());
    }
    const ComplexVector phi = z.phi / z.phi.norm();
    const ComplexVector chi = z.chi / z.chi.norm();
    const ComplexVector psi = kron(phi, chi);
    RealVector re;
    RealVector im;

    functional_rows(psi, psi, re, im);
    cs.rows.row(row++) = re.transpose();

    const ComplexMatrix wp = orthogonal_complement(phi);
    for (Eigen::Index s = 0; s < wp.cols(); ++s) {
      functional_rows(psi, kron(ComplexVector(wp.col(s)), chi), re, im);
      cs.rows.row(row++) = re.transpose();
      cs.rows.row(row++) = im.transpose();
    }
    const ComplexMatrix wc = orthogonal_complement(chi);
    for (Eigen::Index t = 0; t < wc.cols(); ++t) {
      functional_rows(psi, kron(phi, ComplexVector(wc.col(t))), re, im);
      cs.rows.row(row++) = re.transpose();
      cs.rows.row(row++) = im.transpose();
    }
  }

  if (cs.rows.rows() > 0) {
    Eigen::JacobiSVD<RealMatrix> svd(cs.rows);
    cs.singular_values = svd.singularValues();
    const double smax = cs.singular_values.size() > 0 ? cs.singular_values(0) : 0.0;
    cs.rank = smax > 0 ? static_cast<int>((cs.singular_values.array() > rank_tol * smax).count()) : 0;
  }
  return cs;
}

ImageRanks image_rank_at_zero(const Witness& w, const ProductZero& z, double zero_tol,
                              double rank_tol) {
  const ComplexVector phi = z.phi / z.phi.norm();
  const ComplexVector chi = z.chi / z.chi.norm();
  const double value = biquadratic_form(w, phi, chi);
  if (!(std::abs(value) <= zero_tol)) {
    std::ostringstream os;
    os << "image_rank_at_zero: not a zero (f = " << value << ")";
    throw precondition_error(os.str());
  }
  const HermitianMatrix y = apply_map(w, HermitianMatrix::outer(phi));
  const HermitianMatrix x = apply_transposed_map(w, HermitianMatrix::outer(chi));
  ImageRanks r;
  r.forward_kernel_residual = (y.matrix() * chi).norm();
  r.transposed_kernel_residual = (x.matrix() * phi).norm();
  if (r.forward_kernel_residual > 1e-9 || r.transposed_kernel_residual > 1e-9) {
    std::ostringstream os;
    os << "image_rank_at_zero: kernel residuals " << r.forward_kernel_residual << ", "
       << r.transposed_kernel_residual << " exceed 1e-9";
    throw precondition_error(os.str());
  }
  auto rank_of = [&](const HermitianMatrix& h) {
    const RealVector ev = eig_hermitian(h).eigenvalues;
    const double top = ev.cwiseAbs().maxCoeff();
    return static_cast<int>((ev.array().abs() > rank_tol * top).count());
  };
  r.rank_forward = rank_of(y);
  r.rank_transposed = rank_of(x);
  return r;
}

}  // namespace posmap
