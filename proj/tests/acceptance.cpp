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

// Acceptance suite. Prints one PASS/FAIL line per criterion with its
// wall time and exits nonzero if any criterion fails or overruns its
// time budget.
//
// The generic extremal witness for criterion 10 is read from
// $POSMAP_EXTREMAL_WITNESS, falling back to the fixture in tests/fixtures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "posmap/bipartite.hpp"
#include "posmap/builtins.hpp"
#include "posmap/cli.hpp"
#include "posmap/io.hpp"
#include "posmap/normalizer.hpp"
#include "posmap/random.hpp"
#include "posmap/sections.hpp"
#include "posmap/zeros.hpp"

#ifndef POSMAP_FIXTURE_DIR
#define POSMAP_FIXTURE_DIR "tests/fixtures"
#endif

namespace posmap {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return count_ == 0; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }
  int count() const { return count_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  int count_ = 0;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Check&)> body;
};

// ---------------------------------------------------------------------------
// 1. Choi-Lam structure.

void choi_lam_structure(Check& c) {
  RealMatrix printed = RealMatrix::Zero(9, 9);
  for (int i : {0, 1, 4, 5, 6, 8}) printed(i, i) = 1.0;
  for (auto [i, j] : {std::pair{0, 4}, {0, 8}, {4, 8}}) {
    printed(i, j) = -1.0;
    printed(j, i) = -1.0;
  }
  const ComplexMatrix pt =
      2.0 * partial_transpose(choi_lam_witness(WitnessScale::kMap)).matrix().matrix();
  c.expect(pt == printed.cast<cplx>(), "2 W^P differs from the printed matrix");
}

// ---------------------------------------------------------------------------
// 2. Unitality fixed point.

void unitality_fixed_point(Check& c) {
  const NormalizationResult r = normalize(choi_lam_witness());
  c.expect(r.converged, "did not converge");
  c.expect(r.iterations == 1, "converged at iteration " + std::to_string(r.iterations));
  const double du = (r.u - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff();
  const double dv = (r.v - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff();
  c.expect(du <= 1e-12 && dv <= 1e-12, "U, V differ from I by " + num(std::max(du, dv)));
}

// ---------------------------------------------------------------------------
// 3 and 4. Normalizer on interior witnesses.

Witness interior_witness(Rng& rng, double lambda) {
  const ComplexMatrix g = rng.gaussian(9, 9);
  const Witness psd(3, 3, HermitianMatrix(ComplexMatrix(g * g.adjoint())));
  HermitianMatrix a = partial_transpose(psd).matrix();
  const double lo = eig_hermitian(a).min();
  if (lo < 0) a += (-lo) * HermitianMatrix::identity(9);
  a *= 1.0 / a.trace();
  return Witness(3, 3, lambda / 9.0 * HermitianMatrix::identity(9) + (1.0 - lambda) * a);
}

struct FixedPoint {
  Witness w;
  HermitianMatrix x;
  HermitianMatrix y;
};

std::vector<FixedPoint>& fixed_points() {
  static std::vector<FixedPoint> points;
  return points;
}

void interior_normalizer(Check& c) {
  Rng rng(2026);
  fixed_points().clear();
  double worst_residual = 0.0;
  double worst_spread = 0.0;
  int worst_iterations = 0;
  for (int t = 0; t < 100; ++t) {
    const double lambda = rng.uniform(0.05, 0.9);
    const Witness w = interior_witness(rng, lambda);
    // A 3x3 positive map keeps a PSD witness PSD, so A_cp must be PSD.
    c.expect(eig_hermitian(w.matrix()).min() >= -1e-12, "witness " + std::to_string(t) + " not PSD");
    std::vector<NormalizationResult> runs;
    for (int s = 0; s < 5; ++s) {
      NormalizerOptions opts;
      opts.x0 = rng.positive_definite(3);
      try {
        runs.push_back(normalize(w, opts));
      } catch (const Error& e) {
        c.expect(false, "witness " + std::to_string(t) + ": " + e.what());
        continue;
      }
      const NormalizationResult& r = runs.back();
      c.expect(r.converged && r.iterations <= 200,
               "witness " + std::to_string(t) + " start " + std::to_string(s) + " did not converge");
      worst_iterations = std::max(worst_iterations, r.iterations);
      worst_residual =
          std::max({worst_residual, r.unitality_residual, r.trace_preservation_residual});
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = i + 1; j < runs.size(); ++j) {
        worst_spread = std::max(
            worst_spread, (runs[i].witness_out.matrix() - runs[j].witness_out.matrix()).hs_norm());
      }
    }
    if (!runs.empty()) fixed_points().push_back({w, runs[0].x, runs[0].y});
  }
  c.expect(worst_residual <= 1e-10, "residual " + num(worst_residual) + " > 1e-10");
  c.expect(worst_spread <= 1e-8, "output spread " + num(worst_spread) + " > 1e-8");
  c.note("max residual " + num(worst_residual) + ", max spread " + num(worst_spread) +
         ", max iterations " + std::to_string(worst_iterations));
}

void contraction_claim(Check& c) {
  if (fixed_points().size() != 100) {
    c.expect(false, "needs the 100 fixed points of criterion 3");
    return;
  }
  std::vector<double> radii;
  int contracting = 0;
  for (const FixedPoint& p : fixed_points()) {
    const double r = contraction_spectrum(p.w, p.x, p.y).front();
    radii.push_back(r);
    if (r < 1.0) ++contracting;
  }
  std::sort(radii.begin(), radii.end());
  c.expect(contracting >= 99, std::to_string(contracting) + "/100 contract");
  c.note("contracting " + std::to_string(contracting) + "/100, median spectral radius " +
         num(0.5 * (radii[49] + radii[50])) + ", max " + num(radii.back()));
}

// ---------------------------------------------------------------------------
// 5. Choi-Lam geometry.

double angle_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

void choi_lam_geometry(Check& c) {
  RealVector e1 = RealVector::Zero(3), e2 = RealVector::Zero(3);
  e1(0) = 1.0;
  e2(1) = 1.0;
  const SectionPlane diag =
      plane_from_states((1.0 / 3.0) * HermitianMatrix::identity(3), HermitianMatrix::diagonal(e1),
                        HermitianMatrix::diagonal(e2), Frame::kSource, choi_lam_witness());
  const BoundaryCurve src = scan_boundary(diag, Transform::kNone, 720);
  const BoundaryCurve img = scan_boundary(diag, Transform::kMap, 720);
  double worst = 0.0;
  for (std::size_t i = 0; i < src.samples.size(); ++i) {
    // Compare Cartesian points: image point = (1/2) R(60 deg) source point.
    const PolarSample& s = src.samples[i];
    const PolarSample& t = img.samples[i];
    const double ex = 0.5 * s.r * std::cos(s.theta + kPi / 3);
    const double ey = 0.5 * s.r * std::sin(s.theta + kPi / 3);
    worst = std::max(worst, std::hypot(t.r * std::cos(t.theta) - ex, t.r * std::sin(t.theta) - ey));
  }
  c.expect(src.samples.size() == 720 && img.samples.size() == 720, "expected 720 rays");
  c.expect(worst <= 1e-8, "rotation mismatch " + num(worst));

  const TangentSection ts = choi_lam_tangent_section();
  c.expect(std::abs(ts.a - std::sqrt(6.0)) <= 1e-12, "a = " + num(ts.a));
  c.expect(std::abs(ts.b - 3.0) <= 1e-12, "b = " + num(ts.b));
  const HermitianMatrix b = ts.a * (ts.rho1 - ts.rho0);
  const double db = (choi_lam_map_apply(b).matrix() + 0.5 * b.matrix()).cwiseAbs().maxCoeff();
  c.expect(db <= 1e-12, "M(B) + B/2 = " + num(db));
  c.note("max pointwise rotation error " + num(worst));
}

// ---------------------------------------------------------------------------
// 6. Boundary radii.

void boundary_radii(Check& c) {
  RealVector e1 = RealVector::Zero(3), e2 = RealVector::Zero(3);
  e1(0) = 1.0;
  e2(1) = 1.0;
  const SectionPlane d3 =
      plane_from_states((1.0 / 3.0) * HermitianMatrix::identity(3), HermitianMatrix::diagonal(e1),
                        HermitianMatrix::diagonal(e2), Frame::kSource);
  const double toward = boundary_radius(d3, 0.0);
  const double away = boundary_radius(d3, kPi);
  c.expect(std::abs(toward - std::sqrt(6.0) / 3.0) <= 1e-9, "D3 toward pure state: " + num(toward));
  c.expect(std::abs(away - std::sqrt(6.0) / 6.0) <= 1e-9, "D3 opposite: " + num(away));

  double worst = 0.0;
  for (SectionType type : {SectionType::kA, SectionType::kB, SectionType::kC}) {
    SectionSpec spec;
    spec.k = 2;
    for (const PolarSample& s : scan_boundary(section_of_type(type, spec), Transform::kNone, 720).samples) {
      worst = std::max(worst, std::abs(s.r - 1.0 / std::sqrt(2.0)));
    }
  }
  c.expect(worst <= 1e-9, "D2 radius deviates by " + num(worst));
}

// ---------------------------------------------------------------------------
// 7. Zero recovery.

void zero_recovery(Check& c) {
  ZeroSearchOptions opts;
  opts.starts = 500;
  const std::vector<ProductZero> zeros = find_zeros(choi_lam_witness(), opts);
  const auto e = [](int i) {
    ComplexVector v = ComplexVector::Zero(3);
    v(i) = 1.0;
    return v;
  };
  const std::array<std::pair<int, int>, 3> isolated = {{{0, 2}, {1, 0}, {2, 1}}};
  for (auto [i, j] : isolated) {
    bool found = false;
    for (const ProductZero& z : zeros) {
      const double overlap = std::abs(z.phi.dot(e(i))) * std::abs(z.chi.dot(e(j)));
      found = found || (!z.in_continuum && overlap > 1 - 1e-6);
    }
    c.expect(found, "isolated zero e" + std::to_string(i + 1) + " x e" + std::to_string(j + 1) +
                        " not found");
  }
  std::vector<const ProductZero*> continuum;
  for (const ProductZero& z : zeros) {
    c.expect(std::abs(z.value) <= 1e-9, "|f| = " + num(std::abs(z.value)));
    c.expect(z.kind == ZeroKind::kQuartic, "zero classified quadratic");
    if (!z.in_continuum) continue;
    bool distinct = true;
    for (const ProductZero* o : continuum) {
      distinct = distinct && std::abs(z.phi.dot(o->phi)) * std::abs(z.chi.dot(o->chi)) < 1 - 1e-6;
    }
    if (distinct) continuum.push_back(&z);
  }
  c.expect(continuum.size() >= 10, std::to_string(continuum.size()) + " continuum representatives");
  c.note(std::to_string(zeros.size()) + " zeros, " + std::to_string(continuum.size()) +
         " distinct continuum representatives");
}

// ---------------------------------------------------------------------------
// 8. 2x4 rings.

double ring_distance_at(const BlochPoint& p, double theta, Branch br) {
  const BlochPoint q = ring_zero(theta, br);
  return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

// Distance from p to the nearest ring point: a dense grid along the
// parametrization, then golden-section refinement around the best cells.
double distance_to_rings(const BlochPoint& p) {
  constexpr int kGrid = 4096;
  const double step = 2 * kPi / kGrid;
  double best = std::numeric_limits<double>::infinity();
  for (Branch br : {Branch::kPlus, Branch::kMinus}) {
    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < kGrid; ++i) {
      const double theta = -kPi + step * i;
      grid.push_back({ring_distance_at(p, theta, br), theta});
    }
    std::partial_sort(grid.begin(), grid.begin() + 4, grid.end());
    for (int k = 0; k < 4; ++k) {
      double lo = grid[static_cast<std::size_t>(k)].second - step;
      double hi = grid[static_cast<std::size_t>(k)].second + step;
      const double g = (std::sqrt(5.0) - 1) / 2;
      for (int it = 0; it < 100; ++it) {
        const double m1 = hi - g * (hi - lo);
        const double m2 = lo + g * (hi - lo);
        if (ring_distance_at(p, m1, br) < ring_distance_at(p, m2, br)) {
          hi = m2;
        } else {
          lo = m1;
        }
      }
      best = std::min({best, grid[static_cast<std::size_t>(k)].first,
                       ring_distance_at(p, 0.5 * (lo + hi), br)});
    }
  }
  return best;
}

void rings(Check& c) {
  double worst_norm = 0.0;
  Rng rng(8);
  for (int i = 0; i < 50000; ++i) {
    const double theta = rng.uniform(-kPi, kPi);
    for (Branch br : {Branch::kPlus, Branch::kMinus}) {
      const BlochPoint q = ring_zero(theta, br);
      worst_norm = std::max(worst_norm, std::abs(q.x * q.x + q.y * q.y + q.z * q.z - 1.0));
    }
  }
  c.expect(worst_norm <= 1e-12, "ring point off the sphere by " + num(worst_norm));

  const std::vector<BlochPoint> common = ring_common_zeros();
  RingParams shifted;
  shifted.theta0 += 0.3;
  const std::vector<BlochPoint> other = ring_common_zeros(shifted);
  c.expect(common.size() == 8 && other.size() == 8, "expected 8 common zeros");
  double shift = 0.0;
  for (std::size_t i = 0; i < std::min(common.size(), other.size()); ++i) {
    shift = std::max(shift, std::hypot(common[i].x - other[i].x, common[i].y - other[i].y,
                                       common[i].z - other[i].z));
  }
  c.expect(shift <= 1e-10, "common zeros move by " + num(shift));

  ZeroSearchOptions opts;
  opts.starts = 500;
  const std::vector<ProductZero> zeros = find_zeros(horodecki_2x4_witness(), opts);
  c.expect(!zeros.empty(), "no zeros found");
  double worst = 0.0;
  for (const ProductZero& z : zeros) worst = std::max(worst, distance_to_rings(bloch_coordinates(z.phi)));
  c.expect(worst <= 1e-6, "zero " + num(worst) + " away from the rings");
  c.note(std::to_string(zeros.size()) + " zeros, max distance to rings " + num(worst));
}

// ---------------------------------------------------------------------------
// 9. Appendix map positivity.

void appendix_positivity(Check& c) {
  Rng rng(9);
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const BlochPoint p = bloch_coordinates(rng.unit_vector(2));
    lowest = std::min(lowest, eig_hermitian(horodecki_2x4_map_apply(1.0, p.x, p.y, p.z)).min());
  }
  c.expect(lowest >= -1e-10, "min eigenvalue " + num(lowest));

  const Witness w = horodecki_2x4_witness();
  double worst_f = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double theta = -kPi + 2 * kPi * (i + 0.5) / 200;
    for (Branch br : {Branch::kPlus, Branch::kMinus}) {
      const BlochPoint p = ring_zero(theta, br);
      const HermitianMatrix image = horodecki_2x4_map_apply(1.0, p.x, p.y, p.z);
      const int rank = numerical_rank(image.matrix(), 1e-9);
      c.expect(rank == 3, "image rank " + std::to_string(rank) + " at theta " + num(theta));
      ComplexMatrix rho(2, 2);
      rho << 0.5 * (1 + p.z), 0.5 * cplx(p.x, -p.y), 0.5 * cplx(p.x, p.y), 0.5 * (1 - p.z);
      const ComplexVector phi = eig_hermitian(HermitianMatrix(rho)).vector(1);
      const ComplexVector chi = eig_hermitian(image).vector(0);
      worst_f = std::max(worst_f, std::abs(biquadratic_form(w, phi, chi)));
    }
  }
  c.expect(worst_f <= 1e-9, "|f| at ring zero " + num(worst_f));
  c.note("min eigenvalue " + num(lowest) + ", max |f| on rings " + num(worst_f));
}

// ---------------------------------------------------------------------------
// 10. Constraint counting.

void constraint_counting(Check& c) {
  ProductZero cl;
  cl.phi = ComplexVector::Zero(3);
  cl.chi = ComplexVector::Zero(3);
  cl.phi(0) = 1.0;
  cl.chi(2) = 1.0;
  const ConstraintSystem s33 = constraint_rank(choi_lam_witness(), {cl});
  c.expect(s33.rows_per_zero == 9 && s33.rows.rows() == 9, "3x3: rows per zero " +
                                                                std::to_string(s33.rows_per_zero));

  const Witness h = horodecki_2x4_witness();
  ProductZero hz;
  const BlochPoint p = ring_zero(0.4, Branch::kPlus);
  ComplexMatrix rho(2, 2);
  rho << 0.5 * (1 + p.z), 0.5 * cplx(p.x, -p.y), 0.5 * cplx(p.x, p.y), 0.5 * (1 - p.z);
  hz.phi = eig_hermitian(HermitianMatrix(rho)).vector(1);
  hz.chi = eig_hermitian(apply_map(h, HermitianMatrix::outer(hz.phi))).vector(0);
  c.expect(constraint_rank(h, {hz}).rows_per_zero == 9, "2x4: rows per zero");

  // Synthetic: the projector onto the complement of eight generic product
  // vectors gives 8 x 9 independent constraints.
  Rng rng(10);
  std::vector<ProductZero> zeros(8);
  ComplexMatrix span(9, 8);
  for (int i = 0; i < 8; ++i) {
    ProductZero& z = zeros[static_cast<std::size_t>(i)];
    z.phi = rng.unit_vector(3);
    z.chi = rng.unit_vector(3);
    span.col(i) = kron(z.phi, z.chi);
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(span);
  const ComplexMatrix q = ComplexMatrix(qr.householderQ()).col(8);
  const ConstraintSystem synth =
      constraint_rank(Witness(3, 3, HermitianMatrix(ComplexMatrix(q * q.adjoint()))), zeros);
  c.expect(synth.rank == 72, "synthetic rank " + std::to_string(synth.rank));

  const char* env = std::getenv("POSMAP_EXTREMAL_WITNESS");
  const std::string path = env ? env : POSMAP_FIXTURE_DIR "/generic_extremal_3x3.json";
  if (!fs::exists(path)) {
    c.note("no extremal witness at " + path + "; fixture check skipped");
    return;
  }
  const Witness ext = read_witness_file(path);
  ZeroSearchOptions opts;
  opts.starts = 500;
  const std::vector<ProductZero> ez = find_zeros(ext, opts);
  int quadratic = 0;
  for (const ProductZero& z : ez) quadratic += z.kind == ZeroKind::kQuadratic ? 1 : 0;
  c.expect(ez.size() == 9 && quadratic == 9,
           std::to_string(ez.size()) + " zeros, " + std::to_string(quadratic) + " quadratic");
  const ConstraintSystem es = constraint_rank(ext, ez);
  c.expect(es.rank == 80, "fixture rank " + std::to_string(es.rank));
  const RealVector& sv = es.singular_values;
  c.note("fixture " + fs::path(path).filename().string() + ": " + std::to_string(ez.size()) +
         " zeros, rank " + std::to_string(es.rank) + ", singular values 80/81: " +
         (sv.size() >= 81 ? num(sv(79)) + " / " + num(sv(80)) : std::string("n/a")));
}

// ---------------------------------------------------------------------------
// 11. Determinism.

std::string run_and_collect(const fs::path& dir, const std::vector<std::vector<std::string>>& cmds) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string all;
  for (const auto& cmd : cmds) {
    std::vector<std::string> args = {"posmap"};
    for (const std::string& a : cmd) {
      args.push_back(a.find('@') == 0 ? (dir / a.substr(1)).string() : a);
    }
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    all += "exit " + std::to_string(code) + "\n" + out.str();
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) all += "== " + f.filename().string() + "\n" + read_text_file(f.string());
  return all;
}

void determinism(Check& c) {
  const std::vector<std::vector<std::string>> cmds = {
      {"builtin", "choi-lam", "-o", "@cl.json"},
      {"builtin", "horodecki-2x4", "-o", "@h.json"},
      {"inspect", "@cl.json", "-o", "@inspect.json"},
      {"normalize", "@h.json", "-o", "@normalize.json"},
      {"zeros", "@cl.json", "--starts", "60", "--seed", "3", "-o", "@zeros.json"},
      {"section", "--builtin", "choi-lam", "--type", "diag", "--samples", "360", "-o", "@diag.csv",
       "--json", "@diag.json", "--svg", "@diag.svg"},
      {"section", "--builtin", "choi-lam", "--type", "tangent", "--frame", "image", "--samples",
       "360", "-o", "@tangent.csv"},
      {"section", "--type", "E", "--seed", "11", "--samples", "200", "-o", "@typee.csv"},
      {"rings", "--samples", "1000", "-o", "@rings.csv"},
  };
  const fs::path base = fs::temp_directory_path() / "posmap_acceptance_determinism";
  const std::string a = run_and_collect(base / "a", cmds);
  const std::string b = run_and_collect(base / "b", cmds);
  // Paths differ between the directories; compare after stripping them.
  auto strip = [&](std::string s, const fs::path& dir) {
    const std::string d = dir.string();
    for (std::size_t pos; (pos = s.find(d)) != std::string::npos;) s.replace(pos, d.size(), "<dir>");
    return s;
  };
  c.expect(a.find("exit 0") != std::string::npos && a.find("exit 1") == std::string::npos &&
               a.find("exit 2") == std::string::npos && a.find("exit 4") == std::string::npos,
           "a command failed");
  c.expect(strip(a, base / "a") == strip(b, base / "b"), "outputs differ between identical runs");
  fs::remove_all(base);
  c.note(std::to_string(cmds.size()) + " commands, " + std::to_string(a.size()) + " bytes compared");
}

}  // namespace
}  // namespace posmap

int main() {
  using posmap::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "Choi-Lam structure", 1, posmap::choi_lam_structure},
      {2, "Unitality fixed point", 1, posmap::unitality_fixed_point},
      {3, "Normalizer on interior witnesses", 60, posmap::interior_normalizer},
      {4, "Contraction claim", 60, posmap::contraction_claim},
      {5, "Choi-Lam geometry", 10, posmap::choi_lam_geometry},
      {6, "Boundary radii oracle", 5, posmap::boundary_radii},
      {7, "Zero recovery", 120, posmap::zero_recovery},
      {8, "2x4 rings", 180, posmap::rings},
      {9, "Appendix map positivity", 60, posmap::appendix_positivity},
      {10, "Constraint counting", 30, posmap::constraint_counting},
      {11, "Determinism", 10, posmap::determinism},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    posmap::Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < cr.budget_s;
    const bool pass = check.ok() && in_budget;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << cr.id << "  " << cr.name
              << "  (" << std::fixed << std::setprecision(2) << secs << " s, budget "
              << std::setprecision(0) << cr.budget_s << " s)" << std::defaultfloat << "\n";
    for (const std::string& n : check.notes()) std::cout << "          " << n << "\n";
    for (const std::string& f : check.failures()) std::cout << "          failed: " << f << "\n";
    if (check.count() > static_cast<int>(check.failures().size())) {
      std::cout << "          ... " << check.count() << " failed checks in total\n";
    }
    if (!in_budget) std::cout << "          failed: over time budget\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
