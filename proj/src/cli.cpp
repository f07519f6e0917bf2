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

#include "posmap/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posmap/builtins.hpp"
#include "posmap/io.hpp"
#include "posmap/normalizer.hpp"
#include "posmap/sections.hpp"
#include "posmap/zeros.hpp"

namespace posmap {

namespace {

struct InspectArgs {
  std::string witness;
  std::string output;
};

struct NormalizeArgs {
  std::string witness;
  std::string output;
  std::string x0;
  double tol = 1e-12;
  int max_iter = 200;
};

struct ZerosArgs {
  std::string witness;
  std::string output;
  int starts = 500;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

struct SectionArgs {
  std::string builtin;
  std::string witness;
  std::string type = "diag";
  std::string frame = "source";
  std::string output;
  std::string json;
  std::string svg;
  int samples = 720;
  int k = 3;
  std::uint64_t seed = 42;
};

struct BuiltinArgs {
  std::string name;
  std::string scale = "map";
  std::string output;
  int k = 3;
};

struct RingsArgs {
  int samples = 1000;
  std::string output;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// POSMAP_SEED, when set, takes precedence over --seed.
std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("POSMAP_SEED");
  if (env == nullptr || *env == '\0') return flag;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw precondition_error(std::string("POSMAP_SEED is not an unsigned integer: ") + env);
  }
  return v;
}

Witness builtin_witness(const std::string& name, const std::string& scale, int k) {
  if (scale != "map" && scale != "paper") throw precondition_error("--scale must be map or paper");
  if (name == "choi-lam") {
    return choi_lam_witness(scale == "paper" ? WitnessScale::kPaper : WitnessScale::kMap);
  }
  if (scale == "paper") throw precondition_error("--scale paper applies to choi-lam only");
  if (name == "horodecki-2x4") return horodecki_2x4_witness();
  if (k < 2) throw precondition_error("-k must be at least 2");
  if (name == "identity") return identity_witness(k);
  if (name == "transposition") return transposition_witness(k);
  throw precondition_error("unknown builtin '" + name + "'");
}

int cmd_inspect(const InspectArgs& a, std::ostream& out) {
  const Witness w = read_witness_file(a.witness);
  emit(a.output, dump(to_json(diagnostics(w))), out);
  return kExitOk;
}

int cmd_normalize(const NormalizeArgs& a, std::ostream& out, std::ostream& err) {
  NormalizerOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const Witness w = read_witness_file(a.witness);
  if (!a.x0.empty()) opts.x0 = read_hermitian_file(a.x0);
  const NormalizationResult r = normalize(w, opts);
  emit(a.output, dump(to_json(r)), out);
  if (!r.converged) {
    err << "normalize: no convergence after " << r.iterations << " iterations (last step "
        << (r.history.empty() ? 0.0 : r.history.back()) << ")\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

int cmd_zeros(const ZerosArgs& a, std::ostream& out) {
  const Witness w = read_witness_file(a.witness);
  ZeroSearchOptions opts;
  opts.starts = a.starts;
  opts.seed = effective_seed(a.seed);
  opts.tol = a.tol;
  emit(a.output, dump(to_json(find_zeros(w, opts))), out);
  return kExitOk;
}

int cmd_section(const SectionArgs& a, std::ostream& out) {
  if (!a.builtin.empty() && !a.witness.empty()) {
    throw precondition_error("--builtin and --witness are mutually exclusive");
  }
  if (a.frame != "source" && a.frame != "image") throw precondition_error("--frame must be source or image");
  if (a.samples < 1) throw precondition_error("--samples must be positive");

  std::optional<Witness> w;
  if (!a.builtin.empty()) w = builtin_witness(a.builtin, "map", a.k);
  if (!a.witness.empty()) w = read_witness_file(a.witness);
  const int k = w ? w->m() : a.k;
  const Frame frame = a.frame == "image" ? Frame::kImage : Frame::kSource;

  SectionPlane plane;
  if (a.type == "diag") {
    RealVector e1 = RealVector::Zero(k);
    RealVector e2 = RealVector::Zero(k);
    e1(0) = 1.0;
    e2(1) = 1.0;
    plane = plane_from_states((1.0 / k) * HermitianMatrix::identity(k), HermitianMatrix::diagonal(e1),
                              HermitianMatrix::diagonal(e2), frame, w);
  } else if (a.type == "tangent") {
    if (k != 3) throw precondition_error("--type tangent needs a 3x3 map");
    const TangentSection t = choi_lam_tangent_section();
    plane = plane_from_states(t.rho0, t.rho1, t.rho2, frame, w);
  } else {
    SectionSpec spec;
    spec.k = k;
    spec.seed = effective_seed(a.seed);
    spec.frame = frame;
    spec.witness = w;
    plane = section_of_type(parse_section_type(a.type), spec);
  }

  std::vector<BoundaryCurve> curves = {scan_boundary(plane, Transform::kNone, a.samples)};
  if (w) {
    if (frame == Frame::kImage || w->n() == k) {
      curves.push_back(scan_boundary(plane, Transform::kMap, a.samples));
    }
    curves.push_back(scan_boundary(plane, Transform::kImagePlane, a.samples));
  }
  const Json sidecar = section_sidecar(plane, curves);
  emit(a.output, curves_csv(curves), out);
  if (!a.json.empty()) write_file_atomic(a.json, dump(sidecar));
  if (!a.svg.empty()) write_file_atomic(a.svg, render_svg(curves, sidecar));
  return kExitOk;
}

int cmd_builtin(const BuiltinArgs& a, std::ostream& out) {
  emit(a.output, dump(to_json(builtin_witness(a.name, a.scale, a.k))), out);
  return kExitOk;
}

int cmd_rings(const RingsArgs& a, std::ostream& out) {
  emit(a.output, rings_csv(a.samples), out);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return kExitParse;
    case ErrorKind::kConvergence:
      return kExitNonConvergence;
    case ErrorKind::kPrecondition:
    case ErrorKind::kNumerical:
      return kExitPrecondition;
  }
  return kExitInternal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive maps, entanglement witnesses and their sections", "posmap"};
  app.require_subcommand(1);

  InspectArgs inspect;
  auto* c_inspect = app.add_subcommand("inspect", "Print diagnostics of a witness");
  c_inspect->add_option("witness", inspect.witness, "Witness JSON")->required();
  c_inspect->add_option("-o,--output", inspect.output, "Output path (default stdout)");

  NormalizeArgs norm;
  auto* c_norm = app.add_subcommand("normalize", "Transform a witness to unital, trace preserving form");
  c_norm->add_option("witness", norm.witness, "Witness JSON")->required();
  c_norm->add_option("--tol", norm.tol, "Convergence tolerance on ||X_{k+1} - X_k||")
      ->check(CLI::PositiveNumber);
  c_norm->add_option("--max-iter", norm.max_iter, "Iteration limit")->check(CLI::PositiveNumber);
  c_norm->add_option("--x0", norm.x0, "Positive definite start matrix (HermitianMatrix JSON)");
  c_norm->add_option("-o,--output", norm.output, "Output path (default stdout)");

  ZerosArgs zeros;
  auto* c_zeros = app.add_subcommand("zeros", "Search for product-vector zeros of a witness");
  c_zeros->add_option("witness", zeros.witness, "Witness JSON")->required();
  c_zeros->add_option("--starts", zeros.starts, "Number of random starts")->check(CLI::PositiveNumber);
  c_zeros->add_option("--seed", zeros.seed, "Random seed (POSMAP_SEED overrides)");
  c_zeros->add_option("--tol", zeros.tol, "Acceptance threshold on |f|")->check(CLI::PositiveNumber);
  c_zeros->add_option("-o,--output", zeros.output, "Output path (default stdout)");

  SectionArgs sec;
  auto* c_sec = app.add_subcommand("section", "Scan boundary curves of a two dimensional section");
  c_sec->add_option("--builtin", sec.builtin, "Builtin map (choi-lam, identity, transposition)");
  c_sec->add_option("--witness", sec.witness, "Witness JSON defining the map");
  c_sec->add_option("--type", sec.type, "diag, tangent, or a section type A-F");
  c_sec->add_option("--frame", sec.frame, "Orthonormal frame: source or image");
  c_sec->add_option("--samples", sec.samples, "Rays per curve");
  c_sec->add_option("-k", sec.k, "Matrix dimension when no map is given");
  c_sec->add_option("--seed", sec.seed, "Seed for random section types (POSMAP_SEED overrides)");
  c_sec->add_option("-o,--output", sec.output, "Curve CSV path (default stdout)");
  c_sec->add_option("--json", sec.json, "Sidecar JSON path");
  c_sec->add_option("--svg", sec.svg, "SVG path");

  BuiltinArgs bi;
  auto* c_bi = app.add_subcommand("builtin", "Emit a builtin witness as JSON");
  c_bi->add_option("name", bi.name, "choi-lam, horodecki-2x4, identity or transposition")->required();
  c_bi->add_option("--scale", bi.scale, "choi-lam normalization: map or paper");
  c_bi->add_option("-k", bi.k, "Dimension for identity and transposition");
  c_bi->add_option("-o,--output", bi.output, "Output path (default stdout)");

  RingsArgs rings;
  auto* c_rings = app.add_subcommand("rings", "Emit the rings of zeros of the 2x4 map as CSV");
  c_rings->add_option("--samples", rings.samples, "Angles per branch")->check(CLI::PositiveNumber);
  c_rings->add_option("-o,--output", rings.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "posmap: " << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    if (c_inspect->parsed()) return cmd_inspect(inspect, out);
    if (c_norm->parsed()) return cmd_normalize(norm, out, err);
    if (c_zeros->parsed()) return cmd_zeros(zeros, out);
    if (c_sec->parsed()) return cmd_section(sec, out);
    if (c_bi->parsed()) return cmd_builtin(bi, out);
    if (c_rings->parsed()) return cmd_rings(rings, out);
  } catch (const Error& e) {
    err << "posmap: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "posmap: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace posmap
