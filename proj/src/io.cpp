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

#include "posmap/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <unistd.h>

namespace posmap {

namespace {

Json pair_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx pair_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw parse_error(where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw parse_error(where + ": expected an object");
  const auto it = j.find(name);
  if (it == j.end()) throw parse_error(where + ": missing field '" + name + "'");
  return *it;
}

int int_field(const Json& j, const char* name, const std::string& where) {
  const Json& v = field(j, name, where);
  if (!v.is_number_integer()) throw parse_error(where + ": field '" + name + "' must be an integer");
  return v.get<int>();
}

ComplexMatrix entries_from_json(const Json& entries, int rows, int cols, const std::string& where) {
  if (rows <= 0 || cols <= 0) throw parse_error(where + ": dimensions must be positive");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    std::ostringstream os;
    os << where << ": 'entries' must hold " << rows * cols << " values";
    throw parse_error(os.str());
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i * cols + j);
      std::ostringstream at;
      at << where << ".entries[" << idx << "]";
      m(i, j) = pair_from_json(entries[idx], at.str());
    }
  }
  return m;
}

Json entries_json(const ComplexMatrix& m) {
  Json e = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e.push_back(pair_json(m(i, j)));
  return e;
}

Json point_json(std::pair<double, double> p) { return Json::array({p.first, p.second}); }

}  // namespace

Json to_json(const HermitianMatrix& x) {
  Json j;
  j["dim"] = x.dim();
  j["entries"] = entries_json(x.matrix());
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["m"] = w.m();
  j["n"] = w.n();
  j["matrix"] = to_json(w.matrix());
  return j;
}

Json to_json(const Diagnostics& d) {
  Json j;
  j["m"] = d.m;
  j["n"] = d.n;
  j["trace"] = d.trace;
  j["min_eigenvalue"] = d.min_eigenvalue;
  j["min_eigenvalue_pt"] = d.min_eigenvalue_pt;
  j["ppt"] = d.ppt();
  j["unitality_residual"] = d.unitality_residual;
  j["trace_preservation_residual"] = d.trace_preservation_residual;
  return j;
}

Json to_json(const NormalizationResult& r) {
  Json j;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["unitality_residual"] = r.unitality_residual;
  j["trace_preservation_residual"] = r.trace_preservation_residual;
  j["history"] = r.history;
  j["u"] = complex_matrix_to_json(r.u);
  j["v"] = complex_matrix_to_json(r.v);
  j["witness"] = to_json(r.witness_out);
  return j;
}

Json to_json(const std::vector<ProductZero>& zeros) {
  Json a = Json::array();
  for (const ProductZero& z : zeros) {
    Json j;
    j["phi"] = complex_vector_to_json(z.phi);
    j["chi"] = complex_vector_to_json(z.chi);
    j["value"] = z.value;
    j["kind"] = to_string(z.kind);
    j["in_continuum"] = z.in_continuum;
    j["hessian_spectrum"] = z.hessian_spectrum;
    a.push_back(std::move(j));
  }
  return a;
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = entries_json(m);
  return j;
}

Json complex_vector_to_json(const ComplexVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(pair_json(v(i)));
  return a;
}

HermitianMatrix hermitian_from_json(const Json& j) {
  const std::string where = "matrix";
  const int k = int_field(j, "dim", where);
  const ComplexMatrix m = entries_from_json(field(j, "entries", where), k, k, where);
  try {
    return HermitianMatrix(m);
  } catch (const Error& e) {
    throw parse_error(where + ": " + e.what());
  }
}

Witness witness_from_json(const Json& j) {
  const int m = int_field(j, "m", "witness");
  const int n = int_field(j, "n", "witness");
  HermitianMatrix a = hermitian_from_json(field(j, "matrix", "witness"));
  try {
    return Witness(m, n, std::move(a));
  } catch (const Error& e) {
    throw parse_error(std::string("witness: ") + e.what());
  }
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  const std::string where = "complex matrix";
  return entries_from_json(field(j, "entries", where), int_field(j, "rows", where),
                           int_field(j, "cols", where), where);
}

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("vector: expected a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = pair_from_json(j[i], "vector[" + std::to_string(i) + "]");
  }
  return v;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recover line and column from the byte offset of the failure.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << column << ": invalid JSON: " << e.what();
    throw parse_error(os.str());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Witness read_witness_file(const std::string& path) {
  const Json j = parse_json(read_text_file(path), path);
  try {
    return witness_from_json(j);
  } catch (const Error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

HermitianMatrix read_hermitian_file(const std::string& path) {
  const Json j = parse_json(read_text_file(path), path);
  try {
    return hermitian_from_json(j);
  } catch (const Error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw precondition_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw precondition_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw precondition_error("cannot rename into '" + path + "'");
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string curves_csv(const std::vector<BoundaryCurve>& curves) {
  std::string out = "theta,r,label\n";
  for (const BoundaryCurve& c : curves) {
    const char* label = to_string(c.label);
    for (const PolarSample& s : c.samples) {
      out += format_double(s.theta);
      out += ',';
      out += format_double(s.r);
      out += ',';
      out += label;
      out += '\n';
    }
  }
  return out;
}

std::string rings_csv(int n_samples, const RingParams& p) {
  if (n_samples < 1) throw precondition_error("rings: samples must be positive");
  std::string out = "theta,branch,x,y,z\n";
  for (Branch br : {Branch::kPlus, Branch::kMinus}) {
    const char* name = br == Branch::kPlus ? "+" : "-";
    for (int i = 0; i < n_samples; ++i) {
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * i / n_samples;
      const BlochPoint q = ring_zero(theta, br, p);
      out += format_double(theta) + ',' + name + ',' + format_double(q.x) + ',' +
             format_double(q.y) + ',' + format_double(q.z) + '\n';
    }
  }
  return out;
}

Json section_sidecar(const SectionPlane& plane, const std::vector<BoundaryCurve>& curves) {
  Json j;
  j["k"] = plane.k;
  j["frame"] = to_string(plane.frame);
  j["a"] = plane.a;
  j["b"] = plane.b;
  j["c"] = plane.c;
  j["has_map"] = plane.witness.has_value();

  Json markers = Json::object();
  if (plane.frame == Frame::kSource) {
    markers["rho1"] = point_json(project_point(plane, plane.rho1));
    markers["rho2"] = point_json(project_point(plane, plane.rho2));
    markers["identity"] =
        point_json(project_point(plane, (1.0 / plane.k) * HermitianMatrix::identity(plane.k)));
  }
  if (plane.witness) {
    const Witness& w = *plane.witness;
    const bool same_space = plane.frame == Frame::kImage || w.n() == plane.k;
    if (same_space) {
      markers["rho1_image"] = point_json(project_point(plane, apply_map(w, plane.rho1)));
      markers["rho2_image"] = point_json(project_point(plane, apply_map(w, plane.rho2)));
    }
    if (plane.frame == Frame::kImage) {
      markers["identity"] =
          point_json(project_point(plane, (1.0 / w.n()) * HermitianMatrix::identity(w.n())));
    }
  }
  j["markers"] = std::move(markers);

  Json cs = Json::array();
  for (const BoundaryCurve& c : curves) {
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    for (const PolarSample& s : c.samples) {
      rmin = std::min(rmin, s.r);
      rmax = std::max(rmax, s.r);
    }
    Json cj;
    cj["label"] = to_string(c.label);
    cj["samples"] = c.samples.size();
    cj["r_min"] = c.samples.empty() ? 0.0 : rmin;
    cj["r_max"] = rmax;
    cs.push_back(std::move(cj));
  }
  j["curves"] = std::move(cs);
  return j;
}

std::string render_svg(const std::vector<BoundaryCurve>& curves, const Json& sidecar) {
  double extent = 0.0;
  for (const BoundaryCurve& c : curves)
    for (const PolarSample& s : c.samples) extent = std::max(extent, s.r);
  if (sidecar.contains("markers")) {
    for (const auto& m : sidecar["markers"]) {
      extent = std::max({extent, std::abs(m[0].get<double>()), std::abs(m[1].get<double>())});
    }
  }
  if (extent <= 0.0) extent = 1.0;
  extent *= 1.1;

  constexpr double kSize = 600.0;
  auto sx = [&](double x) { return format_double(std::round((x / extent + 1.0) * kSize / 2 * 100) / 100); };
  auto sy = [&](double y) { return format_double(std::round((1.0 - y / extent) * kSize / 2 * 100) / 100); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#bbb\"/>\n";
  os << "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#bbb\"/>\n";
  // Ticks at multiples of 0.1 in plane units.
  for (int t = -static_cast<int>(extent * 10); t <= static_cast<int>(extent * 10); ++t) {
    if (t == 0) continue;
    const std::string p = sx(t * 0.1);
    os << "<line x1=\"" << p << "\" y1=\"296\" x2=\"" << p << "\" y2=\"304\" stroke=\"#888\"/>\n";
    const std::string q = sy(t * 0.1);
    os << "<line x1=\"296\" y1=\"" << q << "\" x2=\"304\" y2=\"" << q << "\" stroke=\"#888\"/>\n";
  }
  for (const BoundaryCurve& c : curves) {
    const bool dashed = c.label != CurveLabel::kImagePlane;
    os << "<polygon fill=\"none\" stroke=\"black\"" << (dashed ? " stroke-dasharray=\"6,4\"" : "")
       << " points=\"";
    for (std::size_t i = 0; i < c.samples.size(); ++i) {
      const PolarSample& s = c.samples[i];
      os << (i ? " " : "") << sx(s.r * std::cos(s.theta)) << ',' << sy(s.r * std::sin(s.theta));
    }
    os << "\"/>\n";
  }
  if (sidecar.contains("markers")) {
    for (const auto& [name, m] : sidecar["markers"].items()) {
      const double x = m[0].get<double>();
      const double y = m[1].get<double>();
      const double d = extent * 0.02;
      const char* colour = name == "identity" ? "red" : "blue";
      os << "<line x1=\"" << sx(x - d) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(x + d) << "\" y2=\""
         << sy(y) << "\" stroke=\"" << colour << "\"/>\n";
      os << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(y - d) << "\" x2=\"" << sx(x) << "\" y2=\""
         << sy(y + d) << "\" stroke=\"" << colour << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace posmap
