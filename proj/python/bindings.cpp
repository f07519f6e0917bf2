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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posmap/builtins.hpp"
#include "posmap/io.hpp"
#include "posmap/normalizer.hpp"
#include "posmap/sections.hpp"
#include "posmap/zeros.hpp"

namespace py = pybind11;
using namespace posmap;

namespace {

HermitianMatrix hermitian(const ComplexMatrix& m) { return HermitianMatrix(m); }

py::dict zero_dict(const ProductZero& z) {
  py::dict d;
  d["phi"] = ComplexVector(z.phi);
  d["chi"] = ComplexVector(z.chi);
  d["value"] = z.value;
  d["kind"] = std::string(to_string(z.kind));
  d["in_continuum"] = z.in_continuum;
  d["hessian_spectrum"] = z.hessian_spectrum;
  return d;
}

Transform parse_transform(const std::string& s) {
  if (s == "none") return Transform::kNone;
  if (s == "map") return Transform::kMap;
  if (s == "image_plane") return Transform::kImagePlane;
  throw precondition_error("transform must be none, map or image_plane");
}

Frame parse_frame(const std::string& s) {
  if (s == "source") return Frame::kSource;
  if (s == "image") return Frame::kImage;
  throw precondition_error("frame must be source or image");
}

}  // namespace

PYBIND11_MODULE(_posmap, m) {
  m.doc() = "Positive maps and entanglement witnesses";

  py::register_exception<Error>(m, "PosmapError", PyExc_ValueError);

  py::class_<Witness>(m, "Witness")
      .def(py::init([](int mm, int nn, const ComplexMatrix& a) {
             return Witness(mm, nn, HermitianMatrix(a));
           }),
           py::arg("m"), py::arg("n"), py::arg("matrix"))
      .def_property_readonly("m", &Witness::m)
      .def_property_readonly("n", &Witness::n)
      .def_property_readonly("matrix", [](const Witness& w) { return w.matrix().matrix(); })
      .def("to_json", [](const Witness& w) { return to_json(w).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return witness_from_json(parse_json(s)); })
      .def("__repr__", [](const Witness& w) {
        return "<Witness " + std::to_string(w.m()) + "x" + std::to_string(w.n()) + ">";
      });

  m.def("choi_lam_witness",
        [](const std::string& scale) {
          if (scale != "map" && scale != "paper") throw precondition_error("scale must be map or paper");
          return choi_lam_witness(scale == "paper" ? WitnessScale::kPaper : WitnessScale::kMap);
        },
        py::arg("scale") = "map");
  m.def("horodecki_2x4_witness", &horodecki_2x4_witness);
  m.def("identity_witness", &identity_witness, py::arg("k"));
  m.def("transposition_witness", &transposition_witness, py::arg("k"));

  m.def("partial_transpose", &partial_transpose);
  m.def("apply_map", [](const Witness& w, const ComplexMatrix& x) {
    return apply_map(w, hermitian(x)).matrix();
  });
  m.def("apply_transposed_map", [](const Witness& w, const ComplexMatrix& y) {
    return apply_transposed_map(w, hermitian(y)).matrix();
  });
  m.def("biquadratic_form", &biquadratic_form, py::arg("witness"), py::arg("phi"), py::arg("chi"));

  m.def("diagnostics", [](const Witness& w) {
    const Diagnostics d = diagnostics(w);
    py::dict out;
    out["m"] = d.m;
    out["n"] = d.n;
    out["trace"] = d.trace;
    out["min_eigenvalue"] = d.min_eigenvalue;
    out["min_eigenvalue_pt"] = d.min_eigenvalue_pt;
    out["ppt"] = d.ppt();
    out["unitality_residual"] = d.unitality_residual;
    out["trace_preservation_residual"] = d.trace_preservation_residual;
    return out;
  });

  m.def(
      "normalize",
      [](const Witness& w, double tol, int max_iter, std::optional<ComplexMatrix> x0) {
        NormalizerOptions opts;
        opts.tol = tol;
        opts.max_iter = max_iter;
        if (x0) opts.x0 = hermitian(*x0);
        const NormalizationResult r = normalize(w, opts);
        py::dict out;
        out["witness"] = r.witness_out;
        out["u"] = r.u;
        out["v"] = r.v;
        out["x"] = r.x.matrix();
        out["y"] = r.y.matrix();
        out["history"] = r.history;
        out["converged"] = r.converged;
        out["iterations"] = r.iterations;
        out["unitality_residual"] = r.unitality_residual;
        out["trace_preservation_residual"] = r.trace_preservation_residual;
        return out;
      },
      py::arg("witness"), py::arg("tol") = 1e-12, py::arg("max_iter") = 200,
      py::arg("x0") = py::none());

  m.def(
      "contraction_spectrum",
      [](const Witness& w, const ComplexMatrix& x, const ComplexMatrix& y) {
        return contraction_spectrum(w, hermitian(x), hermitian(y));
      },
      py::arg("witness"), py::arg("x"), py::arg("y"));

  m.def(
      "find_zeros",
      [](const Witness& w, int starts, std::uint64_t seed, double tol) {
        ZeroSearchOptions opts;
        opts.starts = starts;
        opts.seed = seed;
        opts.tol = tol;
        py::list out;
        for (const ProductZero& z : find_zeros(w, opts)) out.append(zero_dict(z));
        return out;
      },
      py::arg("witness"), py::arg("starts") = 500, py::arg("seed") = 42, py::arg("tol") = 1e-9);

  m.def(
      "ring_zero",
      [](double theta, const std::string& branch) {
        if (branch != "+" && branch != "-") throw precondition_error("branch must be '+' or '-'");
        const BlochPoint p = ring_zero(theta, branch == "+" ? Branch::kPlus : Branch::kMinus);
        return std::make_tuple(p.x, p.y, p.z);
      },
      py::arg("theta"), py::arg("branch") = "+");
  m.def("ring_common_zeros", [] {
    std::vector<std::tuple<double, double, double>> out;
    for (const BlochPoint& p : ring_common_zeros()) out.emplace_back(p.x, p.y, p.z);
    return out;
  });

  py::class_<SectionPlane>(m, "SectionPlane")
      .def_readonly("k", &SectionPlane::k)
      .def_readonly("a", &SectionPlane::a)
      .def_readonly("b", &SectionPlane::b)
      .def_readonly("c", &SectionPlane::c)
      .def_property_readonly("b_axis", [](const SectionPlane& p) { return p.b_axis.matrix(); })
      .def_property_readonly("c_axis", [](const SectionPlane& p) { return p.c_axis.matrix(); })
      .def_property_readonly("frame", [](const SectionPlane& p) { return std::string(to_string(p.frame)); });

  m.def(
      "plane_from_states",
      [](const ComplexMatrix& r0, const ComplexMatrix& r1, const ComplexMatrix& r2,
         const std::string& frame, std::optional<Witness> w) {
        return plane_from_states(hermitian(r0), hermitian(r1), hermitian(r2), parse_frame(frame), w);
      },
      py::arg("rho0"), py::arg("rho1"), py::arg("rho2"), py::arg("frame") = "source",
      py::arg("witness") = py::none());

  m.def(
      "section_of_type",
      [](const std::string& type, int k, std::uint64_t seed, const std::string& frame,
         std::optional<Witness> w) {
        SectionSpec spec;
        spec.k = k;
        spec.seed = seed;
        spec.frame = parse_frame(frame);
        spec.witness = std::move(w);
        return section_of_type(parse_section_type(type), spec);
      },
      py::arg("type"), py::arg("k") = 3, py::arg("seed") = 42, py::arg("frame") = "source",
      py::arg("witness") = py::none());

  m.def(
      "scan_boundary",
      [](const SectionPlane& plane, const std::string& transform, int n_theta) {
        const BoundaryCurve c = scan_boundary(plane, parse_transform(transform), n_theta);
        RealVector theta(static_cast<Eigen::Index>(c.samples.size()));
        RealVector r(theta.size());
        for (std::size_t i = 0; i < c.samples.size(); ++i) {
          theta(static_cast<Eigen::Index>(i)) = c.samples[i].theta;
          r(static_cast<Eigen::Index>(i)) = c.samples[i].r;
        }
        return std::make_pair(theta, r);
      },
      py::arg("plane"), py::arg("transform") = "none", py::arg("n_theta") = 720);

  m.def(
      "project_point",
      [](const SectionPlane& plane, const ComplexMatrix& x) { return project_point(plane, hermitian(x)); },
      py::arg("plane"), py::arg("x"));
}
