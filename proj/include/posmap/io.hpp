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

// File formats.
//
//   HermitianMatrix  {"dim": k, "entries": [[re, im], ...]}, row-major, k^2 pairs
//   Witness          {"m": m, "n": n, "matrix": <HermitianMatrix>}
//   complex matrix   {"rows": r, "cols": c, "entries": [[re, im], ...]}
//   complex vector   [[re, im], ...]
//
// Curves are CSV with header theta,r,label. Doubles are written with
// enough digits to round-trip.

#ifndef POSMAP_IO_HPP
#define POSMAP_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "posmap/bipartite.hpp"
#include "posmap/builtins.hpp"
#include "posmap/normalizer.hpp"
#include "posmap/sections.hpp"
#include "posmap/zeros.hpp"

namespace posmap {

using Json = nlohmann::ordered_json;

Json to_json(const HermitianMatrix& x);
Json to_json(const Witness& w);
Json to_json(const Diagnostics& d);
Json to_json(const NormalizationResult& r);
Json to_json(const std::vector<ProductZero>& zeros);
Json complex_matrix_to_json(const ComplexMatrix& m);
Json complex_vector_to_json(const ComplexVector& v);

/// The readers throw Error(kParse) naming the offending field.
HermitianMatrix hermitian_from_json(const Json& j);
Witness witness_from_json(const Json& j);
ComplexMatrix complex_matrix_from_json(const Json& j);
ComplexVector complex_vector_from_json(const Json& j);

/// Parses JSON text; syntax errors become Error(kParse) with line and
/// column. `source` names the input in messages.
Json parse_json(const std::string& text, const std::string& source = "<input>");

std::string read_text_file(const std::string& path);
Witness read_witness_file(const std::string& path);
HermitianMatrix read_hermitian_file(const std::string& path);

/// Writes to a temporary file beside `path` and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

/// Shortest decimal form that round-trips.
std::string format_double(double v);

std::string curves_csv(const std::vector<BoundaryCurve>& curves);

/// n_samples uniform angles in [-pi, pi) for each branch.
std::string rings_csv(int n_samples, const RingParams& p = {});

/// Sidecar for a section: plane constants, markers and curve summaries.
/// Image markers are omitted when the plane has no map.
Json section_sidecar(const SectionPlane& plane, const std::vector<BoundaryCurve>& curves);

/// Standalone SVG of the curves with the marker crosses from the sidecar.
std::string render_svg(const std::vector<BoundaryCurve>& curves, const Json& sidecar);

}  // namespace posmap

#endif  // POSMAP_IO_HPP
