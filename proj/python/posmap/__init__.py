# Copyright 2026 The posmap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Positive maps on Hermitian matrices and their entanglement witnesses."""

from ._posmap import (
    PosmapError,
    SectionPlane,
    Witness,
    apply_map,
    apply_transposed_map,
    biquadratic_form,
    choi_lam_witness,
    contraction_spectrum,
    diagnostics,
    find_zeros,
    horodecki_2x4_witness,
    identity_witness,
    normalize,
    partial_transpose,
    plane_from_states,
    project_point,
    ring_common_zeros,
    ring_zero,
    scan_boundary,
    section_of_type,
    transposition_witness,
)

__all__ = [
    "PosmapError",
    "SectionPlane",
    "Witness",
    "apply_map",
    "apply_transposed_map",
    "biquadratic_form",
    "choi_lam_witness",
    "contraction_spectrum",
    "diagnostics",
    "find_zeros",
    "horodecki_2x4_witness",
    "identity_witness",
    "normalize",
    "partial_transpose",
    "plane_from_states",
    "project_point",
    "ring_common_zeros",
    "ring_zero",
    "scan_boundary",
    "section_of_type",
    "transposition_witness",
]
