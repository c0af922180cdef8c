// Copyright 2026 The hdfusion Authors
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
#pragma once

#include <json.hpp>

#include "hdfusion/edc.hpp"
#include "hdfusion/fock.hpp"
#include "hdfusion/fusion.hpp"
#include "hdfusion/optics.hpp"

namespace hdfusion::io {

using Json = nlohmann::json;

/// Complex numbers are [re, im].
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Matrices are row-major arrays of rows of [re, im].
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// FockPattern: array of occupations.
Json to_json(const FockPattern& p);
FockPattern pattern_from_json(const Json& j);

/// FockVector: array of {pattern, amp}. `n_modes` is needed only when the
/// array is empty.
Json to_json(const FockVector& v);
FockVector fock_vector_from_json(const Json& j, int n_modes = -1);

/// ModeUnitary: {n_modes, rows}. Reading validates unitarity.
Json to_json(const ModeUnitary& u);
ModeUnitary unitary_from_json(const Json& j);

/// CorrectionInput: {d, psi: [vector_0, vector_1, ...]}.
Json to_json(const CorrectionInput& in);
CorrectionInput correction_input_from_json(const Json& j);

/// CorrectionResult: {lambda, s, degenerate, gram, unitary}.
Json to_json(const CorrectionResult& r);
CorrectionResult correction_result_from_json(const Json& j);

/// Protocol report; per-pattern records are included when present.
Json to_json(const FusionReport& r);
FusionReport report_from_json(const Json& j);

}  // namespace hdfusion::io
