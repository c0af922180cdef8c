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

#include <span>

#include "hdfusion/types.hpp"

namespace hdfusion {

/// Matrix permanent by Ryser's formula with Gray-code subset ordering,
/// O(n 2^n). The 0x0 permanent is 1. Throws std::invalid_argument for
/// non-square input.
Complex permanent(const ComplexMatrix& m);

/// Permanent of the n x n matrix obtained by repeating row a of `distinct`
/// row_mult[a] times and column b col_mult[b] times.
///
/// Ryser's sum is taken over per-column counts 0..col_mult[b] rather than
/// over subsets, so the cost is prod(col_mult[b] + 1) instead of 2^n. The
/// cheaper of the row and column expansions is used. Bunched Fock states
/// (several photons in one mode) are the main client.
Complex permanent_repeated(const ComplexMatrix& distinct, std::span<const int> row_mult,
                           std::span<const int> col_mult);

}  // namespace hdfusion
