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
#include <vector>

#include "hdfusion/types.hpp"

namespace hdfusion {

/// Linear-optical interferometer: a unitary acting on mode creation
/// operators, a_j^dagger -> sum_i U(i, j) a_i^dagger.
///
/// Construction validates U^dagger U = I to within tol::kUnitarity and
/// throws std::invalid_argument otherwise, so every instance is unitary.
class ModeUnitary {
   public:
    explicit ModeUnitary(ComplexMatrix matrix);

    static ModeUnitary identity(int n_modes);

    int n_modes() const { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix& matrix() const { return matrix_; }
    Complex operator()(int row, int col) const { return matrix_(row, col); }

    ModeUnitary adjoint() const;

    /// max |(U^dagger U - I)_ij|.
    double unitarity_error() const;

    bool approx_equal(const ModeUnitary& other, double tolerance) const;

   private:
    ComplexMatrix matrix_;
};

double unitarity_error(const ComplexMatrix& m);

/// F_n with entry (i, j) = exp(2 pi i ij / n) / sqrt(n).
ModeUnitary fourier_matrix(int n);

/// Permutation matrix sending mode i to mode perm[i].
ModeUnitary permutation_unitary(std::span<const int> perm);

/// Embeds `u` on `target_modes` (in the given order) of a `total_modes`
/// system, identity elsewhere.
ModeUnitary embed(const ModeUnitary& u, std::span<const int> target_modes, int total_modes);

/// Circuit-order composition: `first` is applied first, so the result is
/// second * first.
ModeUnitary compose(const ModeUnitary& first, const ModeUnitary& second);

/// Variable-reflectivity beamsplitter
/// [[sqrt(R), i sqrt(1-R)], [i sqrt(1-R), sqrt(R)]].
ModeUnitary beamsplitter_r(double reflectivity);

}  // namespace hdfusion
