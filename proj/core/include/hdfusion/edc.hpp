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

#include <vector>

#include "hdfusion/states.hpp"
#include "hdfusion/types.hpp"

namespace hdfusion {

/// The conditional states psi_k of (1/sqrt d) sum_k |k>|psi_k>, stored as
/// the columns of a d x d matrix. Columns need not be orthogonal or unit.
struct CorrectionInput {
    ComplexMatrix psi;

    static CorrectionInput from_vectors(const std::vector<ComplexVector>& psi_list);
    int dim() const { return static_cast<int>(psi.cols()); }
};

struct CorrectionResult {
    /// (d+s) x (d+s) unitary whose top-left block is sqrt(lambda) * psi^{-1}.
    ComplexMatrix unitary;
    double lambda = 0.0;
    int s = 0;
    ComplexMatrix gram;
    /// Set when the psi_k are linearly dependent; lambda is 0 and
    /// `unitary` is empty.
    bool degenerate = false;
};

/// B(i, j) = <psi_j | psi_i>.
ComplexMatrix gram_matrix(const CorrectionInput& input);

/// Number of eigenvalues of B (ascending) that differ from the smallest by
/// more than tol::kEigenEquality times the largest.
int count_extra_dimensions(const RealVector& ascending_eigenvalues);

/// Rows S with [M; S] an isometry, S = D'(V')^dagger built from the right
/// singular vectors of M whose singular values are below 1. Throws
/// std::invalid_argument unless the largest singular value of M is 1.
ComplexMatrix isometry_extension(const ComplexMatrix& m);

/// Synthesizes the extra-dimensional correction. Dependent input (smallest
/// Gram eigenvalue below tol::kIndependence) yields a degenerate result.
CorrectionResult correction_unitary(const CorrectionInput& input);

/// Optimal local conversion probability between two bipartite states given
/// their ascending Schmidt coefficients.
double conversion_probability(const std::vector<double>& source_schmidt,
                              const std::vector<double>& target_schmidt);

/// Ascending singular values of the amplitude matrix of a two-qudit state.
std::vector<double> schmidt_coefficients(const QuditState& state);

/// Unambiguous discrimination POVM on the input space: element k is
/// M^dagger |k><k| M with M the top-left block of the correction unitary,
/// followed by the inconclusive element I - sum_k. Returns d+1 matrices.
std::vector<ComplexMatrix> usd_povm(const CorrectionResult& result, const CorrectionInput& input);

}  // namespace hdfusion
