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

#include <complex>

#include <Eigen/Dense>

namespace hdfusion {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared across modules.
namespace tol {
/// U^dagger U = I check for every constructed interferometer.
inline constexpr double kUnitarity = 1e-10;
/// Amplitudes below this magnitude are dropped from sparse Fock vectors.
inline constexpr double kPrune = 1e-14;
/// Patterns whose weight falls below this are treated as zero-weight.
inline constexpr double kZeroWeight = 1e-13;
/// Smallest Gram eigenvalue accepted as linearly independent.
inline constexpr double kIndependence = 1e-9;
/// Relative band used when counting Gram eigenvalues equal to the minimum.
inline constexpr double kEigenEquality = 1e-8;
/// Residual norm below which a Gram-Schmidt candidate is skipped.
inline constexpr double kGramSchmidt = 1e-10;
}  // namespace tol

}  // namespace hdfusion
