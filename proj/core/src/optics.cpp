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
#include "hdfusion/optics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hdfusion {

double unitarity_error(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    const ComplexMatrix g = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
    return g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
}

ModeUnitary::ModeUnitary(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw std::invalid_argument("ModeUnitary: matrix is not square");
    }
    const double err = hdfusion::unitarity_error(matrix_);
    if (!(err <= tol::kUnitarity)) {
        throw std::invalid_argument("ModeUnitary: matrix is not unitary (error " + std::to_string(err) + ")");
    }
}

ModeUnitary ModeUnitary::identity(int n_modes) {
    if (n_modes < 0) throw std::invalid_argument("ModeUnitary: negative mode count");
    return ModeUnitary(ComplexMatrix::Identity(n_modes, n_modes));
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(matrix_.adjoint()); }

double ModeUnitary::unitarity_error() const { return hdfusion::unitarity_error(matrix_); }

bool ModeUnitary::approx_equal(const ModeUnitary& other, double tolerance) const {
    if (n_modes() != other.n_modes()) return false;
    return n_modes() == 0 || (matrix_ - other.matrix_).cwiseAbs().maxCoeff() <= tolerance;
}

ModeUnitary fourier_matrix(int n) {
    if (n < 1) throw std::invalid_argument("fourier_matrix: n must be >= 1");
    ComplexMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Reduce the exponent first so large n keeps full phase accuracy.
            const int k = (i * j) % n;
            const double theta = 2.0 * std::numbers::pi * k / n;
            f(i, j) = std::polar(scale, theta);
        }
    }
    return ModeUnitary(std::move(f));
}

ModeUnitary permutation_unitary(std::span<const int> perm) {
    const auto n = static_cast<int>(perm.size());
    std::vector<bool> hit(perm.size(), false);
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int t = perm[static_cast<std::size_t>(i)];
        if (t < 0 || t >= n || hit[static_cast<std::size_t>(t)]) {
            throw std::invalid_argument("permutation_unitary: not a permutation");
        }
        hit[static_cast<std::size_t>(t)] = true;
        p(t, i) = 1.0;
    }
    return ModeUnitary(std::move(p));
}

ModeUnitary embed(const ModeUnitary& u, std::span<const int> target_modes, int total_modes) {
    if (static_cast<int>(target_modes.size()) != u.n_modes()) {
        throw std::invalid_argument("embed: target mode count does not match unitary");
    }
    if (total_modes < 0) throw std::invalid_argument("embed: negative mode count");
    std::vector<bool> hit(static_cast<std::size_t>(total_modes), false);
    for (int m : target_modes) {
        if (m < 0 || m >= total_modes || hit[static_cast<std::size_t>(m)]) {
            throw std::invalid_argument("embed: duplicate or out-of-range target mode");
        }
        hit[static_cast<std::size_t>(m)] = true;
    }
    ComplexMatrix out = ComplexMatrix::Identity(total_modes, total_modes);
    const auto k = target_modes.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            out(target_modes[a], target_modes[b]) = u(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return ModeUnitary(std::move(out));
}

ModeUnitary compose(const ModeUnitary& first, const ModeUnitary& second) {
    if (first.n_modes() != second.n_modes()) {
        throw std::invalid_argument("compose: mode count mismatch");
    }
    return ModeUnitary(second.matrix() * first.matrix());
}

ModeUnitary beamsplitter_r(double reflectivity) {
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
        throw std::invalid_argument("beamsplitter_r: reflectivity must lie in [0, 1]");
    }
    const double t = std::sqrt(reflectivity);
    const double r = std::sqrt(1.0 - reflectivity);
    ComplexMatrix m(2, 2);
    m << Complex(t, 0.0), Complex(0.0, r), Complex(0.0, r), Complex(t, 0.0);
    return ModeUnitary(std::move(m));
}

}  // namespace hdfusion
