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
#include "hdfusion/edc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hdfusion {

namespace {

// Rotates v so its first largest-magnitude entry is real and positive.
void canonicalize_phase(Eigen::Ref<ComplexVector> v) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (std::abs(v(i)) > std::abs(v(best)) + 1e-12) best = i;
    }
    if (std::abs(v(best)) > 0.0) v *= std::conj(v(best)) / std::abs(v(best));
}

}  // namespace

CorrectionInput CorrectionInput::from_vectors(const std::vector<ComplexVector>& psi_list) {
    const auto d = static_cast<Eigen::Index>(psi_list.size());
    CorrectionInput in;
    in.psi.resize(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (psi_list[static_cast<std::size_t>(k)].size() != d) {
            throw std::invalid_argument("CorrectionInput: expected d vectors of length d");
        }
        in.psi.col(k) = psi_list[static_cast<std::size_t>(k)];
    }
    return in;
}

ComplexMatrix gram_matrix(const CorrectionInput& input) {
    if (input.psi.rows() != input.psi.cols()) {
        throw std::invalid_argument("gram_matrix: expected d vectors of length d");
    }
    return (input.psi.adjoint() * input.psi).transpose();
}

int count_extra_dimensions(const RealVector& ev) {
    if (ev.size() == 0) return 0;
    const double lam = ev(0);
    const double band = tol::kEigenEquality * std::max(std::abs(ev(ev.size() - 1)), 1e-300);
    int s = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev(i) - lam) > band) ++s;
    }
    return s;
}

ComplexMatrix isometry_extension(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("isometry_extension: matrix not square");
    const auto d = m.rows();
    if (d == 0) return ComplexMatrix(0, 0);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const RealVector sv = svd.singularValues();  // descending
    if (std::abs(sv(0) - 1.0) > 1e-9) {
        throw std::invalid_argument("isometry_extension: largest singular value must equal 1");
    }
    std::vector<Eigen::Index> below;
    for (Eigen::Index i = d - 1; i >= 0; --i) {
        if (1.0 - sv(i) > tol::kEigenEquality) below.push_back(i);
    }
    ComplexMatrix s(static_cast<Eigen::Index>(below.size()), d);
    for (std::size_t r = 0; r < below.size(); ++r) {
        ComplexVector v = svd.matrixV().col(below[r]);
        canonicalize_phase(v);
        const double m_i = sv(below[r]);
        s.row(static_cast<Eigen::Index>(r)) = std::sqrt(std::max(0.0, 1.0 - m_i * m_i)) * v.adjoint();
    }
    return s;
}

CorrectionResult correction_unitary(const CorrectionInput& input) {
    CorrectionResult out;
    out.gram = gram_matrix(input);
    const auto d = input.psi.cols();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(out.gram, Eigen::EigenvaluesOnly);
    const RealVector ev = es.eigenvalues();
    out.lambda = ev(0);
    if (!(out.lambda > tol::kIndependence)) {
        out.lambda = 0.0;
        out.degenerate = true;
        return out;
    }
    out.s = count_extra_dimensions(ev);

    const ComplexMatrix m = std::sqrt(out.lambda) * input.psi.inverse();
    const ComplexMatrix s_rows = isometry_extension(m);
    const auto n = d + s_rows.rows();

    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    u.topLeftCorner(d, d) = m;
    u.bottomLeftCorner(s_rows.rows(), d) = s_rows;

    // Gram-Schmidt completion against e_0, e_1, ... in index order.
    Eigen::Index filled = d;
    for (Eigen::Index e = 0; e < n && filled < n; ++e) {
        ComplexVector c = ComplexVector::Zero(n);
        c(e) = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < filled; ++k) c -= u.col(k) * u.col(k).dot(c);
        }
        const double nrm = c.norm();
        if (nrm < tol::kGramSchmidt) continue;
        c /= nrm;
        canonicalize_phase(c);
        u.col(filled++) = c;
    }
    out.unitary = std::move(u);
    return out;
}

double conversion_probability(const std::vector<double>& source, const std::vector<double>& target) {
    if (source.size() != target.size()) {
        throw std::invalid_argument("conversion_probability: length mismatch");
    }
    double best = 1.0;
    double ps = 0.0;
    double pt = 0.0;
    for (std::size_t t = 0; t + 1 < source.size(); ++t) {
        ps += source[t] * source[t];
        pt += target[t] * target[t];
        if (pt > 0.0) best = std::min(best, ps / pt);
    }
    return best;
}

std::vector<double> schmidt_coefficients(const QuditState& state) {
    const ComplexMatrix m = state.amplitude_matrix();
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const RealVector sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::ranges::sort(out);
    return out;
}

std::vector<ComplexMatrix> usd_povm(const CorrectionResult& result, const CorrectionInput& input) {
    const auto d = input.psi.cols();
    if (result.degenerate || result.unitary.rows() < d) {
        throw std::invalid_argument("usd_povm: correction result does not match input");
    }
    const ComplexMatrix m = result.unitary.topLeftCorner(d, d);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d + 1));
    ComplexMatrix rest = ComplexMatrix::Identity(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const ComplexVector row = m.row(k).adjoint();
        ComplexMatrix e = row * row.adjoint();
        rest -= e;
        out.push_back(std::move(e));
    }
    out.push_back(0.5 * (rest + rest.adjoint()));
    return out;
}

}  // namespace hdfusion
