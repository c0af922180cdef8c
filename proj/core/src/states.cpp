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
#include "hdfusion/states.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>

namespace hdfusion {

QuditState::QuditState(int d, int n_qudits) : d_(d), n_qudits_(n_qudits) {
    if (d < 1) throw std::invalid_argument("QuditState: dimension must be >= 1");
    if (n_qudits < 0) throw std::invalid_argument("QuditState: negative qudit count");
}

void QuditState::add(const Ket& ket, Complex amp) {
    if (static_cast<int>(ket.size()) != n_qudits_) {
        throw std::invalid_argument("QuditState: ket length mismatch");
    }
    for (int k : ket) {
        if (k < 0 || k >= d_) throw std::invalid_argument("QuditState: qudit value out of range");
    }
    terms_[ket] += amp;
}

Complex QuditState::amplitude(const Ket& ket) const {
    auto it = terms_.find(ket);
    return it == terms_.end() ? Complex{} : it->second;
}

double QuditState::norm_squared() const {
    double s = 0.0;
    for (const auto& [k, a] : terms_) s += std::norm(a);
    return s;
}

bool QuditState::is_normalized(double tolerance) const {
    return std::abs(norm_squared() - 1.0) <= tolerance;
}

QuditState& QuditState::scale(Complex factor) {
    for (auto& [k, a] : terms_) a *= factor;
    return *this;
}

FockVector QuditState::to_fock() const {
    const int n_modes = d_ * n_qudits_;
    FockVector out(n_modes);
    for (const auto& [ket, a] : terms_) {
        std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
        for (int q = 0; q < n_qudits_; ++q) occ[static_cast<std::size_t>(d_ * q + ket[static_cast<std::size_t>(q)])] = 1;
        out.add(FockPattern(std::move(occ)), a);
    }
    return out;
}

QuditState QuditState::from_fock(const FockVector& v, int d) {
    if (d < 1 || v.n_modes() % d != 0) {
        throw std::invalid_argument("QuditState::from_fock: mode count not a multiple of d");
    }
    const int n = v.n_modes() / d;
    QuditState out(d, n);
    for (const auto& [p, a] : v.terms()) {
        Ket ket(static_cast<std::size_t>(n), -1);
        for (int q = 0; q < n; ++q) {
            int photons = 0;
            for (int k = 0; k < d; ++k) {
                const int c = p[d * q + k];
                photons += c;
                if (c == 1) ket[static_cast<std::size_t>(q)] = k;
            }
            if (photons != 1) {
                throw std::invalid_argument("QuditState::from_fock: term " + p.to_string() +
                                            " is not one photon per qudit");
            }
        }
        out.add(ket, a);
    }
    return out;
}

ComplexMatrix QuditState::amplitude_matrix() const {
    if (n_qudits_ != 2) throw std::invalid_argument("amplitude_matrix: state is not bipartite");
    ComplexMatrix m = ComplexMatrix::Zero(d_, d_);
    for (const auto& [ket, a] : terms_) m(ket[0], ket[1]) += a;
    return m;
}

QuditState QuditState::from_amplitude_matrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("from_amplitude_matrix: not square");
    const auto d = static_cast<int>(m.rows());
    QuditState out(d, 2);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (m(i, j) != Complex{}) out.add({i, j}, m(i, j));
        }
    }
    return out;
}

ComplexMatrix pauli_matrix(const QuditPauli& p) {
    if (p.d < 1) throw std::invalid_argument("pauli_matrix: dimension must be >= 1");
    const int d = p.d;
    const int x = ((p.x % d) + d) % d;
    const int z = ((p.z % d) + d) % d;
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        // X^x Z^z |k> = omega^{zk} |k + x>.
        m((k + x) % d, k) = std::polar(1.0, 2.0 * std::numbers::pi * ((z * k) % d) / d);
    }
    return m;
}

QuditState bell_state(int d) {
    if (d < 2) throw std::invalid_argument("bell_state: d must be >= 2");
    QuditState s(d, 2);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) s.add({k, k}, a);
    return s;
}

QuditState w_state(int d) {
    if (d < 2) throw std::invalid_argument("w_state: d must be >= 2");
    QuditState s(d, 1);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) s.add({k}, a);
    return s;
}

QuditState ancilla_A(int d) {
    if (d < 4 || d % 2 != 0) throw std::invalid_argument("ancilla_A: d must be even and >= 4");
    QuditState s(d, d - 2);
    const double a = 1.0 / std::sqrt(d / 2.0);
    for (int r = 0; r < d / 2; ++r) {
        QuditState::Ket ket(static_cast<std::size_t>(d - 2));
        for (int q = 0; q < d - 2; ++q) ket[static_cast<std::size_t>(q)] = (q + 2 * r) % d;
        s.add(ket, a);
    }
    return s;
}

FockVector bunched_state(int r, int mode, int n_modes) {
    if (r < 0) throw std::invalid_argument("bunched_state: negative photon count");
    if (mode < 0 || mode >= n_modes) throw std::invalid_argument("bunched_state: mode out of range");
    std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
    occ[static_cast<std::size_t>(mode)] = r;
    return FockVector::basis(FockPattern(std::move(occ)));
}

FockVector boost_ancilla(int d) {
    if (d < 2) throw std::invalid_argument("boost_ancilla: d must be >= 2");
    FockVector v(d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        std::vector<int> occ(static_cast<std::size_t>(d), 0);
        occ[static_cast<std::size_t>(k)] = d;
        v.add(FockPattern(std::move(occ)), a);
    }
    return v;
}

FockVector named_state(const std::string& name) {
    static const std::regex simple(R"(^(A|W|B|boost)(\d+)$)");
    static const std::regex bunched(R"(^bunched:(\d+)@(\d+)/(\d+)$)");
    std::smatch m;
    if (std::regex_match(name, m, simple)) {
        const int d = std::stoi(m[2]);
        const std::string kind = m[1];
        if (kind == "A") return ancilla_A(d).to_fock();
        if (kind == "W") return w_state(d).to_fock();
        if (kind == "B") return bell_state(d).to_fock();
        return boost_ancilla(d);
    }
    if (std::regex_match(name, m, bunched)) {
        return bunched_state(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    }
    throw std::invalid_argument("unknown state name '" + name + "'");
}

}  // namespace hdfusion
