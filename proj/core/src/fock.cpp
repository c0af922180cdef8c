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
#include "hdfusion/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hdfusion/permanent.hpp"

namespace hdfusion {

FockPattern::FockPattern(std::vector<int> occupations) : occupations_(std::move(occupations)) {
    for (int n : occupations_) {
        if (n < 0) throw std::invalid_argument("FockPattern: negative occupation");
        total_ += n;
    }
}

FockPattern::FockPattern(std::initializer_list<int> occupations)
    : FockPattern(std::vector<int>(occupations)) {}

FockPattern FockPattern::vacuum(int n_modes) {
    if (n_modes < 0) throw std::invalid_argument("FockPattern: negative mode count");
    return FockPattern(std::vector<int>(static_cast<std::size_t>(n_modes), 0));
}

FockPattern FockPattern::single(int mode, int n_modes) {
    if (mode < 0 || mode >= n_modes) throw std::invalid_argument("FockPattern: mode out of range");
    std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
    occ[static_cast<std::size_t>(mode)] = 1;
    return FockPattern(std::move(occ));
}

double FockPattern::factorial_product() const {
    double r = 1.0;
    for (int n : occupations_) r *= std::tgamma(n + 1.0);
    return r;
}

FockPattern FockPattern::concat(const FockPattern& other) const {
    std::vector<int> occ = occupations_;
    occ.insert(occ.end(), other.occupations_.begin(), other.occupations_.end());
    return FockPattern(std::move(occ));
}

std::string FockPattern::to_string() const {
    std::ostringstream os;
    os << '|';
    for (std::size_t i = 0; i < occupations_.size(); ++i) {
        if (i) os << ',';
        os << occupations_[i];
    }
    os << '>';
    return os.str();
}

FockVector::FockVector(int n_modes, std::initializer_list<std::pair<FockPattern, Complex>> terms)
    : n_modes_(n_modes) {
    for (const auto& [p, a] : terms) add(p, a);
}

FockVector FockVector::basis(const FockPattern& pattern) {
    FockVector v(pattern.n_modes());
    v.add(pattern, 1.0);
    return v;
}

void FockVector::add(const FockPattern& pattern, Complex amp) {
    if (pattern.n_modes() != n_modes_) {
        throw std::invalid_argument("FockVector: pattern has " + std::to_string(pattern.n_modes()) +
                                    " modes, expected " + std::to_string(n_modes_));
    }
    terms_[pattern] += amp;
}

Complex FockVector::amplitude(const FockPattern& pattern) const {
    auto it = terms_.find(pattern);
    return it == terms_.end() ? Complex{} : it->second;
}

double FockVector::norm_squared() const {
    double s = 0.0;
    for (const auto& [p, a] : terms_) s += std::norm(a);
    return s;
}

bool FockVector::is_normalized(double tolerance) const {
    return std::abs(norm_squared() - 1.0) <= tolerance;
}

FockVector& FockVector::scale(Complex factor) {
    for (auto& [p, a] : terms_) a *= factor;
    return *this;
}

void FockVector::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

int FockVector::photon_number() const {
    if (terms_.empty()) throw std::logic_error("FockVector: empty state has no photon number");
    const int n = terms_.begin()->first.total_photons();
    for (const auto& [p, a] : terms_) {
        if (p.total_photons() != n) throw std::logic_error("FockVector: indefinite photon number");
    }
    return n;
}

FockVector FockVector::tensor(const FockVector& other) const {
    FockVector out(n_modes_ + other.n_modes_);
    for (const auto& [p, a] : terms_) {
        for (const auto& [q, b] : other.terms_) out.add(p.concat(q), a * b);
    }
    return out;
}

FockVector FockVector::embedded(std::span<const int> target_modes, int total_modes) const {
    if (static_cast<int>(target_modes.size()) != n_modes_) {
        throw std::invalid_argument("FockVector::embedded: target size mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(std::max(total_modes, 0)), false);
    for (int m : target_modes) {
        if (m < 0 || m >= total_modes || seen[static_cast<std::size_t>(m)]) {
            throw std::invalid_argument("FockVector::embedded: invalid target modes");
        }
        seen[static_cast<std::size_t>(m)] = true;
    }
    FockVector out(total_modes);
    for (const auto& [p, a] : terms_) {
        std::vector<int> occ(static_cast<std::size_t>(total_modes), 0);
        for (int i = 0; i < n_modes_; ++i) occ[static_cast<std::size_t>(target_modes[static_cast<std::size_t>(i)])] = p[i];
        out.add(FockPattern(std::move(occ)), a);
    }
    return out;
}

double FockVector::distance(const FockVector& other) const {
    double d = 0.0;
    for (const auto& [p, a] : terms_) d = std::max(d, std::abs(a - other.amplitude(p)));
    for (const auto& [p, b] : other.terms_) {
        if (!terms_.contains(p)) d = std::max(d, std::abs(b));
    }
    return d;
}

namespace {

// Distinct occupied modes with their multiplicities.
void occupied(const FockPattern& p, std::vector<int>& modes, std::vector<int>& mult) {
    modes.clear();
    mult.clear();
    for (int m = 0; m < p.n_modes(); ++m) {
        if (p[m] > 0) {
            modes.push_back(m);
            mult.push_back(p[m]);
        }
    }
}

}  // namespace

Complex transition_amplitude(const ModeUnitary& u, const FockPattern& input,
                             const FockPattern& output) {
    if (input.n_modes() != u.n_modes() || output.n_modes() != u.n_modes()) {
        throw std::invalid_argument("transition_amplitude: pattern/unitary dimension mismatch");
    }
    if (input.total_photons() != output.total_photons()) return 0.0;
    std::vector<int> in_modes, in_mult, out_modes, out_mult;
    occupied(input, in_modes, in_mult);
    occupied(output, out_modes, out_mult);
    ComplexMatrix sub(static_cast<Eigen::Index>(out_modes.size()),
                      static_cast<Eigen::Index>(in_modes.size()));
    for (std::size_t a = 0; a < out_modes.size(); ++a) {
        for (std::size_t b = 0; b < in_modes.size(); ++b) {
            sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = u(out_modes[a], in_modes[b]);
        }
    }
    const Complex per = permanent_repeated(sub, out_mult, in_mult);
    return per / std::sqrt(input.factorial_product() * output.factorial_product());
}

FockVector apply_unitary(const FockVector& state, const ModeUnitary& u) {
    if (state.n_modes() != u.n_modes()) {
        throw std::invalid_argument("apply_unitary: state/unitary dimension mismatch");
    }
    FockVector out(state.n_modes());
    // Group input terms by photon number so each output sector is enumerated once.
    std::map<int, std::vector<std::pair<FockPattern, Complex>>> sectors;
    for (const auto& [p, a] : state.terms()) sectors[p.total_photons()].emplace_back(p, a);
    for (const auto& [n, terms] : sectors) {
        for (const FockPattern& q : Compositions(state.n_modes(), n)) {
            Complex acc{};
            for (const auto& [p, a] : terms) acc += a * transition_amplitude(u, p, q);
            if (std::abs(acc) >= tol::kPrune) out.add(q, acc);
        }
    }
    return out;
}

Compositions::Compositions(int n_modes, int n_photons) : n_modes_(n_modes), n_photons_(n_photons) {
    if (n_modes < 1) throw std::invalid_argument("Compositions: need at least one mode");
    if (n_photons < 0) throw std::invalid_argument("Compositions: negative photon count");
}

Compositions::iterator::iterator(int n_modes, int n_photons)
    : occ_(static_cast<std::size_t>(n_modes), 0), done_(false) {
    occ_[0] = n_photons;
    current_ = FockPattern(occ_);
}

// Decreasing lexicographic successor: find the rightmost non-last position
// i with occ[i] > 0, move one photon to i+1 and gather the tail there.
Compositions::iterator& Compositions::iterator::operator++() {
    const auto m = occ_.size();
    if (m == 1) {
        done_ = true;
        return *this;
    }
    std::size_t i = m - 1;
    while (i > 0 && occ_[i - 1] == 0) --i;
    if (i == 0) {
        done_ = true;
        return *this;
    }
    --i;
    const int tail = occ_[m - 1];
    occ_[m - 1] = 0;
    occ_[i] -= 1;
    occ_[i + 1] = tail + 1;
    current_ = FockPattern(occ_);
    return *this;
}

std::uint64_t composition_count(int n_modes, int n_photons) {
    // C(n + m - 1, m - 1) computed incrementally; exact for in-scope sizes.
    const int k = n_modes - 1;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n_photons + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<FockPattern> enumerate_patterns(int n_modes, int n_photons, const PatternFilter& filter) {
    std::vector<FockPattern> out;
    for (const FockPattern& p : Compositions(n_modes, n_photons)) {
        if (!filter || filter(p)) out.push_back(p);
    }
    return out;
}

std::vector<FockPattern> enumerate_grouped(int n_modes, const std::vector<std::vector<int>>& groups,
                                           const std::vector<std::vector<int>>& group_counts) {
    std::vector<int> owner(static_cast<std::size_t>(n_modes), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw std::invalid_argument("enumerate_grouped: empty group");
        for (int m : groups[g]) {
            if (m < 0 || m >= n_modes || owner[static_cast<std::size_t>(m)] != -1) {
                throw std::invalid_argument("enumerate_grouped: groups must partition the modes");
            }
            owner[static_cast<std::size_t>(m)] = static_cast<int>(g);
        }
    }
    if (std::ranges::find(owner, -1) != owner.end()) {
        throw std::invalid_argument("enumerate_grouped: groups must partition the modes");
    }

    std::vector<FockPattern> out;
    for (const auto& counts : group_counts) {
        if (counts.size() != groups.size()) {
            throw std::invalid_argument("enumerate_grouped: count vector size mismatch");
        }
        std::vector<std::vector<FockPattern>> per_group;
        per_group.reserve(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) {
            per_group.push_back(enumerate_patterns(static_cast<int>(groups[g].size()), counts[g]));
        }
        // Odometer over the per-group choices.
        std::vector<std::size_t> pick(groups.size(), 0);
        std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
        while (true) {
            for (std::size_t g = 0; g < groups.size(); ++g) {
                const FockPattern& local = per_group[g][pick[g]];
                for (std::size_t j = 0; j < groups[g].size(); ++j) {
                    occ[static_cast<std::size_t>(groups[g][j])] = local[static_cast<int>(j)];
                }
            }
            out.emplace_back(occ);
            std::size_t g = 0;
            while (g < groups.size()) {
                if (++pick[g] < per_group[g].size()) break;
                pick[g] = 0;
                ++g;
            }
            if (g == groups.size()) break;
        }
    }
    std::ranges::sort(out, std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hdfusion
