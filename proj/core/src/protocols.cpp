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
#include "hdfusion/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hdfusion {

namespace {

ComplexVector unit(int n, int m) {
    ComplexVector v = ComplexVector::Zero(n);
    v(m) = 1.0;
    return v;
}

std::vector<int> iota_modes(int first, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), first);
    return v;
}

// Groups of modes sharing a time bin on a ports x bins grid.
PatternSpace one_photon_per_bin(int ports, int bins) {
    PatternSpace space;
    for (int b = 0; b < bins; ++b) {
        std::vector<int> g;
        for (int p = 0; p < ports; ++p) g.push_back(bins * p + b);
        space.groups.push_back(std::move(g));
    }
    space.counts.emplace_back(static_cast<std::size_t>(bins), 1);
    return space;
}

bool one_per_bin(const FockPattern& p, int ports, int bins) {
    for (int b = 0; b < bins; ++b) {
        int n = 0;
        for (int q = 0; q < ports; ++q) n += p[bins * q + b];
        if (n != 1) return false;
    }
    return true;
}

// A single W-state qudit on `port` as one creation vector.
Creation w_creation(int n_modes, int d, int port) {
    ComplexVector v = ComplexVector::Zero(n_modes);
    for (int k = 0; k < d; ++k) v(d * port + k) = 1.0 / std::sqrt(static_cast<double>(d));
    return {std::move(v), 1};
}

Ancilla single_photons(int n_modes, const std::vector<int>& modes) {
    Ancilla a(n_modes);
    AncillaTerm t;
    for (int m : modes) t.ops.push_back({unit(n_modes, m), 1});
    a.add_term(std::move(t));
    return a;
}

// Fourier projection over ports 0..d-1 with W-state ancillae on ports 2..d-1.
FusionProtocol wstate_base(int d, int total_modes) {
    FusionProtocol p;
    p.d = d;
    p.circuit = fourier_layer(d, d, total_modes);
    p.qudit0_modes = iota_modes(0, d);
    p.qudit1_modes = iota_modes(d, d);
    p.ancilla = Ancilla(total_modes);
    if (d > 2) {
        AncillaTerm t;
        for (int port = 2; port < d; ++port) t.ops.push_back(w_creation(total_modes, d, port));
        p.ancilla.add_term(std::move(t));
    }
    return p;
}

}  // namespace

ModeUnitary fourier_layer(int ports, int bins, int total_modes, int first_mode) {
    if (ports < 1 || bins < 1) throw std::invalid_argument("fourier_layer: empty grid");
    const ModeUnitary f = fourier_matrix(ports);
    ComplexMatrix m = ComplexMatrix::Identity(total_modes, total_modes);
    for (int b = 0; b < bins; ++b) {
        std::vector<int> modes;
        for (int p = 0; p < ports; ++p) modes.push_back(first_mode + bins * p + b);
        m = embed(f, modes, total_modes).matrix() * m;
    }
    return ModeUnitary(std::move(m));
}

FusionProtocol protocol_odd(int d, int embed_dim) {
    const int big = embed_dim;
    if (big < 2 || big % 2 != 0) throw std::invalid_argument("protocol_odd: embedding dimension must be even");
    if (d < 2 || big < d) throw std::invalid_argument("protocol_odd: need 2 <= d <= D");
    const int n = big * big;

    FusionProtocol p;
    p.name = big == d ? "even" : "odd";
    p.d = d;
    p.embed_dim = big == d ? 0 : big;
    p.params = {{"d", d}, {"D", big}};

    // Pair-swap the time bins of port 1, then Fourier-project.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int b = 0; b < big; ++b) perm[static_cast<std::size_t>(big + b)] = big + (b ^ 1);
    p.circuit = compose(permutation_unitary(perm), fourier_layer(big, big, n));

    p.qudit0_modes = iota_modes(0, big);
    p.qudit1_modes = iota_modes(big, big);
    if (big >= 4) {
        const std::vector<int> targets = iota_modes(2 * big, n - 2 * big);
        p.ancilla = Ancilla::from_fock(ancilla_A(big).to_fock().embedded(targets, n));
    } else {
        p.ancilla = Ancilla(n);
    }
    p.space = one_photon_per_bin(big, big);
    p.classify = [big](const FockPattern& q) {
        return Classification{one_per_bin(q, big, big) ? Verdict::kUnitary : Verdict::kFail, Route::kStandard};
    };
    return p;
}

FusionProtocol protocol_even(int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("protocol_even: d must be even and >= 2");
    return protocol_odd(d, d);
}

FusionProtocol protocol_wstate(int d, bool edc, bool restricted) {
    if (d < 3) throw std::invalid_argument("protocol_wstate: d must be >= 3");
    FusionProtocol p = wstate_base(d, d * d);
    p.name = "wstate";
    p.params = {{"d", d}, {"edc", edc ? 1 : 0}, {"restricted", restricted ? 1 : 0}};
    p.space = one_photon_per_bin(d, d);
    const Verdict accept = edc ? Verdict::kEdc : Verdict::kUnitary;
    p.classify = [d, accept, restricted](const FockPattern& q) {
        if (!one_per_bin(q, d, d)) return Classification{};
        if (restricted) {
            int ports_hit = 0;
            for (int port = 0; port < d; ++port) {
                int n = 0;
                for (int b = 0; b < d; ++b) n += q[d * port + b];
                if (n > 0) ++ports_hit;
            }
            if (ports_hit != 1) return Classification{};
        }
        return Classification{accept, Route::kStandard};
    };
    return p;
}

FusionProtocol protocol_ztl(int d, int r, bool edc) {
    if (d < 2) throw std::invalid_argument("protocol_ztl: d must be >= 2");
    if (r < 0) throw std::invalid_argument("protocol_ztl: r must be >= 0");
    const int n = 2 * d + 1;
    FusionProtocol p;
    p.name = "ztl";
    p.d = d;
    p.params = {{"d", d}, {"r", r}, {"edc", edc ? 1 : 0}};
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < d; ++k) perm[static_cast<std::size_t>(d + 1 + k)] = d + 1 + (d - 1 - k);
    p.circuit = compose(permutation_unitary(perm), fourier_matrix(n));
    p.qudit0_modes = iota_modes(1, d);
    p.qudit1_modes = iota_modes(d + 1, d);
    p.ancilla = Ancilla::from_fock(bunched_state(r, 0, n));
    p.space = PatternSpace::all(n, r + 2);
    const Verdict v = edc ? Verdict::kEdc : Verdict::kUnitary;
    p.classify = [v](const FockPattern&) { return Classification{v, Route::kStandard}; };
    return p;
}

FusionProtocol protocol_boost_qubit(int r, bool both_sides, bool edc) {
    if (r < 1) throw std::invalid_argument("protocol_boost_qubit: r must be >= 1");
    const int extra = both_sides ? 2 * r : r;
    const int n = 4 + extra;
    FusionProtocol p;
    p.name = "boost-qubit";
    p.d = 2;
    p.params = {{"r", r}, {"both_sides", both_sides ? 1 : 0}, {"edc", edc ? 1 : 0}};

    ModeUnitary u = fourier_layer(2, 2, n);
    std::vector<int> side0{0, 1};
    for (int k = 0; k < r; ++k) side0.push_back(4 + k);
    u = compose(u, embed(fourier_matrix(2 + r), side0, n));
    if (both_sides) {
        std::vector<int> side1{2, 3};
        for (int k = 0; k < r; ++k) side1.push_back(4 + r + k);
        u = compose(u, embed(fourier_matrix(2 + r), side1, n));
    }
    p.circuit = u;
    p.qudit0_modes = {0, 1};
    p.qudit1_modes = {2, 3};
    p.ancilla = single_photons(n, iota_modes(4, extra));
    p.space = PatternSpace::all(n, 2 + extra);
    const Verdict v = edc ? Verdict::kEdc : Verdict::kUnitary;
    p.classify = [v](const FockPattern&) { return Classification{v, Route::kStandard}; };
    return p;
}

FusionProtocol protocol_boost_qutrit(int r) {
    if (r < 1) throw std::invalid_argument("protocol_boost_qutrit: r must be >= 1");
    constexpr int d = 3;
    const int n = d * d + r;
    FusionProtocol p = wstate_base(d, n);
    p.name = "boost-qutrit";
    p.params = {{"d", d}, {"r", r}};
    std::vector<int> modes{0, 1, 2};
    for (int k = 0; k < r; ++k) modes.push_back(d * d + k);
    p.circuit = compose(p.circuit, embed(fourier_matrix(d + r), modes, n));
    p.ancilla = p.ancilla.times(single_photons(n, iota_modes(d * d, r)));
    p.space = PatternSpace::all(n, 2 + p.ancilla.photons());
    p.classify = [](const FockPattern&) { return Classification{Verdict::kEdc, Route::kStandard}; };
    return p;
}

namespace {

void bin_count_vectors(int d, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == d) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int n = 1; n <= remaining; n += d) {
        cur.push_back(n);
        bin_count_vectors(d, remaining - n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

FusionProtocol protocol_ghz_boost(int d, const std::vector<int>& boosted_ports) {
    if (d < 2) throw std::invalid_argument("protocol_ghz_boost: d must be >= 2");
    std::set<int> boosted(boosted_ports.begin(), boosted_ports.end());
    if (boosted.empty() || boosted.size() != boosted_ports.size() || *boosted.begin() < 0 ||
        *boosted.rbegin() >= d) {
        throw std::invalid_argument("protocol_ghz_boost: boosted ports must be distinct and in [0, d)");
    }
    const int nb = static_cast<int>(boosted.size());
    const int block = d * d;
    const int n = nb * block + (d - nb) * d;

    // First mode of each fusion port in the output layout.
    std::vector<int> port_start(static_cast<std::size_t>(d));
    {
        int b = 0;
        int u = 0;
        for (int port = 0; port < d; ++port) {
            port_start[static_cast<std::size_t>(port)] =
                boosted.contains(port) ? block * b++ : nb * block + d * u++;
        }
    }

    FusionProtocol p;
    p.name = "ghz-boost";
    p.d = d;
    p.params = {{"d", d}, {"boosted_ports", nb}};

    const ModeUnitary f = fourier_matrix(d);
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    for (int bin = 0; bin < d; ++bin) {
        std::vector<int> modes;
        for (int port = 0; port < d; ++port) modes.push_back(port_start[static_cast<std::size_t>(port)] + bin);
        u = embed(f, modes, n).matrix() * u;
    }
    for (int b = 0; b < nb; ++b) u = fourier_layer(d, d, n, b * block).matrix() * u;
    p.circuit = ModeUnitary(std::move(u));

    p.qudit0_modes = iota_modes(port_start[0], d);
    p.qudit1_modes = iota_modes(port_start[1], d);

    Ancilla anc(n);
    if (d > 2) {
        AncillaTerm t;
        for (int port = 2; port < d; ++port) {
            ComplexVector v = ComplexVector::Zero(n);
            for (int k = 0; k < d; ++k) v(port_start[static_cast<std::size_t>(port)] + k) = 1.0 / std::sqrt(static_cast<double>(d));
            t.ops.push_back({std::move(v), 1});
        }
        anc.add_term(std::move(t));
    }
    const FockVector boost = boost_ancilla(d);
    for (int b = 0; b < nb; ++b) {
        for (int a = 1; a < d; ++a) {
            anc = anc.times(Ancilla::from_fock(boost.embedded(iota_modes(b * block + a * d, d), n)));
        }
    }
    p.ancilla = std::move(anc);
    const int photons = p.total_photons();

    if (nb == 1) {
        // Only bin totals that either rule can accept.
        PatternSpace space;
        for (int bin = 0; bin < d; ++bin) {
            std::vector<int> g;
            for (int m = bin; m < n; m += d) g.push_back(m);
            space.groups.push_back(std::move(g));
        }
        std::vector<int> cur;
        bin_count_vectors(d, photons, cur, space.counts);
        if (photons == d * d) space.counts.emplace_back(static_cast<std::size_t>(d), d);
        p.space = std::move(space);
    } else {
        p.space = PatternSpace::all(n, photons);
    }

    p.classify = [d, nb, block, n](const FockPattern& q) {
        std::vector<int> bins(static_cast<std::size_t>(d), 0);
        for (int m = 0; m < n; ++m) bins[static_cast<std::size_t>(m % d)] += q[m];
        if (std::ranges::all_of(bins, [d](int x) { return x % d == 1; })) {
            return Classification{Verdict::kEdc, Route::kStandard};
        }
        for (int m = nb * block; m < n; ++m) {
            if (q[m] != 0) return Classification{};
        }
        int target = -1;
        for (int b = 0; b < nb; ++b) {
            int total = 0;
            for (int m = b * block; m < (b + 1) * block; ++m) total += q[m];
            if (total == d * d) {
                if (target >= 0) return Classification{};
                target = b;
            } else if (total != d * (d - 1)) {
                return Classification{};
            }
        }
        if (target < 0) return Classification{};
        const int base = target * block;
        long weighted = 0;
        for (int bin = 0; bin < d; ++bin) {
            int nbin = 0;
            for (int j = 0; j < d; ++j) nbin += q[base + j * d + bin];
            if (nbin != d) return Classification{};
        }
        for (int j = 0; j < d; ++j) {
            int mj = 0;
            for (int bin = 0; bin < d; ++bin) mj += q[base + j * d + bin];
            weighted += static_cast<long>(j) * mj;
        }
        if (weighted % d != 0) return Classification{};
        return Classification{Verdict::kEdc, Route::kBoosted};
    };
    return p;
}

namespace {

ModeUnitary h2d(HVariant variant, int d) {
    if (variant == HVariant::kA) return fourier_matrix(2 * d);
    ModeUnitary ff = embed(fourier_matrix(d), iota_modes(0, d), 2 * d);
    ff = compose(ff, embed(fourier_matrix(d), iota_modes(d, d), 2 * d));
    ModeUnitary hh = ModeUnitary(ComplexMatrix::Identity(2 * d, 2 * d));
    for (int k = 0; k < d; ++k) hh = compose(hh, embed(fourier_matrix(2), std::vector<int>{k, k + d}, 2 * d));
    return variant == HVariant::kB ? compose(ff, hh) : compose(hh, ff);
}

Ancilla pair_superposition(int n_modes, int first, std::pair<int, int> a, std::pair<int, int> b) {
    FockVector v(n_modes);
    const double c = 1.0 / std::sqrt(2.0);
    for (auto [m0, m1] : {a, b}) {
        std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
        occ[static_cast<std::size_t>(first + m0)] = 2;
        occ[static_cast<std::size_t>(first + m1)] = 2;
        v.add(FockPattern(occ), c);
    }
    return Ancilla::from_fock(v);
}

}  // namespace

FusionProtocol protocol_appendix_d(int circuit_id, HVariant variant, double reflectivity) {
    constexpr int d = 3;
    constexpr int n = 4 * d;
    constexpr int a0 = 2 * d;
    if (reflectivity < 0.0 || reflectivity > 1.0) {
        throw std::invalid_argument("protocol_appendix_d: reflectivity must lie in [0, 1]");
    }
    const ModeUnitary ur = beamsplitter_r(reflectivity);
    FusionProtocol p;
    p.d = d;
    p.qudit0_modes = iota_modes(0, d);
    p.qudit1_modes = iota_modes(d, d);
    p.params = {{"d", d}, {"circuit", circuit_id}, {"reflectivity", reflectivity}};
    if (circuit_id == 1) {
        p.name = "appendix-d-1";
        p.params["variant"] = static_cast<double>(static_cast<int>(variant));
        ModeUnitary u = embed(h2d(variant, d), iota_modes(a0, 2 * d), n);
        for (int k = 0; k < 2 * d; ++k) u = compose(u, embed(ur, std::vector<int>{k, a0 + k}, n));
        p.circuit = u;
        p.ancilla = pair_superposition(n, a0, {0, 4}, {1, 3});
    } else if (circuit_id == 2) {
        // Inverse of: DFTs on each qudit, U_R between qudit bins and ancilla
        // modes, then beamsplitters on neighbouring ancilla modes.
        p.name = "appendix-d-2";
        ModeUnitary gen = embed(fourier_matrix(d), iota_modes(0, d), n);
        gen = compose(gen, embed(fourier_matrix(d), iota_modes(d, d), n));
        for (int k = 0; k < d; ++k) {
            gen = compose(gen, embed(ur, std::vector<int>{k, a0 + 2 * k}, n));
            gen = compose(gen, embed(ur, std::vector<int>{d + k, a0 + 2 * k + 1}, n));
        }
        for (int k = 0; k < d; ++k) gen = compose(gen, embed(fourier_matrix(2), std::vector<int>{a0 + 2 * k, a0 + 2 * k + 1}, n));
        p.circuit = ModeUnitary(gen.matrix().adjoint());
        p.ancilla = pair_superposition(n, a0, {3, 5}, {2, 4});
    } else {
        throw std::invalid_argument("protocol_appendix_d: circuit must be 1 or 2");
    }
    p.space = PatternSpace::all(n, 2 + p.ancilla.photons());
    p.classify = [](const FockPattern&) { return Classification{Verdict::kEdc, Route::kStandard}; };
    return p;
}

}  // namespace hdfusion
