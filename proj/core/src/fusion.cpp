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
#include "hdfusion/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

#include "hdfusion/edc.hpp"
#include "hdfusion/parallel.hpp"
#include "hdfusion/permanent.hpp"

namespace hdfusion {

int AncillaTerm::photons() const {
    int n = 0;
    for (const auto& op : ops) n += op.multiplicity;
    return n;
}

Ancilla Ancilla::from_fock(const FockVector& state) {
    Ancilla a(state.n_modes());
    for (const auto& [p, amp] : state.terms()) {
        AncillaTerm t;
        t.coefficient = amp / std::sqrt(p.factorial_product());
        for (int m = 0; m < p.n_modes(); ++m) {
            if (p[m] == 0) continue;
            ComplexVector v = ComplexVector::Zero(state.n_modes());
            v(m) = 1.0;
            t.ops.push_back({std::move(v), p[m]});
        }
        a.add_term(std::move(t));
    }
    return a;
}

void Ancilla::add_term(AncillaTerm term) {
    for (const auto& op : term.ops) {
        if (op.mode_vector.size() != n_modes_) {
            throw std::invalid_argument("Ancilla: creation vector has wrong length");
        }
        if (op.multiplicity < 0) throw std::invalid_argument("Ancilla: negative multiplicity");
    }
    if (!terms_.empty() && term.photons() != terms_.front().photons()) {
        throw std::invalid_argument("Ancilla: terms with different photon numbers");
    }
    terms_.push_back(std::move(term));
}

int Ancilla::photons() const { return terms_.empty() ? 0 : terms_.front().photons(); }

Ancilla Ancilla::times(const Ancilla& other) const {
    if (other.n_modes_ != n_modes_) throw std::invalid_argument("Ancilla::times: mode count mismatch");
    if (terms_.empty()) return other;
    if (other.terms_.empty()) return *this;
    Ancilla out(n_modes_);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            AncillaTerm t{a.coefficient * b.coefficient, a.ops};
            t.ops.insert(t.ops.end(), b.ops.begin(), b.ops.end());
            out.add_term(std::move(t));
        }
    }
    return out;
}

namespace {

// <p| prod_c a^dagger(col_c)^{mult_c} |0>, where `cols` holds the creation
// vectors already restricted to the occupied rows of p.
Complex product_amplitude(const ComplexMatrix& cols, std::span<const int> row_mult,
                          std::span<const int> col_mult, double row_norm) {
    return permanent_repeated(cols, row_mult, col_mult) / row_norm;
}

struct OccupiedRows {
    std::vector<int> modes;
    std::vector<int> mult;
    double norm = 1.0;  // sqrt(prod n_m!)
};

OccupiedRows occupied_rows(const FockPattern& p) {
    OccupiedRows r;
    for (int m = 0; m < p.n_modes(); ++m) {
        if (p[m] > 0) {
            r.modes.push_back(m);
            r.mult.push_back(p[m]);
        }
    }
    r.norm = std::sqrt(p.factorial_product());
    return r;
}

}  // namespace

FockVector Ancilla::to_fock_vector() const {
    FockVector out(n_modes_);
    if (terms_.empty()) return FockVector::vacuum(n_modes_);
    const int n = photons();
    for (const FockPattern& p : Compositions(n_modes_, n)) {
        const OccupiedRows rows = occupied_rows(p);
        Complex acc{};
        for (const auto& t : terms_) {
            ComplexMatrix cols(static_cast<Eigen::Index>(rows.modes.size()), static_cast<Eigen::Index>(t.ops.size()));
            std::vector<int> cm;
            for (std::size_t c = 0; c < t.ops.size(); ++c) {
                for (std::size_t r = 0; r < rows.modes.size(); ++r) {
                    cols(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = t.ops[c].mode_vector(rows.modes[r]);
                }
                cm.push_back(t.ops[c].multiplicity);
            }
            acc += t.coefficient * product_amplitude(cols, rows.mult, cm, rows.norm);
        }
        if (std::abs(acc) >= tol::kPrune) out.add(p, acc);
    }
    return out;
}

std::vector<FockPattern> PatternSpace::enumerate(int n_modes) const {
    return enumerate_grouped(n_modes, groups, counts);
}

std::uint64_t PatternSpace::size() const {
    std::uint64_t total = 0;
    for (const auto& c : counts) {
        std::uint64_t n = 1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            n *= composition_count(static_cast<int>(groups[g].size()), c[g]);
        }
        total += n;
    }
    return total;
}

PatternSpace PatternSpace::all(int n_modes, int photons) {
    std::vector<int> every(static_cast<std::size_t>(n_modes));
    std::iota(every.begin(), every.end(), 0);
    return PatternSpace{{every}, {{photons}}};
}

void FusionProtocol::validate() const {
    const int n = n_modes();
    if (d < 2) throw std::invalid_argument(name + ": d must be >= 2");
    if (static_cast<int>(qudit0_modes.size()) < d || static_cast<int>(qudit1_modes.size()) < d) {
        throw std::invalid_argument(name + ": input qudits need at least d modes");
    }
    for (const auto* modes : {&qudit0_modes, &qudit1_modes}) {
        for (int m : *modes) {
            if (m < 0 || m >= n) throw std::invalid_argument(name + ": input mode out of range");
        }
    }
    if (ancilla.n_modes() != n && !(ancilla.terms().empty() && ancilla.n_modes() == 0)) {
        throw std::invalid_argument(name + ": ancilla mode count does not match circuit");
    }
    if (!classify) throw std::invalid_argument(name + ": missing pattern classifier");
}

namespace {

// Transformed creation vectors shared by every pattern of one protocol.
struct Prepared {
    int d;
    ComplexMatrix in0;  // n x d, column i = U e_{qudit0_modes[i]}
    ComplexMatrix in1;
    std::vector<Complex> coef;
    std::vector<ComplexMatrix> anc;  // per term, n x ops
    std::vector<std::vector<int>> anc_mult;
    int photons;
};

Prepared prepare(const FusionProtocol& protocol) {
    Prepared pr;
    pr.d = protocol.d;
    const auto& u = protocol.circuit.matrix();
    const auto n = u.rows();
    pr.in0.resize(n, pr.d);
    pr.in1.resize(n, pr.d);
    for (int i = 0; i < pr.d; ++i) {
        pr.in0.col(i) = u.col(protocol.qudit0_modes[static_cast<std::size_t>(i)]);
        pr.in1.col(i) = u.col(protocol.qudit1_modes[static_cast<std::size_t>(i)]);
    }
    if (protocol.ancilla.terms().empty()) {
        pr.coef.push_back(1.0);
        pr.anc.emplace_back(n, 0);
        pr.anc_mult.emplace_back();
    }
    for (const auto& t : protocol.ancilla.terms()) {
        pr.coef.push_back(t.coefficient);
        ComplexMatrix m(n, static_cast<Eigen::Index>(t.ops.size()));
        std::vector<int> mult;
        for (std::size_t c = 0; c < t.ops.size(); ++c) {
            m.col(static_cast<Eigen::Index>(c)) = u * t.ops[c].mode_vector;
            mult.push_back(t.ops[c].multiplicity);
        }
        pr.anc.push_back(std::move(m));
        pr.anc_mult.push_back(std::move(mult));
    }
    pr.photons = protocol.total_photons();
    return pr;
}

ComplexMatrix amplitudes_prepared(const Prepared& pr, const FockPattern& p) {
    if (p.total_photons() != pr.photons) {
        throw std::invalid_argument("pattern " + p.to_string() + " has " + std::to_string(p.total_photons()) +
                                    " photons, protocol needs " + std::to_string(pr.photons));
    }
    if (p.n_modes() != pr.in0.rows()) {
        throw std::invalid_argument("pattern " + p.to_string() + " has the wrong number of modes");
    }
    const OccupiedRows rows = occupied_rows(p);
    const auto r = static_cast<Eigen::Index>(rows.modes.size());
    ComplexMatrix t = ComplexMatrix::Zero(pr.d, pr.d);
    for (std::size_t term = 0; term < pr.anc.size(); ++term) {
        const auto k = pr.anc[term].cols();
        ComplexMatrix cols(r, k + 2);
        std::vector<int> mult{1, 1};
        mult.insert(mult.end(), pr.anc_mult[term].begin(), pr.anc_mult[term].end());
        for (Eigen::Index a = 0; a < r; ++a) {
            for (Eigen::Index c = 0; c < k; ++c) cols(a, c + 2) = pr.anc[term](rows.modes[static_cast<std::size_t>(a)], c);
        }
        for (int i = 0; i < pr.d; ++i) {
            for (Eigen::Index a = 0; a < r; ++a) cols(a, 0) = pr.in0(rows.modes[static_cast<std::size_t>(a)], i);
            for (int j = 0; j < pr.d; ++j) {
                for (Eigen::Index a = 0; a < r; ++a) cols(a, 1) = pr.in1(rows.modes[static_cast<std::size_t>(a)], j);
                t(i, j) += pr.coef[term] * product_amplitude(cols, rows.mult, mult, rows.norm);
            }
        }
    }
    return t;
}

PatternOutcome outcome_prepared(const FusionProtocol& protocol, const Prepared& pr, const FockPattern& p) {
    PatternOutcome out;
    out.pattern = p;
    const Classification c = protocol.classify(p);
    out.verdict = c.verdict;
    out.route = c.route;
    if (c.verdict == Verdict::kFail) return out;
    out.amplitudes = amplitudes_prepared(pr, p);
    out.weight = out.amplitudes.squaredNorm();
    if (out.weight < tol::kZeroWeight) return out;
    const int d = pr.d;
    Eigen::JacobiSVD<ComplexMatrix> svd(out.amplitudes / std::sqrt(out.weight));
    RealVector gram_ev = svd.singularValues().reverse().array().square() * static_cast<double>(d);
    const double lam = gram_ev(0);
    if (!(lam > tol::kIndependence)) return out;
    out.s_extra = count_extra_dimensions(gram_ev);
    if (c.verdict == Verdict::kUnitary && out.s_extra != 0) return out;
    out.lambda = std::min(lam, 1.0);
    return out;
}

}  // namespace

bool PatternOutcome::contributes() const {
    return verdict != Verdict::kFail && weight >= tol::kZeroWeight && lambda > tol::kIndependence;
}

QuditState PatternOutcome::projected_state() const {
    if (weight <= 0.0) throw std::logic_error("projected_state: pattern has zero weight");
    return QuditState::from_amplitude_matrix(amplitudes.conjugate() / std::sqrt(weight));
}

ComplexMatrix amplitude_matrix(const FusionProtocol& protocol, const FockPattern& p) {
    protocol.validate();
    return amplitudes_prepared(prepare(protocol), p);
}

PatternOutcome pattern_outcome(const FusionProtocol& protocol, const FockPattern& p) {
    protocol.validate();
    const Prepared pr = prepare(protocol);
    if (p.total_photons() != pr.photons || p.n_modes() != protocol.n_modes()) {
        throw std::invalid_argument("pattern_outcome: pattern " + p.to_string() + " does not fit the protocol");
    }
    return outcome_prepared(protocol, pr, p);
}

FusionReport success_probability(const FusionProtocol& protocol, const FusionOptions& options) {
    protocol.validate();
    const Prepared pr = prepare(protocol);
    const std::vector<FockPattern> patterns = protocol.space.enumerate(protocol.n_modes());

    std::vector<PatternOutcome> outcomes(patterns.size());
    parallel_for(patterns.size(), resolve_workers(options.workers), [&](std::size_t i) {
        outcomes[i] = outcome_prepared(protocol, pr, patterns[i]);
        if (!options.keep_outcomes) outcomes[i].amplitudes.resize(0, 0);
    });

    FusionReport rep;
    rep.protocol = protocol.name;
    rep.d = protocol.d;
    rep.params = protocol.params;
    rep.enumerated_count = patterns.size();

    std::vector<double> all, standard, boosted, s_plain, s_weighted;
    for (const auto& o : outcomes) {
        if (!o.contributes()) continue;
        const double c = o.contribution();
        all.push_back(c);
        (o.route == Route::kBoosted ? boosted : standard).push_back(c);
        s_plain.push_back(o.s_extra);
        s_weighted.push_back(c * o.s_extra);
    }
    const double d2 = static_cast<double>(protocol.d) * protocol.d;
    rep.weighted_sum = pairwise_sum(all);
    rep.success_probability = rep.weighted_sum / d2;
    rep.standard_probability = pairwise_sum(standard) / d2;
    rep.boosted_probability = pairwise_sum(boosted) / d2;
    rep.pattern_count = all.size();
    if (!all.empty()) {
        rep.avg_extra_dims = pairwise_sum(s_plain) / static_cast<double>(all.size());
        rep.avg_extra_dims_weighted = pairwise_sum(s_weighted) / rep.weighted_sum;
    }
    if (options.keep_outcomes) {
        for (auto& o : outcomes) {
            if (o.contributes()) rep.outcomes.push_back(std::move(o));
        }
    }
    return rep;
}

QuditState fourier_projection_state(int d, const std::vector<int>& q) {
    if (d < 1 || static_cast<int>(q.size()) != d) {
        throw std::invalid_argument("fourier_projection_state: need d port indices");
    }
    for (int v : q) {
        if (v < 0 || v >= d) throw std::invalid_argument("fourier_projection_state: port out of range");
    }
    QuditState out(d, d);
    const double mag = std::pow(static_cast<double>(d), -0.5 * d);
    std::vector<int> k(static_cast<std::size_t>(d));
    std::iota(k.begin(), k.end(), 0);
    do {
        // Qudit i sends its photon through bin k_i, detected in port q[k_i].
        long phase = 0;
        for (int i = 0; i < d; ++i) phase += static_cast<long>(i) * q[static_cast<std::size_t>(k[static_cast<std::size_t>(i)])];
        const int e = static_cast<int>((d - phase % d) % d);
        out.add(k, std::polar(mag, 2.0 * std::numbers::pi * e / d));
    } while (std::next_permutation(k.begin(), k.end()));
    return out;
}

double bell_overlap(const QuditState& chi) {
    if (chi.n_qudits() != 2) throw std::invalid_argument("bell_overlap: expected a two-qudit state");
    const QuditState b = bell_state(chi.dim());
    Complex acc{};
    for (const auto& [ket, a] : b.terms()) acc += std::conj(a) * chi.amplitude(ket);
    return std::norm(acc);
}

double bell_overlap(const QuditState& chi0, const QuditState& chi1) {
    if (chi0.n_qudits() != 1 || chi1.n_qudits() != 1) {
        throw std::invalid_argument("bell_overlap: expected single-qudit states");
    }
    if (chi0.dim() != chi1.dim()) throw std::invalid_argument("bell_overlap: dimension mismatch");
    QuditState joint(chi0.dim(), 2);
    for (const auto& [a, x] : chi0.terms()) {
        for (const auto& [b, y] : chi1.terms()) joint.add({a[0], b[0]}, x * y);
    }
    return bell_overlap(joint);
}

}  // namespace hdfusion
