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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hdfusion/fock.hpp"
#include "hdfusion/optics.hpp"
#include "hdfusion/states.hpp"
#include "hdfusion/types.hpp"

namespace hdfusion {

/// a^dagger(v)^multiplicity, where a^dagger(v) = sum_m v_m a_m^dagger.
struct Creation {
    ComplexVector mode_vector;
    int multiplicity = 1;
};

/// coefficient * prod_ops a^dagger(v)^k |vacuum>.
struct AncillaTerm {
    Complex coefficient{1.0, 0.0};
    std::vector<Creation> ops;

    int photons() const;
};

/// Ancilla state held as a sum of creation-operator products over the
/// full mode space of a protocol. Product states such as several W states
/// stay a single term instead of expanding into the Fock basis.
class Ancilla {
   public:
    explicit Ancilla(int n_modes = 0) : n_modes_(n_modes) {}

    /// Every Fock term becomes one product of unit-vector creations.
    static Ancilla from_fock(const FockVector& state);

    int n_modes() const { return n_modes_; }
    const std::vector<AncillaTerm>& terms() const { return terms_; }
    void add_term(AncillaTerm term);

    /// Fixed photon number shared by every term (0 for an empty ancilla).
    int photons() const;

    /// Tensor product with another ancilla on the same mode space.
    Ancilla times(const Ancilla& other) const;

    /// Expansion in the Fock basis.
    FockVector to_fock_vector() const;

   private:
    int n_modes_;
    std::vector<AncillaTerm> terms_;
};

enum class Verdict {
    kFail,
    /// Accepted only if the projected state is already maximally entangled.
    kUnitary,
    /// Accepted with an extra-dimensional correction.
    kEdc,
};

enum class Route { kStandard, kBoosted };

struct Classification {
    Verdict verdict = Verdict::kFail;
    Route route = Route::kStandard;
};

using PatternClassifier = std::function<Classification(const FockPattern&)>;

/// Candidate patterns: the union over `counts` of every pattern whose
/// photon totals on `groups` match. Groups partition the modes.
struct PatternSpace {
    std::vector<std::vector<int>> groups;
    std::vector<std::vector<int>> counts;

    std::vector<FockPattern> enumerate(int n_modes) const;
    /// Number of patterns `enumerate` yields, without enumerating.
    std::uint64_t size() const;
    static PatternSpace all(int n_modes, int photons);
};

struct FusionProtocol {
    std::string name;
    int d = 2;
    /// Dimension of the embedding space when inputs are padded with vacuum
    /// bins; 0 when unused.
    int embed_dim = 0;
    ModeUnitary circuit = ModeUnitary::identity(0);
    /// Mode of computational value k for each input qudit (k < d used).
    std::vector<int> qudit0_modes;
    std::vector<int> qudit1_modes;
    Ancilla ancilla;
    PatternSpace space;
    PatternClassifier classify;
    std::map<std::string, double> params;

    int n_modes() const { return circuit.n_modes(); }
    int total_photons() const { return 2 + ancilla.photons(); }
    /// Throws std::invalid_argument on inconsistent fields.
    void validate() const;
};

struct PatternOutcome {
    FockPattern pattern;
    Verdict verdict = Verdict::kFail;
    Route route = Route::kStandard;
    double weight = 0.0;
    /// Correction factor actually credited (0 for rejected patterns).
    double lambda = 0.0;
    int s_extra = 0;
    /// T(i, j) = <p| U |i, j, anc>.
    ComplexMatrix amplitudes;

    double contribution() const { return weight * lambda; }
    bool contributes() const;
    /// Normalized two-qudit state the pattern projects onto, conj(T)/sqrt(w).
    QuditState projected_state() const;
};

/// d x d transition amplitudes <p| U |i, j, anc> for one pattern.
ComplexMatrix amplitude_matrix(const FusionProtocol& protocol, const FockPattern& p);

/// Weight, correction factor and extra-dimension count for one pattern.
PatternOutcome pattern_outcome(const FusionProtocol& protocol, const FockPattern& p);

struct FusionOptions {
    int workers = 0;
    bool keep_outcomes = false;
};

struct FusionReport {
    std::string protocol;
    int d = 0;
    std::map<std::string, double> params;
    /// (1/d^2) sum_p w_p lambda_p.
    double success_probability = 0.0;
    double standard_probability = 0.0;
    double boosted_probability = 0.0;
    /// sum_p w_p lambda_p, before the 1/d^2 input average.
    double weighted_sum = 0.0;
    /// Mean s over contributing patterns, unweighted and w*lambda-weighted.
    double avg_extra_dims = 0.0;
    double avg_extra_dims_weighted = 0.0;
    std::size_t pattern_count = 0;
    std::size_t enumerated_count = 0;
    /// Contributing outcomes in canonical pattern order (if requested).
    std::vector<PatternOutcome> outcomes;

    /// Success for a specific input whose Bell overlap is `overlap`.
    double success_given_overlap(double overlap) const { return overlap * weighted_sum; }
};

FusionReport success_probability(const FusionProtocol& protocol, const FusionOptions& options = {});

/// Unnormalized d-qudit state projected onto by Fourier projection with
/// port pattern q (q[b] = port that received the photon of time bin b).
QuditState fourier_projection_state(int d, const std::vector<int>& q);

/// |<B_0| chi0 chi1>|^2 for single-qudit states.
double bell_overlap(const QuditState& chi0, const QuditState& chi1);
/// |<B_0|chi>|^2 for a two-qudit state.
double bell_overlap(const QuditState& chi);

}  // namespace hdfusion
