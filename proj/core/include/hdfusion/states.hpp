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

#include <map>
#include <string>
#include <vector>

#include "hdfusion/fock.hpp"
#include "hdfusion/types.hpp"

namespace hdfusion {

/// Amplitudes over the computational basis of n qudits of dimension d.
class QuditState {
   public:
    using Ket = std::vector<int>;
    using Terms = std::map<Ket, Complex>;

    QuditState(int d, int n_qudits);

    int dim() const { return d_; }
    int n_qudits() const { return n_qudits_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Adds `amp` to the amplitude of `ket`; throws on bad length or value.
    void add(const Ket& ket, Complex amp);
    Complex amplitude(const Ket& ket) const;

    double norm_squared() const;
    bool is_normalized(double tolerance = 1e-10) const;
    QuditState& scale(Complex factor);

    /// One photon per qudit: value k of qudit q occupies mode d*q + k.
    FockVector to_fock() const;

    /// Inverse of to_fock; throws std::invalid_argument if any term is
    /// outside the one-photon-per-qudit subspace.
    static QuditState from_fock(const FockVector& v, int d);

    /// d x d amplitude matrix of a two-qudit state, rows = first qudit.
    ComplexMatrix amplitude_matrix() const;
    static QuditState from_amplitude_matrix(const ComplexMatrix& m);

   private:
    int d_;
    int n_qudits_;
    Terms terms_;
};

/// X^x Z^z with X|k> = |k+1 mod d> and Z|k> = omega^k |k>.
struct QuditPauli {
    int x = 0;
    int z = 0;
    int d = 2;
};

ComplexMatrix pauli_matrix(const QuditPauli& p);

/// (1/sqrt d) sum_k |kk>.
QuditState bell_state(int d);

/// (1/sqrt d) sum_k |k>.
QuditState w_state(int d);

/// The (d-2)-qudit ancilla (2/d)^{1/2} sum_r |2r, 1+2r, ..., d-3+2r> (mod d)
/// used by the even-dimensional fusion protocol.
QuditState ancilla_A(int d);

/// |0...r...0> with r photons in `mode`.
FockVector bunched_state(int r, int mode, int n_modes);

/// (1/sqrt d)(|d,0,...,0> + ... + |0,...,0,d>) on d modes.
FockVector boost_ancilla(int d);

/// Looks up a state by name: "A<d>", "W<d>", "B<d>" (Bell), "boost<d>" or
/// "bunched:<r>@<mode>/<n_modes>". Throws std::invalid_argument otherwise.
FockVector named_state(const std::string& name);

}  // namespace hdfusion
