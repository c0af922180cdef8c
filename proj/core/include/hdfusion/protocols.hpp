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

#include "hdfusion/fusion.hpp"

namespace hdfusion {

/// Fourier layer on a ports x bins grid: F_ports across the ports of every
/// time bin (mode = bins * port + bin), identity elsewhere in `total_modes`.
ModeUnitary fourier_layer(int ports, int bins, int total_modes, int first_mode = 0);

/// Even-d fusion with the (d-2)-qudit entangled ancilla; d = 2 is plain
/// Type-II fusion with no ancilla.
FusionProtocol protocol_even(int d);

/// Inputs of dimension d padded with vacuum bins to even dimension D, then
/// the even protocol at dimension D.
FusionProtocol protocol_odd(int d, int embed_dim);

/// Fourier projection with d-2 W-state ancillae. `restricted` accepts only
/// patterns with every photon in one port; `edc` enables corrections.
FusionProtocol protocol_wstate(int d, bool edc, bool restricted);

/// Bunched ancilla |r> in mode 0, second qudit reversed, then F_{2d+1}.
FusionProtocol protocol_ztl(int d, int r, bool edc = true);

/// Qubit fusion whose output pair(s) pass through F_{2+r} with r single
/// photons.
FusionProtocol protocol_boost_qubit(int r, bool both_sides, bool edc);

/// The d = 3 W-state circuit with port 0 fed into F_{3+r} with r single
/// photons.
FusionProtocol protocol_boost_qutrit(int r);

/// W-state fusion where each port in `boosted_ports` is interfered with
/// d-1 boost ancillae in a second Fourier stage. Output modes are one
/// d^2-mode block per boosted port (block port 0 = fusion port, block
/// ports 1.. = ancillae) followed by the unboosted fusion ports.
FusionProtocol protocol_ghz_boost(int d, const std::vector<int>& boosted_ports = {0});

/// Variants of the 2d-mode Fourier stage in the first reversed
/// state-generation circuit.
enum class HVariant { kA, kB, kC };

/// Reversed state-generation circuits at d = 3: circuit 1 uses the 2d-mode
/// Fourier variant `variant`, circuit 2 ignores it. `reflectivity` sets U_R.
FusionProtocol protocol_appendix_d(int circuit_id, HVariant variant, double reflectivity);

}  // namespace hdfusion
