// Copyright 2026 The qibsim Authors
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


#include "qibsim/protocols/cphase.h"

#include <cmath>
#include <stdexcept>

using namespace qibsim;

namespace {

/// Reduced to the spatial modes it needs, the gate leaves every other photon alone.
SparseState cphase_unprojected(const SparseState &state, SpatialMode control, SpatialMode target) {
    const JonesMatrix swap_hv = WavePlate::half(degrees(45)).jones();
    SparseState s = apply_jones(state, swap_hv, target);
    s = apply_pbs(s, control, target);
    s = apply_jones(s, JonesMatrix::rotation(std::acos(1 / std::sqrt(3.0))), target);
    s = apply_loss(s, control, 1.0 / 3.0);
    s = apply_pbs(s, control, target);
    return apply_jones(s, swap_hv, target);
}

ModeLabel qubit_mode(SpatialMode m, Pol pol) {
    return {m.time_bin, m.port, pol};
}

}  // namespace

PostSelection qibsim::cphase(const SparseState &state, SpatialMode control, SpatialMode target) {
    if (control == target) {
        throw std::invalid_argument("control and target must be different modes");
    }
    // Environment indices already present stay disjoint from the ones the gate allocates.
    std::int32_t env_before = state.next_env_index();
    SparseState s = cphase_unprojected(state, control, target);
    return post_select(s, [&](const Occupation &occ) {
        if (occ.count_in(control) != 1 || occ.count_in(target) != 1) {
            return false;
        }
        for (const auto &[mode, c] : occ) {
            if (mode.port == Port::Env && mode.time_bin >= env_before) {
                return false;
            }
        }
        return true;
    });
}

TwoQubitMatrix qibsim::cphase_transfer_matrix() {
    const SpatialMode control{0, Port::From};
    const SpatialMode target{0, Port::In};
    const Pol pols[2] = {Pol::H, Pol::V};
    TwoQubitMatrix m{};
    for (int in = 0; in < 4; in++) {
        Occupation input{qubit_mode(control, pols[in >> 1]), qubit_mode(target, pols[in & 1])};
        SparseState s = cphase_unprojected(SparseState::basis(input), control, target);
        for (int out = 0; out < 4; out++) {
            m[out][in] =
                s.amplitude(Occupation{qubit_mode(control, pols[out >> 1]), qubit_mode(target, pols[out & 1])});
        }
    }
    return m;
}

PostSelection qibsim::qib_cphase(const SparseState &state, std::int32_t time_bin) {
    return cphase(state, {time_bin, Port::From}, {time_bin, Port::In});
}
