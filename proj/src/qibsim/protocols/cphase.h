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


#ifndef _QIBSIM_PROTOCOLS_CPHASE_H
#define _QIBSIM_PROTOCOLS_CPHASE_H

#include <array>

#include "qibsim/statevec/elements.h"

namespace qibsim {

/// 4x4 map in the basis HH, HV, VH, VV of (control, target). `m[out][in]`.
using TwoQubitMatrix = std::array<std::array<Amplitude, 4>, 4>;

/// Post-selected linear-optics controlled phase between polarization qubits in `control` and
/// `target`, built from two PBSs, a rotation by acos(1/sqrt3) on the target path, and a
/// transmission of 1/3 on the control path.
///
/// Conditioned on one photon in each mode and none lost, the input is mapped by
/// diag(1, 1, 1, -1) / 3, so every product input succeeds with probability 1/9.
PostSelection cphase(const SparseState &state, SpatialMode control, SpatialMode target);

/// Unnormalized amplitudes of the post-selected map, read off basis inputs.
TwoQubitMatrix cphase_transfer_matrix();

/// CPHASE inside the buffer at bin `time_bin`: the stored photon in From(t) is the control and
/// the fresh photon in In(t) is the target.
PostSelection qib_cphase(const SparseState &state, std::int32_t time_bin);

}  // namespace qibsim

#endif
