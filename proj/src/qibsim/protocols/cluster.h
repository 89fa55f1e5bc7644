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


#ifndef _QIBSIM_PROTOCOLS_CLUSTER_H
#define _QIBSIM_PROTOCOLS_CLUSTER_H

#include <cstdint>
#include <string>
#include <vector>

#include "qibsim/protocols/result.h"
#include "qibsim/protocols/source.h"

namespace qibsim {

/// Half-wave plate at 22.5 degrees, the rotation used on signals and on the from port.
JonesMatrix cluster_rotation();

/// Linear cluster state on N photons with a switched plate at the from port.
///
/// Each herald at t_i emits |H> into In(t_i), which is rotated to |P>. Every herald bin
/// interferes; the from-port plate is on for heralds after the first and for the release at
/// t_{N-1} + 1, and off while buffering. Qubits sit in Out(t_1..t_{N-1}) and the release bin,
/// in time order. Heralds are dropped from the final state.
///
/// The result is the standard linear cluster with H = |0>: a +1 eigenstate of Z X Z
/// stabilizers without any further local frame change.
ProtocolResult build_cluster_dynamic(
    int n_photons, const SourceModel &source, const QibConfig &config, const std::vector<int> &gaps);
ProtocolResult build_cluster_dynamic(int n_photons, const SourceModel &source, const QibConfig &config);

/// Which heralded bins the parity rule accepts into the cluster.
struct StaticAcceptance {
    std::vector<std::int32_t> accepted;
    /// Heralded bins skipped because an odd number of bins had passed.
    std::vector<std::int32_t> ignored;
};

/// After the first photon, a heralded bin is accepted when an even number of bins has passed
/// since the last accepted one; otherwise the buffer keeps buffering and the heralded photon
/// leaves through Out. Stops once `n_photons` are accepted. Throws std::invalid_argument when
/// the pattern accepts fewer.
StaticAcceptance static_acceptance(const std::vector<bool> &herald_pattern, int n_photons);

/// Cluster generation with a static plate at the from port acting on every bin.
///
/// Bins run from the first heralded bin of the pattern. Ignored photons must leave through their
/// Out bin and are then dropped together with their heralds.
ProtocolResult build_cluster_static(
    int n_photons, const SourceModel &source, const QibConfig &config, const std::vector<bool> &herald_pattern);

/// Pauli strings K_i = Z_{i-1} X_i Z_{i+1} of an n-qubit chain.
std::vector<std::string> linear_cluster_stabilizers(int n);

}  // namespace qibsim

#endif
