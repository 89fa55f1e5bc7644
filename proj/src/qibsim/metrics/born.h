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


#ifndef _QIBSIM_METRICS_BORN_H
#define _QIBSIM_METRICS_BORN_H

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qibsim/metrics/count_table.h"
#include "qibsim/statevec/elements.h"

namespace qibsim {

/// Exact probabilities of H/V patterns on `modes`, restricted to terms with exactly one photon
/// per listed mode. Character i of an outcome belongs to modes[i].
CountTable born_hv_table(const SparseState &state, const std::vector<SpatialMode> &modes);

/// Exact probabilities of +/- outcomes when every listed mode is analyzed in the basis
/// (|H> +- e^{i theta}|V>)/sqrt2.
CountTable born_phase_table(const SparseState &state, const std::vector<SpatialMode> &modes, double theta);

/// Tables for every setting k = 0..modes.size()-1 of the coherence scheme.
std::vector<CountTable> born_coherence_tables(const SparseState &state, const std::vector<SpatialMode> &modes);

/// Multinomial sample of `shots` events from a probability table.
CountTable sample_counts(const CountTable &probabilities, std::uint64_t shots, std::uint64_t seed);

/// <psi| P |psi> for a Pauli string over `modes` ('I', 'X', 'Y', 'Z' per mode, H = |0>).
double pauli_expectation(const SparseState &state, const std::vector<SpatialMode> &modes, const std::string &paulis);

/// Six cardinal polarization states in the order H, V, D, A, R, L.
std::array<std::array<Amplitude, 2>, 6> cardinal_states();

struct AverageFidelity {
    double mean = 0;
    /// Population standard deviation across the six inputs.
    double stddev = 0;
    std::array<double, 6> per_state{};
    /// Probability the photon reaches `out_mode`, per input.
    std::array<double, 6> survival{};
};

using Channel = std::function<SparseState(const SparseState &)>;

/// Sends each cardinal state as one photon in `in_mode` through `channel` and compares the
/// polarization found in `out_mode`, conditioned on the photon arriving there, with the input.
/// Throws std::domain_error if some input never arrives.
AverageFidelity average_qubit_fidelity(const Channel &channel, SpatialMode in_mode, SpatialMode out_mode);

}  // namespace qibsim

#endif
