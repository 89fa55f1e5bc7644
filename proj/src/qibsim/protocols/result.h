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


#ifndef _QIBSIM_PROTOCOLS_RESULT_H
#define _QIBSIM_PROTOCOLS_RESULT_H

#include <utility>
#include <vector>

#include "json.hpp"
#include "qibsim/qib/qib.h"

namespace qibsim {

struct ProtocolResult {
    /// Normalized conditional state after post-selection.
    SparseState final_state;
    double success_probability = 0;
    /// One entry per simulated time bin.
    std::vector<std::pair<std::int32_t, QibFunction>> schedule;
    int photon_count = 0;
    /// Modes carrying one qubit each, in qubit order.
    std::vector<SpatialMode> qubit_modes;
};

/// Best overlap with (|H...H> + e^{i phase}|V...V>)/sqrt2 on `modes`, tracing the environment.
struct GhzOverlap {
    double fidelity = 0;
    double phase = 0;
};
GhzOverlap ghz_overlap(const SparseState &state, const std::vector<SpatialMode> &modes);

/// (|H...H> + e^{i phase}|V...V>)/sqrt2 over `modes`.
SparseState ghz_target(const std::vector<SpatialMode> &modes, double phase = 0);

/// [{occupation: [{time_bin, port, pol, internal, count}], re, im}, ...]
nlohmann::json state_to_json(const SparseState &state);
/// Throws std::invalid_argument on malformed input.
SparseState state_from_json(const nlohmann::json &j);
nlohmann::json result_to_json(const ProtocolResult &result);

}  // namespace qibsim

#endif
