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


#include "qibsim/protocols/ghz.h"

#include <set>
#include <stdexcept>

#include "qibsim/protocols/schedule.h"

using namespace qibsim;

ProtocolResult qibsim::build_ghz(int n_pairs, const SourceModel &source, const QibConfig &config) {
    return build_ghz(n_pairs, source, config, std::vector<int>(n_pairs > 1 ? n_pairs - 1 : 0, 1));
}

ProtocolResult qibsim::build_ghz(int n_pairs, const SourceModel &source, const QibConfig &config, const std::vector<int> &gaps) {
    if (n_pairs < 2) {
        throw std::invalid_argument("GHZ generation needs at least two pairs");
    }
    source.validate();
    config.validate();
    std::vector<std::int32_t> heralds = herald_bins(n_pairs, gaps);
    const std::int32_t release = heralds.back() + 1;
    std::set<std::int32_t> herald_set(heralds.begin(), heralds.end());

    ProtocolResult result;
    SparseState state = SparseState::vacuum();
    for (std::int32_t t = 0; t <= release; t++) {
        QibFunction f = QibFunction::Buffer;
        if (t == 0 || t == release) {
            f = QibFunction::StoreRelease;
        } else if (herald_set.count(t)) {
            f = QibFunction::Interfere;
        }
        if (herald_set.count(t)) {
            state = emit_heralded(state, source, t, PairKind::Bell);
        }
        state = qib_step(state, f, config, t);
        state = settle_environment(state, source);
        result.schedule.emplace_back(t, f);
    }

    std::vector<SpatialMode> outputs;
    for (std::size_t i = 1; i < heralds.size(); i++) {
        outputs.push_back({heralds[i], Port::Out});
    }
    outputs.push_back({release, Port::Out});
    PostSelection kept = post_select(state, one_photon_per_output(outputs, release));

    for (auto t : heralds) {
        result.qubit_modes.push_back({t, Port::Herald});
    }
    result.qubit_modes.insert(result.qubit_modes.end(), outputs.begin(), outputs.end());
    result.final_state = std::move(kept.state);
    result.success_probability = kept.probability;
    result.photon_count = 2 * n_pairs;
    return result;
}
