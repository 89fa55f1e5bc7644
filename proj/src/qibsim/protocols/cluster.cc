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


#include "qibsim/protocols/cluster.h"

#include <set>
#include <stdexcept>

#include "qibsim/protocols/schedule.h"

using namespace qibsim;

namespace {

SparseState drop_modes(const SparseState &state, const std::set<SpatialMode> &modes) {
    auto reduced = try_remove_modes(state, [&](const ModeLabel &m) { return modes.count(m.spatial()) != 0; });
    if (!reduced.has_value()) {
        throw std::logic_error("discarded modes are entangled with the cluster");
    }
    return *reduced;
}

SparseState emit_rotated_signal(const SparseState &state, const SourceModel &source, std::int32_t t) {
    SparseState s = emit_heralded(state, source, t, PairKind::Horizontal);
    return apply_jones(s, cluster_rotation(), {t, Port::In});
}

}  // namespace

JonesMatrix qibsim::cluster_rotation() {
    return WavePlate::half(degrees(22.5)).jones();
}

ProtocolResult qibsim::build_cluster_dynamic(int n_photons, const SourceModel &source, const QibConfig &config) {
    return build_cluster_dynamic(n_photons, source, config, std::vector<int>(n_photons > 1 ? n_photons - 1 : 0, 1));
}

ProtocolResult qibsim::build_cluster_dynamic(
    int n_photons, const SourceModel &source, const QibConfig &config, const std::vector<int> &gaps) {
    if (n_photons < 2) {
        throw std::invalid_argument("cluster generation needs at least two photons");
    }
    source.validate();
    config.validate();
    std::vector<std::int32_t> heralds = herald_bins(n_photons, gaps);
    const std::int32_t release = heralds.back() + 1;
    std::set<std::int32_t> herald_set(heralds.begin(), heralds.end());
    const JonesMatrix plate = cluster_rotation();

    ProtocolResult result;
    SparseState state = SparseState::vacuum();
    for (std::int32_t t = 0; t <= release; t++) {
        QibFunction f = QibFunction::Buffer;
        std::optional<JonesMatrix> from_plate;
        if (herald_set.count(t)) {
            state = emit_rotated_signal(state, source, t);
            f = QibFunction::Interfere;
            if (t != 0) {
                from_plate = plate;
            }
        } else if (t == release) {
            f = QibFunction::StoreRelease;
            from_plate = plate;
        }
        state = qib_step(state, f, config, t, from_plate);
        state = settle_environment(state, source);
        result.schedule.emplace_back(t, f);
    }

    for (std::size_t i = 1; i < heralds.size(); i++) {
        result.qubit_modes.push_back({heralds[i], Port::Out});
    }
    result.qubit_modes.push_back({release, Port::Out});
    PostSelection kept = post_select(state, one_photon_per_output(result.qubit_modes, release));
    result.success_probability = kept.probability;
    if (kept.succeeded()) {
        std::set<SpatialMode> herald_modes;
        for (auto t : heralds) {
            herald_modes.insert({t, Port::Herald});
        }
        result.final_state = drop_modes(kept.state, herald_modes);
    }
    result.photon_count = n_photons;
    return result;
}

StaticAcceptance qibsim::static_acceptance(const std::vector<bool> &herald_pattern, int n_photons) {
    if (herald_pattern.empty()) {
        throw std::invalid_argument("herald pattern is empty");
    }
    if (n_photons < 2) {
        throw std::invalid_argument("cluster generation needs at least two photons");
    }
    StaticAcceptance a;
    int counter = 0;
    for (std::size_t i = 0; i < herald_pattern.size(); i++) {
        auto t = static_cast<std::int32_t>(i);
        if (a.accepted.empty()) {
            if (herald_pattern[i]) {
                a.accepted.push_back(t);
            }
            continue;
        }
        if (herald_pattern[i] && counter % 2 == 0) {
            a.accepted.push_back(t);
            counter = 0;
        } else {
            if (herald_pattern[i]) {
                a.ignored.push_back(t);
            }
            counter++;
        }
        if (static_cast<int>(a.accepted.size()) == n_photons) {
            return a;
        }
    }
    throw std::invalid_argument(
        "herald pattern accepts " + std::to_string(a.accepted.size()) + " photons, fewer than " +
        std::to_string(n_photons));
}

ProtocolResult qibsim::build_cluster_static(
    int n_photons, const SourceModel &source, const QibConfig &config, const std::vector<bool> &herald_pattern) {
    source.validate();
    config.validate();
    StaticAcceptance plan = static_acceptance(herald_pattern, n_photons);
    const std::int32_t first = plan.accepted.front();
    // Accepting resets the counter, so the plate has acted an even number of times on the stored
    // photon since the last interference and the release follows at once.
    const std::int32_t release = plan.accepted.back() + 1;
    std::set<std::int32_t> accepted(plan.accepted.begin(), plan.accepted.end());
    std::set<std::int32_t> ignored(plan.ignored.begin(), plan.ignored.end());
    const JonesMatrix plate = cluster_rotation();

    ProtocolResult result;
    SparseState state = SparseState::vacuum();
    for (std::int32_t t = first; t <= release; t++) {
        QibFunction f = QibFunction::Buffer;
        if (accepted.count(t) || ignored.count(t)) {
            state = emit_rotated_signal(state, source, t);
        }
        if (accepted.count(t)) {
            f = QibFunction::Interfere;
        } else if (t == release) {
            f = QibFunction::StoreRelease;
        }
        state = qib_step(state, f, config, t, plate);
        state = settle_environment(state, source);
        result.schedule.emplace_back(t, f);
    }

    for (auto t : plan.accepted) {
        if (t != first) {
            result.qubit_modes.push_back({t, Port::Out});
        }
    }
    result.qubit_modes.push_back({release, Port::Out});
    std::vector<SpatialMode> detected = result.qubit_modes;
    for (auto t : plan.ignored) {
        detected.push_back({t, Port::Out});
    }
    auto pred = one_photon_per_output(detected, release);
    PostSelection kept = post_select(state, [&](const Occupation &occ) {
        for (std::int32_t t = 0; t < first; t++) {
            if (occ.count_in(SpatialMode{t, Port::Out}) != 0) {
                return false;
            }
        }
        return pred(occ);
    });
    result.success_probability = kept.probability;
    if (kept.succeeded()) {
        std::set<SpatialMode> discarded;
        for (auto t : plan.accepted) {
            discarded.insert({t, Port::Herald});
        }
        for (auto t : plan.ignored) {
            discarded.insert({t, Port::Herald});
            discarded.insert({t, Port::Out});
        }
        result.final_state = drop_modes(kept.state, discarded);
    }
    result.photon_count = n_photons;
    return result;
}

std::vector<std::string> qibsim::linear_cluster_stabilizers(int n) {
    if (n < 1) {
        throw std::invalid_argument("chain length must be >= 1");
    }
    std::vector<std::string> out;
    for (int i = 0; i < n; i++) {
        std::string s(n, 'I');
        s[i] = 'X';
        if (i > 0) {
            s[i - 1] = 'Z';
        }
        if (i + 1 < n) {
            s[i + 1] = 'Z';
        }
        out.push_back(s);
    }
    return out;
}
