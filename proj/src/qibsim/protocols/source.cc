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


#include "qibsim/protocols/source.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qibsim/statevec/elements.h"

using namespace qibsim;

std::string_view qibsim::multipair_name(Multipair m) {
    switch (m) {
        case Multipair::None:
            return "none";
        case Multipair::TwoModeSqueezedTruncated:
            return "two_mode_squeezed_truncated";
    }
    throw std::invalid_argument("unknown multipair model");
}

Multipair qibsim::parse_multipair(std::string_view text) {
    for (auto m : {Multipair::None, Multipair::TwoModeSqueezedTruncated}) {
        if (multipair_name(m) == text) {
            return m;
        }
    }
    throw std::invalid_argument("unknown multipair model '" + std::string(text) + "'");
}

void SourceModel::validate() const {
    if (!(pair_probability >= 0 && pair_probability < 1)) {
        throw std::invalid_argument("pair_probability must lie in [0, 1)");
    }
    if (max_pairs < 1 || max_pairs > 4) {
        throw std::invalid_argument("max_pairs must lie in [1, 4]");
    }
    if (!(herald_efficiency >= 0 && herald_efficiency <= 1)) {
        throw std::invalid_argument("herald_efficiency must lie in [0, 1]");
    }
    if (!(mode_overlap >= 0 && mode_overlap <= 1)) {
        throw std::invalid_argument("mode_overlap must lie in [0, 1]");
    }
    if (!std::isfinite(bell_phase)) {
        throw std::invalid_argument("bell_phase must be finite");
    }
    multipair_name(multipair);
}

std::vector<double> SourceModel::heralded_pair_distribution() const {
    validate();
    if (multipair == Multipair::None || pair_probability == 0) {
        return {1.0};
    }
    std::vector<double> w;
    double total = 0;
    for (int n = 1; n <= max_pairs; n++) {
        w.push_back(std::pow(pair_probability, n));
        total += w.back();
    }
    for (double &x : w) {
        x /= total;
    }
    return w;
}

SparseState qibsim::emit_heralded(
    const SparseState &state, const SourceModel &source, std::int32_t time_bin, PairKind kind, double shared_scale) {
    source.validate();
    if (!(shared_scale >= 0 && shared_scale <= 1)) {
        throw std::invalid_argument("shared_scale must lie in [0, 1]");
    }
    const SpatialMode herald{time_bin, Port::Herald};
    const SpatialMode signal{time_bin, Port::In};
    for (const auto &t : state.terms()) {
        if (t.first.count_in(herald) != 0 || t.first.count_in(signal) != 0) {
            throw std::invalid_argument("emission modes of time bin " + std::to_string(time_bin) + " already occupied");
        }
    }
    if (time_bin < 0 || time_bin + 1 > 0xFFFF) {
        throw std::invalid_argument("time bin out of range for private labels");
    }
    const auto private_label = static_cast<std::uint16_t>(1 + time_bin);
    double w = source.mode_overlap * shared_scale;
    double shared = std::sqrt(w);
    double priv = std::sqrt(1 - w);

    std::vector<CreationMonomial> pair;
    auto add_pol = [&](Pol pol, Amplitude c) {
        ModeLabel h{time_bin, Port::Herald, pol};
        ModeLabel s{time_bin, Port::In, pol};
        if (shared > 0) {
            pair.push_back({c * shared, {h, s}});
        }
        if (priv > 0) {
            s.internal = private_label;
            pair.push_back({c * priv, {h, s}});
        }
    };
    if (kind == PairKind::Bell) {
        add_pol(Pol::H, M_SQRT1_2);
        add_pol(Pol::V, std::polar(M_SQRT1_2, source.bell_phase));
    } else {
        add_pol(Pol::H, 1.0);
    }

    std::vector<double> dist = source.heralded_pair_distribution();
    SparseState out(state.cutoff());
    SparseState pumped = state;
    SparseState reference = SparseState::vacuum();
    for (std::size_t k = 0; k < dist.size(); k++) {
        pumped = apply_creation(pumped, pair);
        reference = apply_creation(reference, pair);
        // The n-pair component is normalized on its own, then weighted.
        double scale = std::sqrt(dist[k] / reference.norm_squared());
        out = out + pumped.scaled(scale);
    }
    return out.pruned();
}
