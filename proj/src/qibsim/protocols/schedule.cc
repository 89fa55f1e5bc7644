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


#include "qibsim/protocols/schedule.h"

#include <set>
#include <stdexcept>
#include <string>

using namespace qibsim;

std::vector<std::int32_t> qibsim::herald_bins(int n, const std::vector<int> &gaps) {
    if (gaps.size() + 1 != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expected " + std::to_string(n - 1) + " herald gaps");
    }
    std::vector<std::int32_t> bins{0};
    for (int g : gaps) {
        if (g < 1) {
            throw std::invalid_argument("herald gaps must be >= 1");
        }
        if (bins.back() > 30000 - g) {
            throw std::invalid_argument("herald gaps too long");
        }
        bins.push_back(bins.back() + g);
    }
    return bins;
}

SparseState qibsim::settle_environment(const SparseState &state, const SourceModel &source) {
    if (source.multipair == Multipair::None) {
        return project(state, no_env_photons());
    }
    return compress_environment(state);
}

OccupationPredicate qibsim::one_photon_per_output(const std::vector<SpatialMode> &outputs, std::int32_t last_bin) {
    std::set<std::int32_t> designated;
    for (const auto &m : outputs) {
        if (m.port != Port::Out) {
            throw std::invalid_argument("designated outputs must be Out modes");
        }
        designated.insert(m.time_bin);
    }
    return [designated, last_bin](const Occupation &occ) {
        for (std::int32_t t = 0; t <= last_bin; t++) {
            std::uint32_t want = designated.count(t) ? 1 : 0;
            if (occ.count_in(SpatialMode{t, Port::Out}) != want) {
                return false;
            }
        }
        return true;
    };
}
