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


#include "qibsim/montecarlo/rng.h"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace qibsim;

namespace {
constexpr std::uint64_t GOLDEN_GAMMA = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t qibsim::splitmix_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
    // Two rounds of mixing keep neighbouring (seed, trial) keys from sharing stream prefixes.
    return SplitMix64(splitmix_finalize(splitmix_finalize(seed) ^ (trial * GOLDEN_GAMMA + GOLDEN_GAMMA)));
}

std::uint64_t SplitMix64::next() {
    state_ += GOLDEN_GAMMA;
    return splitmix_finalize(state_);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform_open_below() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

bool SplitMix64::bernoulli(double probability) {
    if (probability >= 1) {
        return true;
    }
    return uniform() < probability;
}

std::uint64_t SplitMix64::geometric(double p) {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("geometric draw needs p in (0, 1]");
    }
    if (p == 1) {
        return 1;
    }
    double k = std::ceil(std::log(uniform_open_below()) / std::log1p(-p));
    if (k < 1) {
        return 1;
    }
    if (k >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(k);
}
