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


#ifndef _QIBSIM_PROTOCOLS_SOURCE_H
#define _QIBSIM_PROTOCOLS_SOURCE_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "qibsim/statevec/sparse_state.h"

namespace qibsim {

enum class Multipair { None, TwoModeSqueezedTruncated };

std::string_view multipair_name(Multipair m);
Multipair parse_multipair(std::string_view text);

/// Per-pulse pair statistics of the heralded source.
struct SourceModel {
    /// Pair probability per pulse, in [0, 1).
    double pair_probability = 0;
    Multipair multipair = Multipair::None;
    /// Largest pair number kept by TwoModeSqueezedTruncated.
    int max_pairs = 2;
    /// Kept for the rate path; protocol builders treat heralds as ideal.
    double herald_efficiency = 1;
    /// Fraction of each signal photon in the spectral mode shared by all pulses, in [0, 1].
    double mode_overlap = 1;
    /// Relative phase of the VV component of an emitted Bell pair, radians.
    double bell_phase = 0;

    void validate() const;

    /// Probabilities of n = 1..max pairs given that at least one pair was heralded.
    /// n pairs carry weight proportional to p^n before renormalization.
    std::vector<double> heralded_pair_distribution() const;
};

/// Polarization content of one emitted pair.
enum class PairKind {
    /// (|HH> + e^{i bell_phase}|VV>)/sqrt2 across herald and signal.
    Bell,
    /// |HH> across herald and signal.
    Horizontal,
};

/// Adds the heralded emission of pulse `time_bin`: photons in Herald(t) and In(t).
///
/// Signal photons are split into amplitude sqrt(w) in the shared internal label 0 and
/// sqrt(1 - w) in the private label 1 + time_bin, where w = mode_overlap * shared_scale.
/// Requires Herald(t) and In(t) to be empty.
SparseState emit_heralded(
    const SparseState &state, const SourceModel &source, std::int32_t time_bin, PairKind kind, double shared_scale = 1);

}  // namespace qibsim

#endif
