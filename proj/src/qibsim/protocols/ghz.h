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


#ifndef _QIBSIM_PROTOCOLS_GHZ_H
#define _QIBSIM_PROTOCOLS_GHZ_H

#include <vector>

#include "qibsim/protocols/result.h"
#include "qibsim/protocols/source.h"

namespace qibsim {

/// Builds a 2N-photon GHZ state from N heralded Bell pairs.
///
/// Heralds arrive at t_0 = 0 and t_i = t_{i-1} + gaps[i-1]. The buffer stores the first signal
/// (StoreRelease at t_0), buffers between heralds, interferes each later signal with the stored
/// photon, and releases the last stored photon at t_{N-1} + 1. The kept events have exactly one
/// photon in Out(t_i) for i >= 1 and in Out(t_{N-1} + 1), and no photon in any other output bin.
///
/// Qubit modes are the N herald modes followed by the N designated outputs.
/// Throws std::invalid_argument for N < 2, a wrong number of gaps, or a gap < 1.
ProtocolResult build_ghz(int n_pairs, const SourceModel &source, const QibConfig &config, const std::vector<int> &gaps);
/// All gaps equal to 1.
ProtocolResult build_ghz(int n_pairs, const SourceModel &source, const QibConfig &config);

}  // namespace qibsim

#endif
