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


#ifndef _QIBSIM_PROTOCOLS_SCHEDULE_H
#define _QIBSIM_PROTOCOLS_SCHEDULE_H

#include <vector>

#include "qibsim/protocols/source.h"
#include "qibsim/statevec/elements.h"

namespace qibsim {

/// t_0 = 0 and t_i = t_{i-1} + gaps[i-1]. Throws unless there are n - 1 gaps, each >= 1.
std::vector<std::int32_t> herald_bins(int n, const std::vector<int> &gaps);

/// Without multipair emission every kept event holds all photons, so branches with a lost photon
/// are dropped at once. Otherwise equivalent environment branches are merged.
SparseState settle_environment(const SparseState &state, const SourceModel &source);

/// Exactly one photon in each of `outputs` and none in any other Out(t) for t <= last_bin.
OccupationPredicate one_photon_per_output(const std::vector<SpatialMode> &outputs, std::int32_t last_bin);

}  // namespace qibsim

#endif
