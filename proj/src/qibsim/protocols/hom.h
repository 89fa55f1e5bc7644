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


#ifndef _QIBSIM_PROTOCOLS_HOM_H
#define _QIBSIM_PROTOCOLS_HOM_H

#include <vector>

#include "qibsim/protocols/source.h"
#include "qibsim/qib/qib.h"

namespace qibsim {

/// Two-photon interference between a photon stored for `storage_bins` roundtrips and a fresh one.
struct HomResult {
    double visibility = 0;
    std::vector<double> delays;
    /// Coincidence probability per heralded pair of pulses, one per delay.
    std::vector<double> coincidences;
};

/// -4 to 4 in steps of 0.25, in units of the photon coherence time.
std::vector<double> default_hom_delays();

/// Spectral overlap of two photons offset by `delay` coherence times: exp(-delay^2).
double hom_delay_overlap(double delay);

/// The photon heralded at bin 0 is stored until bin `storage_bins` and combined at the fast PBS
/// with the photon heralded there, rotated to V. A half-wave plate at 22.5 degrees on Out(t)
/// followed by H/V detection closes the interferometer. A coincidence is at least one H and at
/// least one V photon in Out(t).
///
/// Visibility is (max - min) / max over the coincidence curve. Throws std::invalid_argument when
/// `storage_bins` < 1 or `delays` is empty.
HomResult hom_experiment(
    const SourceModel &source, const QibConfig &config, int storage_bins, const std::vector<double> &delays);
HomResult hom_experiment(const SourceModel &source, const QibConfig &config, int storage_bins);

/// Coincidence probability at one delay.
double hom_coincidence(const SourceModel &source, const QibConfig &config, int storage_bins, double delay);

/// Mode overlap for which the one-roundtrip visibility over default_hom_delays() equals
/// `target_visibility`, by bisection.
///
/// The pair probability and loss of `source` and `config` are kept, since without multipair
/// emission the visibility is mode_overlap^2 at any storage time. Throws std::domain_error when
/// the target is not reachable in [0, 1].
double calibrate_hom_overlap(const SourceModel &source, const QibConfig &config, double target_visibility);

}  // namespace qibsim

#endif
