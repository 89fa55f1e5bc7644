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


#ifndef _QIBSIM_METRICS_ESTIMATORS_H
#define _QIBSIM_METRICS_ESTIMATORS_H

#include <vector>

#include "qibsim/metrics/count_table.h"

namespace qibsim {

/// Point estimate with a one-sigma counting error.
struct Estimate {
    double value = 0;
    double sigma = 0;
};

/// Analyzer setting k of n: theta_k = k pi / n and M_k = cos(theta_k) X + sin(theta_k) Y on
/// every photon. With n = 4 this is the four-setting scheme for four-photon states.
struct CoherenceSetting {
    int k = 0;
    int n_settings = 4;

    double theta() const;
};

/// (n[H...H] + n[V...V]) / total over an H/V table with outcomes of `n_photons` characters.
/// Throws on zero total or on outcomes of the wrong length.
Estimate ghz_population(const CountTable &counts, int n_photons);

/// (even - odd) / total where parity counts the '-' characters of each outcome.
Estimate parity_expectation(const CountTable &counts);

/// (1/n) sum_k (-1)^k <M_k> over one table per setting k = 0..n-1, n = number of photons.
/// For n photons the alternation isolates the |H...H><V...V| coherence exactly.
Estimate ghz_coherence(const std::vector<CountTable> &tables);

/// (P + C) / 2. Both inputs must lie in [-1, 1].
double ghz_fidelity(double population, double coherence);
Estimate ghz_fidelity(const Estimate &population, const Estimate &coherence);

/// (3 F_avg - 1) / 2 for a qubit channel. F_avg must lie in [0, 1].
double process_fidelity(double average_fidelity);

/// Noise photons per gate divided by memory efficiency. Throws for efficiency <= 0.
double mu1(double noise_photons_per_gate, double memory_efficiency);

/// (max - min) / max over a dip profile. Throws when the profile is empty or max <= 0.
double hom_visibility(const std::vector<double> &coincidences);

}  // namespace qibsim

#endif
