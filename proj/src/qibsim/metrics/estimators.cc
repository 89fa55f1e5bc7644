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


#include "qibsim/metrics/estimators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace qibsim;

namespace {

void require_positive_total(const CountTable &counts) {
    if (!(counts.total() > 0)) {
        throw std::invalid_argument("count table has zero total");
    }
}

}  // namespace

double CoherenceSetting::theta() const {
    if (n_settings < 1 || k < 0 || k >= n_settings) {
        throw std::invalid_argument("coherence setting k must lie in [0, n_settings)");
    }
    return k * std::numbers::pi / n_settings;
}

Estimate qibsim::ghz_population(const CountTable &counts, int n_photons) {
    require_positive_total(counts);
    if (n_photons < 1 || counts.outcome_length() != static_cast<std::size_t>(n_photons)) {
        throw std::invalid_argument("population table outcomes must have one character per photon");
    }
    for (const auto &e : counts.entries()) {
        if (e.first.find_first_not_of("HV") != std::string::npos) {
            throw std::invalid_argument("population outcome '" + e.first + "' is not an H/V pattern");
        }
    }
    double total = counts.total();
    double p = (counts.get(std::string(n_photons, 'H')) + counts.get(std::string(n_photons, 'V'))) / total;
    return {p, std::sqrt(std::max(0.0, p * (1 - p)) / total)};
}

Estimate qibsim::parity_expectation(const CountTable &counts) {
    require_positive_total(counts);
    counts.outcome_length();
    double even = 0;
    double odd = 0;
    for (const auto &[outcome, weight] : counts.entries()) {
        if (outcome.find_first_not_of("+-") != std::string::npos) {
            throw std::invalid_argument("parity outcome '" + outcome + "' is not a +/- pattern");
        }
        (std::count(outcome.begin(), outcome.end(), '-') % 2 == 0 ? even : odd) += weight;
    }
    double total = even + odd;
    double m = (even - odd) / total;
    return {m, std::sqrt(std::max(0.0, 1 - m * m) / total)};
}

Estimate qibsim::ghz_coherence(const std::vector<CountTable> &tables) {
    if (tables.empty()) {
        throw std::invalid_argument("coherence needs one table per analyzer setting");
    }
    for (const auto &t : tables) {
        require_positive_total(t);
        if (t.outcome_length() != tables.size()) {
            throw std::invalid_argument("coherence needs as many settings as photons");
        }
    }
    double sum = 0;
    double var = 0;
    for (std::size_t k = 0; k < tables.size(); k++) {
        Estimate m = parity_expectation(tables[k]);
        sum += (k % 2 == 0 ? 1.0 : -1.0) * m.value;
        var += m.sigma * m.sigma;
    }
    double n = static_cast<double>(tables.size());
    return {sum / n, std::sqrt(var) / n};
}

double qibsim::ghz_fidelity(double population, double coherence) {
    if (!(population >= -1 && population <= 1 && coherence >= -1 && coherence <= 1)) {
        throw std::invalid_argument("population and coherence must lie in [-1, 1]");
    }
    return (population + coherence) / 2;
}

Estimate qibsim::ghz_fidelity(const Estimate &population, const Estimate &coherence) {
    return {
        ghz_fidelity(population.value, coherence.value),
        std::hypot(population.sigma, coherence.sigma) / 2,
    };
}

double qibsim::process_fidelity(double average_fidelity) {
    if (!(average_fidelity >= 0 && average_fidelity <= 1)) {
        throw std::invalid_argument("average fidelity must lie in [0, 1]");
    }
    return (3 * average_fidelity - 1) / 2;
}

double qibsim::mu1(double noise_photons_per_gate, double memory_efficiency) {
    if (!(memory_efficiency > 0)) {
        throw std::invalid_argument("memory efficiency must be positive");
    }
    if (!(noise_photons_per_gate >= 0)) {
        throw std::invalid_argument("noise photon number must be non-negative");
    }
    return noise_photons_per_gate / memory_efficiency;
}

double qibsim::hom_visibility(const std::vector<double> &coincidences) {
    if (coincidences.empty()) {
        throw std::invalid_argument("HOM profile is empty");
    }
    auto [lo, hi] = std::minmax_element(coincidences.begin(), coincidences.end());
    if (!(*hi > 0)) {
        throw std::invalid_argument("HOM profile has no coincidences");
    }
    return (*hi - *lo) / *hi;
}
