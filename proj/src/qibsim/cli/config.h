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


#ifndef _QIBSIM_CLI_CONFIG_H
#define _QIBSIM_CLI_CONFIG_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qibsim/montecarlo/trials.h"
#include "qibsim/protocols/source.h"
#include "qibsim/qib/qib.h"

namespace qibsim {

constexpr int CONFIG_SCHEMA_VERSION = 1;

/// Cartesian grid of operating points, walked with N outermost and p innermost.
struct RateGrid {
    std::vector<double> p{0.01};
    std::vector<double> eta{0.917};
    std::vector<int> M{20};
    std::vector<int> N{2};
    /// Source clock, Hz.
    double f = 76e6;

    std::vector<RateParams> points() const;
    void validate() const;
};

/// Trial settings shared by `simulate` and `sweep`; the operating point comes from elsewhere.
struct MonteCarloSection {
    RateParams params{0.05, 0.9, 10, 2, 76e6};
    std::uint64_t n_trials = 1000000;
    std::uint64_t seed = 0;
    std::optional<double> max_switch_rate;
    bool relative_multiplexing = true;
    bool per_pair_restart = false;
    double dark_count_probability = 0;
    bool sample_postselection = false;
    double detector_efficiency = 1;

    TrialConfig trial_config(const RateParams &point, std::uint64_t seed_for_point) const;
};

struct ProtocolSection {
    /// Pairs for GHZ, photons for cluster states.
    int n = 2;
    /// Bins between heralds; empty means consecutive heralds.
    std::vector<int> gaps;
    /// "dynamic" or "static".
    std::string cluster_variant = "dynamic";
    /// Herald pattern for the static cluster variant.
    std::vector<bool> herald_pattern;
    /// Two cardinal letters (H, V, D, A, R, L) for the CPHASE control and target inputs.
    std::string cphase_input = "DD";
};

struct HomSection {
    std::vector<int> storage_roundtrips{1, 10, 25, 51};
    /// Empty means -4 to 4 in steps of 0.25.
    std::vector<double> delays;
    /// When set, the mode overlap is calibrated so one roundtrip gives this visibility.
    std::optional<double> calibrate_visibility;
};

struct FitSection {
    std::optional<double> fixed_prefactor;
};

struct ExperimentConfig {
    int schema_version = CONFIG_SCHEMA_VERSION;
    SourceModel source;
    QibConfig qib = QibConfig::ideal();
    RateGrid rates;
    MonteCarloSection montecarlo;
    ProtocolSection protocol;
    HomSection hom;
    FitSection fit;
    /// Grid of the `sweep` command, run through the Monte Carlo with montecarlo's settings.
    RateGrid sweep{{0.01, 0.05, 0.2}, {0.7, 0.9}, {5, 20}, {2, 3}, 76e6};

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

/// Throws std::invalid_argument on unknown fields, wrong types, a schema version other than
/// CONFIG_SCHEMA_VERSION, or invalid values. Missing fields keep their defaults.
ExperimentConfig config_from_json(const nlohmann::json &j);
/// Every field, so that config_from_json(config_to_json(c)) == c.
nlohmann::json config_to_json(const ExperimentConfig &config);

ExperimentConfig load_config_file(const std::string &path);

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b);

}  // namespace qibsim

#endif
