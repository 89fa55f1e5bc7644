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


#ifndef _QIBSIM_CLI_COMMANDS_H
#define _QIBSIM_CLI_COMMANDS_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qibsim/cli/config.h"
#include "qibsim/cli/csv.h"
#include "qibsim/cli/fit.h"

namespace qibsim {

constexpr int EXIT_SUCCESS_CODE = 0;
constexpr int EXIT_CONFIG_ERROR = 2;
constexpr int EXIT_NUMERICAL_FAILURE = 3;

/// Tabular result of a command, plus the final state for protocol commands.
struct CommandOutput {
    CsvTable table;
    std::optional<nlohmann::json> state;
};

/// Every closed-form quantity at each point of config.rates.
CommandOutput cmd_rates(const ExperimentConfig &config);
/// Monte Carlo against the formulas at config.montecarlo's operating point.
CommandOutput cmd_simulate(const ExperimentConfig &config);
/// Monte Carlo over config.sweep, one row per grid point in grid order. Point i is seeded with
/// a hash of (config.montecarlo.seed, i).
CommandOutput cmd_sweep(const ExperimentConfig &config);
CommandOutput cmd_ghz(const ExperimentConfig &config);
CommandOutput cmd_cluster(const ExperimentConfig &config);
CommandOutput cmd_cphase(const ExperimentConfig &config);
CommandOutput cmd_hom(const ExperimentConfig &config);
CommandOutput cmd_fit(const ExperimentConfig &config, const std::vector<DecayPoint> &points);

/// Rows as objects keyed by column, numbers where a cell parses as one.
nlohmann::json table_to_json(const CsvTable &table);

/// Entry point of the `qibsim` tool. `args` excludes the program name. Returns 0 on success, 2
/// for a bad command line or config, 3 for a numerical failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qibsim

#endif
