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


#ifndef _QIBSIM_CLI_FIT_H
#define _QIBSIM_CLI_FIT_H

#include <iosfwd>
#include <optional>
#include <vector>

namespace qibsim {

/// Storage efficiency measured after `roundtrips` passes.
struct DecayPoint {
    double roundtrips = 0;
    double efficiency = 0;
    double standard_error = 0;
};

struct FitResult {
    double eta_fit = 0;
    double eta_stderr = 0;
    /// A in efficiency = A eta^n, fitted unless it was fixed.
    double prefactor = 1;
    bool prefactor_was_fixed = false;
    /// sqrt(sum_i w_i r_i^2) of the log-domain residuals.
    double residual_norm = 0;
};

/// Weighted least squares of log(efficiency) = log A + n log eta with weights
/// (efficiency / stderr)^2, the inverse variances of the logs.
///
/// Throws std::invalid_argument for fewer than 3 points or non-positive efficiencies or errors,
/// and std::domain_error when the roundtrip counts do not determine the slope or the fitted
/// eta falls outside (0, 1].
FitResult fit_exponential_decay(const std::vector<DecayPoint> &points, std::optional<double> fixed_prefactor = {});

/// Columns roundtrips, efficiency, stderr.
std::vector<DecayPoint> read_decay_csv(std::istream &in);

}  // namespace qibsim

#endif
