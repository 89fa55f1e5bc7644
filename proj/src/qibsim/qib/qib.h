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


#ifndef _QIBSIM_QIB_QIB_H
#define _QIBSIM_QIB_QIB_H

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qibsim/statevec/elements.h"

namespace qibsim {

/// Operating function of the buffer for one time bin.
///
/// Interfere: H_in->H_to, H_from->H_out, V_in->V_out, V_from->V_to.
/// Buffer: in->out, from->to. StoreRelease: in->to, from->out. Polarization is kept.
enum class QibFunction { Interfere, Buffer, StoreRelease };

std::string_view function_name(QibFunction function);
QibFunction parse_function(std::string_view text);

/// Logical on/off state of the two modulators for one time bin.
struct EomSettings {
    bool eom1 = false;
    bool eom2 = false;
    bool operator==(const EomSettings &) const = default;
};

/// (on, off) -> Interfere, (on, on) -> Buffer, (off, off) -> StoreRelease.
/// Throws std::invalid_argument for (off, on), which selects no function.
QibFunction function_from_eoms(EomSettings settings);
EomSettings eom_settings(QibFunction function);

struct QibConfig {
    /// Intensity transmission per pass through the fast PBS.
    double roundtrip_transmission = 1;
    /// Misalignment of the double-passed quarter-wave plate, radians.
    double qwp_angle_error = 0;
    /// Modulator extinction ratio r >= 1. Leakage intensity is 1/r; infinity is ideal.
    double eom_extinction = std::numeric_limits<double>::infinity();
    /// Seconds. Used only for reporting.
    double roundtrip_time = 13.16e-9;

    static QibConfig ideal() {
        return {};
    }
    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct LossComponent {
    std::string name;
    double transmission = 1;
    int multiplicity = 1;
};

struct LossBudget {
    std::vector<LossComponent> components;

    /// Component list of the reference buffer: two PBS passes, one modulator, nine mirrors
    /// and the end mirror of the delay line.
    static LossBudget reference();
    void validate() const;
};

/// Product of transmission^multiplicity. Throws on an empty budget.
double roundtrip_from_budget(const LossBudget &budget);

/// transmission^n.
double storage_efficiency(const QibConfig &config, int n_roundtrips);

/// Polarization map of one delay-line roundtrip from `to` back to `from`.
///
/// The ideal map is the identity; a misaligned quarter-wave plate rotates the stored qubit
/// by -2 * qwp_angle_error per roundtrip.
JonesMatrix delay_line_jones(const QibConfig &config);

/// The switchable fast PBS alone, acting on In/From of `time_bin` into Out/To of the same bin.
SparseState fast_pbs(const SparseState &state, QibFunction function, std::int32_t time_bin, double eom_extinction);

/// One time bin of the buffer.
///
/// Photons in In(t) and From(t) each pass a loss of `roundtrip_transmission`, the optional
/// `from_plate` acts on From(t), then the fast PBS acts. Photons leaving through To(t) traverse
/// the delay line and come back as From(t+1). Out(t) is left for detection.
SparseState qib_step(
    const SparseState &state,
    QibFunction function,
    const QibConfig &config,
    std::int32_t time_bin,
    const std::optional<JonesMatrix> &from_plate = std::nullopt);

}  // namespace qibsim

#endif
