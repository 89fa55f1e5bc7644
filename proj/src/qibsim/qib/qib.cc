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


#include "qibsim/qib/qib.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace qibsim;

namespace {

bool occupies(const SparseState &state, SpatialMode mode) {
    for (const auto &t : state.terms()) {
        if (t.first.count_in(mode) != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view qibsim::function_name(QibFunction function) {
    switch (function) {
        case QibFunction::Interfere:
            return "interfere";
        case QibFunction::Buffer:
            return "buffer";
        case QibFunction::StoreRelease:
            return "store_release";
    }
    throw std::invalid_argument("unknown buffer function");
}

QibFunction qibsim::parse_function(std::string_view text) {
    for (auto f : {QibFunction::Interfere, QibFunction::Buffer, QibFunction::StoreRelease}) {
        if (function_name(f) == text) {
            return f;
        }
    }
    throw std::invalid_argument("unknown buffer function '" + std::string(text) + "'");
}

QibFunction qibsim::function_from_eoms(EomSettings settings) {
    if (settings.eom1 && !settings.eom2) {
        return QibFunction::Interfere;
    }
    if (settings.eom1 && settings.eom2) {
        return QibFunction::Buffer;
    }
    if (!settings.eom1 && !settings.eom2) {
        return QibFunction::StoreRelease;
    }
    throw std::invalid_argument("modulator setting (off, on) selects no buffer function");
}

EomSettings qibsim::eom_settings(QibFunction function) {
    switch (function) {
        case QibFunction::Interfere:
            return {true, false};
        case QibFunction::Buffer:
            return {true, true};
        case QibFunction::StoreRelease:
            return {false, false};
    }
    throw std::invalid_argument("unknown buffer function");
}

void QibConfig::validate() const {
    if (!(roundtrip_transmission >= 0 && roundtrip_transmission <= 1)) {
        throw std::invalid_argument("roundtrip_transmission must lie in [0, 1]");
    }
    if (!std::isfinite(qwp_angle_error)) {
        throw std::invalid_argument("qwp_angle_error must be finite");
    }
    if (!(eom_extinction >= 1)) {
        throw std::invalid_argument("eom_extinction must be >= 1");
    }
    if (!(roundtrip_time >= 0) || !std::isfinite(roundtrip_time)) {
        throw std::invalid_argument("roundtrip_time must be finite and non-negative");
    }
}

LossBudget LossBudget::reference() {
    return {{
        {"pbs", 0.987, 2},
        {"eom", 0.98, 1},
        {"dielectric_mirror", 0.996, 9},
        {"end_mirror", 0.993, 1},
    }};
}

void LossBudget::validate() const {
    for (const auto &c : components) {
        if (!(c.transmission >= 0 && c.transmission <= 1)) {
            throw std::invalid_argument("loss component '" + c.name + "' transmission must lie in [0, 1]");
        }
        if (c.multiplicity < 0) {
            throw std::invalid_argument("loss component '" + c.name + "' multiplicity must be >= 0");
        }
    }
}

double qibsim::roundtrip_from_budget(const LossBudget &budget) {
    if (budget.components.empty()) {
        throw std::invalid_argument("loss budget is empty");
    }
    budget.validate();
    double total = 1;
    for (const auto &c : budget.components) {
        for (int k = 0; k < c.multiplicity; k++) {
            total *= c.transmission;
        }
    }
    return total;
}

double qibsim::storage_efficiency(const QibConfig &config, int n_roundtrips) {
    if (n_roundtrips < 0) {
        throw std::invalid_argument("n_roundtrips must be >= 0");
    }
    config.validate();
    return std::pow(config.roundtrip_transmission, n_roundtrips);
}

JonesMatrix qibsim::delay_line_jones(const QibConfig &config) {
    // The quarter-wave plate is passed twice; a half-wave plate at 45 degrees undoes the ideal
    // flip so that a stored qubit keeps its polarization.
    const double quarter_turn = std::numbers::pi / 4;
    JonesMatrix qwp = WavePlate::quarter(quarter_turn + config.qwp_angle_error).jones();
    JonesMatrix hwp = WavePlate::half(quarter_turn).jones();
    return hwp * qwp * qwp;
}

SparseState qibsim::fast_pbs(const SparseState &state, QibFunction function, std::int32_t time_bin, double eom_extinction) {
    // Each polarization sees a switchable coupler. "Stay" routes in->out and from->to;
    // "cross" routes in->to and from->out. eom1 controls V, eom2 controls H.
    EomSettings eoms = eom_settings(function);
    if (!(eom_extinction >= 1)) {
        throw std::invalid_argument("eom_extinction must be >= 1");
    }
    double leak = std::isinf(eom_extinction) ? 0.0 : 1.0 / eom_extinction;
    Amplitude main = std::sqrt(1 - leak);
    Amplitude side = Amplitude{0, std::sqrt(leak)};
    const SpatialMode in{time_bin, Port::In};
    const SpatialMode from{time_bin, Port::From};
    const SpatialMode out{time_bin, Port::Out};
    const SpatialMode to{time_bin, Port::To};
    return apply_linear(state, [&](const ModeLabel &m) -> std::optional<ModeImage> {
        SpatialMode s = m.spatial();
        if (s != in && s != from) {
            return std::nullopt;
        }
        bool stay = m.pol == Pol::V ? eoms.eom1 : eoms.eom2;
        SpatialMode primary = (s == in) == stay ? out : to;
        SpatialMode secondary = primary == out ? to : out;
        ModeImage image{{m.with_spatial(primary), main}};
        if (leak > 0) {
            image.emplace_back(m.with_spatial(secondary), side);
        }
        return image;
    });
}

SparseState qibsim::qib_step(
    const SparseState &state,
    QibFunction function,
    const QibConfig &config,
    std::int32_t time_bin,
    const std::optional<JonesMatrix> &from_plate) {
    config.validate();
    eom_settings(function);
    const SpatialMode in{time_bin, Port::In};
    const SpatialMode from{time_bin, Port::From};
    const SpatialMode to{time_bin, Port::To};
    const SpatialMode next_from{time_bin + 1, Port::From};

    SparseState s = state;
    if (config.roundtrip_transmission < 1) {
        for (SpatialMode port : {in, from}) {
            if (occupies(s, port)) {
                s = apply_loss(s, port, config.roundtrip_transmission);
            }
        }
    }
    if (from_plate.has_value() && occupies(s, from)) {
        s = apply_jones(s, *from_plate, from);
    }
    s = fast_pbs(s, function, time_bin, config.eom_extinction);
    if (occupies(s, to)) {
        if (occupies(s, next_from)) {
            throw std::invalid_argument("from port of time bin " + std::to_string(time_bin + 1) + " already occupied");
        }
        if (config.qwp_angle_error != 0) {
            s = apply_jones(s, delay_line_jones(config), to);
        }
        s = move_spatial(s, to, next_from);
    }
    return s;
}
