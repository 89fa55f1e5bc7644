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


#include "qibsim/protocols/result.h"

#include <cmath>
#include <stdexcept>

using namespace qibsim;

namespace {

Occupation all_in(const std::vector<SpatialMode> &modes, Pol pol) {
    Occupation occ;
    for (const auto &m : modes) {
        occ.add(ModeLabel{m.time_bin, m.port, pol});
    }
    return occ;
}

nlohmann::json spatial_to_json(const SpatialMode &m) {
    return {{"time_bin", m.time_bin}, {"port", std::string(port_name(m.port))}};
}

}  // namespace

SparseState qibsim::ghz_target(const std::vector<SpatialMode> &modes, double phase) {
    SparseState s;
    s.accumulate(all_in(modes, Pol::H), M_SQRT1_2);
    s.accumulate(all_in(modes, Pol::V), std::polar(M_SQRT1_2, phase));
    return s;
}

GhzOverlap qibsim::ghz_overlap(const SparseState &state, const std::vector<SpatialMode> &modes) {
    // F(phase) = sum_e |a_e + e^{-i phase} b_e|^2 / 2 over environment branches e.
    Occupation hs = all_in(modes, Pol::H);
    Occupation vs = all_in(modes, Pol::V);
    double na = 0;
    double nb = 0;
    Amplitude cross = 0;
    for (const auto &[env, rest] : split_modes(state, [](const ModeLabel &m) { return m.port == Port::Env; })) {
        Amplitude a = rest.amplitude(hs);
        Amplitude b = rest.amplitude(vs);
        na += std::norm(a);
        nb += std::norm(b);
        cross += std::conj(a) * b;
    }
    return {(na + nb + 2 * std::abs(cross)) / 2, std::arg(cross)};
}

nlohmann::json qibsim::state_to_json(const SparseState &state) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[occ, amp] : state.terms()) {
        nlohmann::json modes = nlohmann::json::array();
        for (const auto &[mode, n] : occ) {
            modes.push_back({
                {"time_bin", mode.time_bin},
                {"port", std::string(port_name(mode.port))},
                {"pol", std::string(1, pol_char(mode.pol))},
                {"internal", mode.internal},
                {"count", n},
            });
        }
        terms.push_back({{"occupation", modes}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return terms;
}

SparseState qibsim::state_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("state must be a JSON array of terms");
    }
    SparseState s;
    try {
        for (const auto &term : j) {
            Occupation occ;
            for (const auto &m : term.at("occupation")) {
                std::string pol = m.at("pol").get<std::string>();
                if (pol.size() != 1) {
                    throw std::invalid_argument("pol must be 'H' or 'V'");
                }
                ModeLabel label{
                    m.at("time_bin").get<std::int32_t>(),
                    parse_port(m.at("port").get<std::string>()),
                    parse_pol(pol[0]),
                    m.at("internal").get<std::uint16_t>(),
                };
                int count = m.at("count").get<int>();
                if (count <= 0) {
                    throw std::invalid_argument("photon counts must be positive");
                }
                occ.add(label, count);
            }
            s.accumulate(occ, Amplitude{term.at("re").get<double>(), term.at("im").get<double>()});
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed state JSON: ") + e.what());
    }
    return s;
}

nlohmann::json qibsim::result_to_json(const ProtocolResult &result) {
    nlohmann::json schedule = nlohmann::json::array();
    for (const auto &[t, f] : result.schedule) {
        schedule.push_back({{"time_bin", t}, {"function", std::string(function_name(f))}});
    }
    nlohmann::json modes = nlohmann::json::array();
    for (const auto &m : result.qubit_modes) {
        modes.push_back(spatial_to_json(m));
    }
    return {
        {"success_probability", result.success_probability},
        {"photon_count", result.photon_count},
        {"schedule", schedule},
        {"qubit_modes", modes},
        {"final_state", state_to_json(result.final_state)},
    };
}
