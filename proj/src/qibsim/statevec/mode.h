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

#ifndef _QIBSIM_STATEVEC_MODE_H
#define _QIBSIM_STATEVEC_MODE_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qibsim {

/// Port of the buffer (or auxiliary register) a photon occupies.
///
/// `In`/`From` are the two inputs of the fast PBS, `Out`/`To` its outputs. `Herald` holds the
/// detected partner photon of a pair. `Env` modes absorb photons removed by loss; for them the
/// `time_bin` field carries the environment index rather than a pulse slot.
enum class Port : std::uint8_t { In, Out, To, From, Herald, Env };

enum class Pol : std::uint8_t { H, V };

std::string_view port_name(Port port);
Port parse_port(std::string_view text);
char pol_char(Pol pol);
Pol parse_pol(char c);

/// Pulse slot plus port: everything about a mode except polarization and internal label.
struct SpatialMode {
    std::int32_t time_bin = 0;
    Port port = Port::In;

    auto operator<=>(const SpatialMode &) const = default;
    std::string str() const;
};

/// One bosonic mode.
///
/// `internal` distinguishes spectral-temporal modes. Label 0 is the shared mode that
/// indistinguishable photons occupy; photons with partial overlap carry a component in a
/// private label. Ordering is lexicographic on (time_bin, port, pol, internal).
struct ModeLabel {
    std::int32_t time_bin = 0;
    Port port = Port::In;
    Pol pol = Pol::H;
    std::uint16_t internal = 0;

    auto operator<=>(const ModeLabel &) const = default;

    SpatialMode spatial() const {
        return {time_bin, port};
    }
    ModeLabel with_spatial(SpatialMode s) const {
        return {s.time_bin, s.port, pol, internal};
    }
    ModeLabel with_pol(Pol p) const {
        return {time_bin, port, p, internal};
    }

    static ModeLabel env(std::int32_t index, Pol pol, std::uint16_t internal = 0) {
        return {index, Port::Env, pol, internal};
    }

    std::string str() const;
};

std::ostream &operator<<(std::ostream &out, const SpatialMode &mode);
std::ostream &operator<<(std::ostream &out, const ModeLabel &mode);

}  // namespace qibsim

#endif
