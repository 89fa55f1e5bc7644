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

#include "qibsim/statevec/mode.h"

#include <ostream>
#include <stdexcept>

using namespace qibsim;

std::string_view qibsim::port_name(Port port) {
    switch (port) {
        case Port::In:
            return "in";
        case Port::Out:
            return "out";
        case Port::To:
            return "to";
        case Port::From:
            return "from";
        case Port::Herald:
            return "herald";
        case Port::Env:
            return "env";
    }
    throw std::invalid_argument("unknown port");
}

Port qibsim::parse_port(std::string_view text) {
    for (Port p : {Port::In, Port::Out, Port::To, Port::From, Port::Herald, Port::Env}) {
        if (port_name(p) == text) {
            return p;
        }
    }
    throw std::invalid_argument("unknown port name '" + std::string(text) + "'");
}

char qibsim::pol_char(Pol pol) {
    return pol == Pol::H ? 'H' : 'V';
}

Pol qibsim::parse_pol(char c) {
    if (c == 'H') {
        return Pol::H;
    }
    if (c == 'V') {
        return Pol::V;
    }
    throw std::invalid_argument(std::string("unknown polarization '") + c + "'");
}

std::string SpatialMode::str() const {
    return std::string(port_name(port)) + "[" + std::to_string(time_bin) + "]";
}

std::string ModeLabel::str() const {
    std::string result = spatial().str();
    result += pol_char(pol);
    if (internal != 0) {
        result += "#" + std::to_string(internal);
    }
    return result;
}

std::ostream &qibsim::operator<<(std::ostream &out, const SpatialMode &mode) {
    return out << mode.str();
}

std::ostream &qibsim::operator<<(std::ostream &out, const ModeLabel &mode) {
    return out << mode.str();
}
