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


#include "qibsim/metrics/born.h"

#include "qibsim/metrics/estimators.h"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

using namespace qibsim;

namespace {

/// Outcome string when every mode holds one photon, else empty.
std::string pattern(const Occupation &occ, const std::vector<SpatialMode> &modes, char h, char v) {
    std::string s;
    s.reserve(modes.size());
    for (const auto &m : modes) {
        std::uint32_t nh = occ.count_in(m, Pol::H);
        std::uint32_t nv = occ.count_in(m, Pol::V);
        if (nh + nv != 1) {
            return {};
        }
        s.push_back(nh == 1 ? h : v);
    }
    return s;
}

JonesMatrix pauli_jones(char p) {
    const Amplitude i{0, 1};
    JonesMatrix j;
    switch (p) {
        case 'I':
            break;
        case 'X':
            j.m = {{{0.0, 1.0}, {1.0, 0.0}}};
            break;
        case 'Y':
            j.m = {{{0.0, -i}, {i, 0.0}}};
            break;
        case 'Z':
            j.m = {{{1.0, 0.0}, {0.0, -1.0}}};
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
    }
    return j;
}

}  // namespace

CountTable qibsim::born_hv_table(const SparseState &state, const std::vector<SpatialMode> &modes) {
    CountTable table;
    for (const auto &[occ, amp] : state.terms()) {
        std::string s = pattern(occ, modes, 'H', 'V');
        if (!s.empty()) {
            table.add(s, std::norm(amp));
        }
    }
    return table;
}

CountTable qibsim::born_phase_table(const SparseState &state, const std::vector<SpatialMode> &modes, double theta) {
    // Rows are the analyzer bras <+| and <-| mapped onto the H and V detectors.
    Amplitude phase = std::polar(1.0, -theta);
    JonesMatrix analyzer;
    analyzer.m = {{{M_SQRT1_2, phase * M_SQRT1_2}, {M_SQRT1_2, -phase * M_SQRT1_2}}};
    SparseState rotated = state;
    for (const auto &m : modes) {
        rotated = apply_jones(rotated, analyzer, m);
    }
    CountTable table;
    for (const auto &[occ, amp] : rotated.terms()) {
        std::string s = pattern(occ, modes, '+', '-');
        if (!s.empty()) {
            table.add(s, std::norm(amp));
        }
    }
    return table;
}

std::vector<CountTable> qibsim::born_coherence_tables(const SparseState &state, const std::vector<SpatialMode> &modes) {
    std::vector<CountTable> tables;
    int n = static_cast<int>(modes.size());
    for (int k = 0; k < n; k++) {
        tables.push_back(born_phase_table(state, modes, CoherenceSetting{k, n}.theta()));
    }
    return tables;
}

CountTable qibsim::sample_counts(const CountTable &probabilities, std::uint64_t shots, std::uint64_t seed) {
    double total = probabilities.total();
    if (!(total > 0)) {
        throw std::invalid_argument("cannot sample from an all-zero table");
    }
    std::mt19937_64 rng(seed);
    CountTable counts;
    std::uint64_t remaining = shots;
    double remaining_p = total;
    for (const auto &[outcome, p] : probabilities.entries()) {
        std::uint64_t n = 0;
        if (remaining > 0 && remaining_p > 0) {
            double q = std::min(1.0, p / remaining_p);
            n = std::binomial_distribution<std::uint64_t>(remaining, q)(rng);
        }
        counts.add(outcome, static_cast<double>(n));
        remaining -= n;
        remaining_p -= p;
    }
    return counts;
}

double qibsim::pauli_expectation(const SparseState &state, const std::vector<SpatialMode> &modes, const std::string &paulis) {
    if (paulis.size() != modes.size()) {
        throw std::invalid_argument("Pauli string length must equal the number of modes");
    }
    SparseState acted = state;
    for (std::size_t k = 0; k < modes.size(); k++) {
        JonesMatrix j = pauli_jones(paulis[k]);
        if (paulis[k] != 'I') {
            acted = apply_jones(acted, j, modes[k]);
        }
    }
    return state.inner(acted).real();
}

std::array<std::array<Amplitude, 2>, 6> qibsim::cardinal_states() {
    const Amplitude i{0, 1};
    const double r = M_SQRT1_2;
    return {{
        {1.0, 0.0},
        {0.0, 1.0},
        {r, r},
        {r, -r},
        {r, i * r},
        {r, -i * r},
    }};
}

AverageFidelity qibsim::average_qubit_fidelity(const Channel &channel, SpatialMode in_mode, SpatialMode out_mode) {
    AverageFidelity result;
    auto states = cardinal_states();
    for (std::size_t s = 0; s < states.size(); s++) {
        SparseState input;
        const ModeLabel h{in_mode.time_bin, in_mode.port, Pol::H};
        input.accumulate(Occupation{h}, states[s][0]);
        input.accumulate(Occupation{h.with_pol(Pol::V)}, states[s][1]);
        SparseState output = channel(input.pruned());

        // Overlap with the target polarization, per configuration of everything else.
        std::map<std::pair<Occupation, std::uint16_t>, Amplitude> overlaps;
        double arrived = 0;
        for (const auto &[occ, amp] : output.terms()) {
            if (occ.count_in(out_mode) != 1) {
                continue;
            }
            arrived += std::norm(amp);
            for (const auto &[mode, n] : occ) {
                if (mode.spatial() != out_mode) {
                    continue;
                }
                Occupation rest = occ;
                rest.add(mode, -1);
                overlaps[{rest, mode.internal}] += std::conj(states[s][static_cast<int>(mode.pol)]) * amp;
            }
        }
        if (!(arrived > 0)) {
            throw std::domain_error("photon never reaches the output mode");
        }
        double f = 0;
        for (const auto &e : overlaps) {
            f += std::norm(e.second);
        }
        result.per_state[s] = f / arrived;
        result.survival[s] = arrived;
    }
    double sum = 0;
    for (double f : result.per_state) {
        sum += f;
    }
    result.mean = sum / 6;
    double var = 0;
    for (double f : result.per_state) {
        var += (f - result.mean) * (f - result.mean);
    }
    result.stddev = std::sqrt(var / 6);
    return result;
}
