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

#include "qibsim/statevec/sparse_state.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace qibsim;

Occupation::Occupation(std::initializer_list<ModeLabel> photons) {
    for (const auto &m : photons) {
        add(m, 1);
    }
}

std::uint32_t Occupation::count(const ModeLabel &mode) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), mode, [](const Entry &e, const ModeLabel &m) {
        return e.first < m;
    });
    if (it != entries_.end() && it->first == mode) {
        return it->second;
    }
    return 0;
}

std::uint32_t Occupation::count_in(SpatialMode spatial) const {
    std::uint32_t n = 0;
    for (const auto &[mode, c] : entries_) {
        if (mode.spatial() == spatial) {
            n += c;
        }
    }
    return n;
}

std::uint32_t Occupation::count_in(SpatialMode spatial, Pol pol) const {
    std::uint32_t n = 0;
    for (const auto &[mode, c] : entries_) {
        if (mode.spatial() == spatial && mode.pol == pol) {
            n += c;
        }
    }
    return n;
}

std::uint32_t Occupation::total() const {
    std::uint32_t n = 0;
    for (const auto &e : entries_) {
        n += e.second;
    }
    return n;
}

void Occupation::add(const ModeLabel &mode, std::int64_t delta) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), mode, [](const Entry &e, const ModeLabel &m) {
        return e.first < m;
    });
    bool present = it != entries_.end() && it->first == mode;
    std::int64_t current = present ? it->second : 0;
    std::int64_t next = current + delta;
    if (next < 0) {
        throw std::invalid_argument("negative photon number in " + mode.str());
    }
    if (next == 0) {
        if (present) {
            entries_.erase(it);
        }
    } else if (present) {
        it->second = static_cast<std::uint32_t>(next);
    } else {
        entries_.insert(it, {mode, static_cast<std::uint32_t>(next)});
    }
}

std::string Occupation::str() const {
    if (entries_.empty()) {
        return "|vac>";
    }
    std::string s = "|";
    bool first = true;
    for (const auto &[mode, c] : entries_) {
        if (!first) {
            s += ",";
        }
        first = false;
        s += mode.str();
        if (c != 1) {
            s += "^" + std::to_string(c);
        }
    }
    return s + ">";
}

SparseState::SparseState(double cutoff) : cutoff_(cutoff) {
    if (!(cutoff >= 0)) {
        throw std::invalid_argument("cutoff must be non-negative");
    }
}

SparseState SparseState::vacuum(double cutoff) {
    SparseState s(cutoff);
    s.accumulate(Occupation{}, 1.0);
    return s;
}

SparseState SparseState::basis(const Occupation &occupation, Amplitude amplitude) {
    SparseState s;
    s.accumulate(occupation, amplitude);
    return s;
}

SparseState SparseState::from_terms(std::initializer_list<std::pair<Occupation, Amplitude>> terms) {
    SparseState s;
    for (const auto &[occ, amp] : terms) {
        s.accumulate(occ, amp);
    }
    return s;
}

void SparseState::accumulate(const Occupation &occupation, Amplitude amplitude) {
    auto [it, inserted] = terms_.try_emplace(occupation, amplitude);
    if (!inserted) {
        it->second += amplitude;
    }
}

Amplitude SparseState::amplitude(const Occupation &occupation) const {
    auto it = terms_.find(occupation);
    return it == terms_.end() ? Amplitude{0.0} : it->second;
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += std::norm(t.second);
    }
    return total;
}

Amplitude SparseState::inner(const SparseState &other) const {
    Amplitude total = 0;
    const auto &small = terms_.size() <= other.terms_.size() ? terms_ : other.terms_;
    const auto &large = terms_.size() <= other.terms_.size() ? other.terms_ : terms_;
    bool self_is_small = &small == &terms_;
    for (const auto &[occ, amp] : small) {
        auto it = large.find(occ);
        if (it == large.end()) {
            continue;
        }
        total += self_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return total;
}

SparseState SparseState::scaled(Amplitude factor) const {
    SparseState s(cutoff_);
    for (const auto &[occ, amp] : terms_) {
        s.terms_.emplace_hint(s.terms_.end(), occ, amp * factor);
    }
    return s;
}

SparseState SparseState::normalized() const {
    double n2 = norm_squared();
    if (!(n2 > 0)) {
        throw std::domain_error("cannot normalize a zero-norm state");
    }
    return scaled(1.0 / std::sqrt(n2));
}

SparseState SparseState::pruned() const {
    SparseState s(cutoff_);
    for (const auto &[occ, amp] : terms_) {
        if (std::abs(amp) >= cutoff_ && amp != Amplitude{0.0}) {
            s.terms_.emplace_hint(s.terms_.end(), occ, amp);
        }
    }
    return s;
}

SparseState SparseState::with_cutoff(double cutoff) const {
    SparseState s(cutoff);
    s.terms_ = terms_;
    return s;
}

std::set<SpatialMode> SparseState::spatial_modes() const {
    std::set<SpatialMode> result;
    for (const auto &t : terms_) {
        for (const auto &e : t.first) {
            result.insert(e.first.spatial());
        }
    }
    return result;
}

std::set<SpatialMode> SparseState::spatial_modes_excluding_env() const {
    std::set<SpatialMode> result;
    for (const auto &t : terms_) {
        for (const auto &e : t.first) {
            if (e.first.port != Port::Env) {
                result.insert(e.first.spatial());
            }
        }
    }
    return result;
}

std::int32_t SparseState::next_env_index() const {
    std::int32_t next = 0;
    for (const auto &t : terms_) {
        for (const auto &e : t.first) {
            if (e.first.port == Port::Env) {
                next = std::max(next, e.first.time_bin + 1);
            }
        }
    }
    return next;
}

std::string SparseState::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &[occ, amp] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)" << occ.str();
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

SparseState qibsim::operator+(const SparseState &a, const SparseState &b) {
    SparseState s(std::min(a.cutoff(), b.cutoff()));
    for (const auto &[occ, amp] : a.terms()) {
        s.accumulate(occ, amp);
    }
    for (const auto &[occ, amp] : b.terms()) {
        s.accumulate(occ, amp);
    }
    return s;
}
