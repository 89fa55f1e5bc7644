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

#include "qibsim/statevec/elements.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace qibsim;

namespace {

double sqrt_factorial(std::uint32_t n) {
    static const std::array<double, 33> table = [] {
        std::array<double, 33> t{};
        double f = 1;
        t[0] = 1;
        for (std::size_t k = 1; k < t.size(); k++) {
            f *= static_cast<double>(k);
            t[k] = std::sqrt(f);
        }
        return t;
    }();
    if (n >= table.size()) {
        return std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
    }
    return table[n];
}

struct Expansion {
    const std::vector<const ModeImage *> &photons;
    SparseState &out;

    void run(std::size_t k, Occupation &occ, Amplitude coefficient) {
        if (k == photons.size()) {
            double norm = 1;
            for (const auto &e : occ) {
                norm *= sqrt_factorial(e.second);
            }
            out.accumulate(occ, coefficient * norm);
            return;
        }
        for (const auto &[mode, c] : *photons[k]) {
            occ.add(mode, 1);
            run(k + 1, occ, coefficient * c);
            occ.add(mode, -1);
        }
    }
};

}  // namespace

JonesMatrix JonesMatrix::rotation(double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    JonesMatrix j;
    j.m = {{{c, -s}, {s, c}}};
    return j;
}

JonesMatrix JonesMatrix::operator*(const JonesMatrix &rhs) const {
    JonesMatrix r;
    for (int i = 0; i < 2; i++) {
        for (int k = 0; k < 2; k++) {
            r.m[i][k] = m[i][0] * rhs.m[0][k] + m[i][1] * rhs.m[1][k];
        }
    }
    return r;
}

JonesMatrix JonesMatrix::adjoint() const {
    JonesMatrix r;
    for (int i = 0; i < 2; i++) {
        for (int k = 0; k < 2; k++) {
            r.m[i][k] = std::conj(m[k][i]);
        }
    }
    return r;
}

bool JonesMatrix::is_unitary(double tolerance) const {
    JonesMatrix p = adjoint() * *this;
    for (int i = 0; i < 2; i++) {
        for (int k = 0; k < 2; k++) {
            Amplitude expected = i == k ? 1.0 : 0.0;
            if (std::abs(p.m[i][k] - expected) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

JonesMatrix WavePlate::jones() const {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("wave plate angle must be finite");
    }
    double c = std::cos(angle);
    double s = std::sin(angle);
    JonesMatrix j;
    if (kind == Kind::Half) {
        double c2 = std::cos(2 * angle);
        double s2 = std::sin(2 * angle);
        j.m = {{{c2, s2}, {s2, -c2}}};
    } else {
        const Amplitude i{0.0, 1.0};
        Amplitude off = (1.0 - i) * s * c;
        j.m = {{{c * c + i * s * s, off}, {off, s * s + i * c * c}}};
    }
    return j;
}

double qibsim::degrees(double deg) {
    return deg * std::numbers::pi / 180.0;
}

SparseState qibsim::apply_linear(const SparseState &state, const ModeTransform &transform) {
    SparseState out(state.cutoff());
    std::vector<std::pair<ModeImage, std::uint32_t>> images;
    std::vector<const ModeImage *> photons;
    for (const auto &[occ, amp] : state.terms()) {
        Occupation base;
        images.clear();
        photons.clear();
        double input_norm = 1;
        for (const auto &[mode, n] : occ) {
            input_norm *= sqrt_factorial(n);
            auto image = transform(mode);
            if (!image.has_value()) {
                base.add(mode, n);
                continue;
            }
            images.emplace_back(std::move(*image), n);
        }
        if (images.empty()) {
            out.accumulate(occ, amp);
            continue;
        }
        for (const auto &[image, n] : images) {
            for (std::uint32_t k = 0; k < n; k++) {
                photons.push_back(&image);
            }
        }
        Expansion expansion{photons, out};
        expansion.run(0, base, amp / input_norm);
    }
    return out.pruned();
}

SparseState qibsim::apply_jones(const SparseState &state, const JonesMatrix &jones, SpatialMode target) {
    return apply_linear(state, [&](const ModeLabel &mode) -> std::optional<ModeImage> {
        if (mode.spatial() != target) {
            return std::nullopt;
        }
        ModeImage image;
        for (Pol out : {Pol::H, Pol::V}) {
            Amplitude c = jones(out, mode.pol);
            if (c != Amplitude{0.0}) {
                image.emplace_back(mode.with_pol(out), c);
            }
        }
        return image;
    });
}

SparseState qibsim::apply_waveplate(const SparseState &state, const WavePlate &plate, SpatialMode target) {
    return apply_jones(state, plate.jones(), target);
}

SparseState qibsim::apply_pbs(const SparseState &state, SpatialMode a, SpatialMode b) {
    if (a == b) {
        throw std::invalid_argument("PBS ports must differ");
    }
    return apply_linear(state, [&](const ModeLabel &mode) -> std::optional<ModeImage> {
        SpatialMode s = mode.spatial();
        if (s != a && s != b) {
            return std::nullopt;
        }
        if (mode.pol == Pol::H) {
            return ModeImage{{mode, 1.0}};
        }
        return ModeImage{{mode.with_spatial(s == a ? b : a), 1.0}};
    });
}

SparseState qibsim::apply_loss(const SparseState &state, SpatialMode mode, double transmission, std::int32_t env_index) {
    if (!(transmission >= 0 && transmission <= 1)) {
        throw std::invalid_argument("transmission must lie in [0, 1]");
    }
    if (mode.port == Port::Env) {
        throw std::invalid_argument("loss cannot act on an environment mode");
    }
    for (const auto &t : state.terms()) {
        for (const auto &e : t.first) {
            if (e.first.port == Port::Env && e.first.time_bin == env_index) {
                throw std::invalid_argument("environment register " + std::to_string(env_index) + " already in use");
            }
        }
    }
    if (transmission == 1) {
        return state;
    }
    double keep = std::sqrt(transmission);
    double lose = std::sqrt(1 - transmission);
    return apply_linear(state, [&](const ModeLabel &m) -> std::optional<ModeImage> {
        if (m.spatial() != mode) {
            return std::nullopt;
        }
        ModeImage image;
        if (keep > 0) {
            image.emplace_back(m, keep);
        }
        image.emplace_back(ModeLabel::env(env_index, m.pol, m.internal), lose);
        return image;
    });
}

SparseState qibsim::apply_loss(const SparseState &state, SpatialMode mode, double transmission) {
    return apply_loss(state, mode, transmission, state.next_env_index());
}

SparseState qibsim::relabel(const SparseState &state, const std::function<ModeLabel(const ModeLabel &)> &relabel) {
    SparseState out(state.cutoff());
    for (const auto &[occ, amp] : state.terms()) {
        Occupation moved;
        for (const auto &[mode, n] : occ) {
            ModeLabel target = relabel(mode);
            if (moved.count(target) != 0) {
                throw std::invalid_argument("relabel collides on " + target.str());
            }
            moved.add(target, n);
        }
        out.accumulate(moved, amp);
    }
    return out;
}

SparseState qibsim::move_spatial(const SparseState &state, SpatialMode from, SpatialMode to) {
    return relabel(state, [&](const ModeLabel &m) {
        return m.spatial() == from ? m.with_spatial(to) : m;
    });
}

SparseState qibsim::apply_creation(const SparseState &state, const std::vector<CreationMonomial> &polynomial) {
    SparseState out(state.cutoff());
    for (const auto &[occ, amp] : state.terms()) {
        for (const auto &mono : polynomial) {
            Occupation next = occ;
            double factor = 1;
            for (const auto &mode : mono.modes) {
                factor *= std::sqrt(static_cast<double>(next.count(mode) + 1));
                next.add(mode, 1);
            }
            out.accumulate(next, amp * mono.coefficient * factor);
        }
    }
    return out.pruned();
}

SparseState qibsim::project(const SparseState &state, const OccupationPredicate &predicate) {
    SparseState out(state.cutoff());
    for (const auto &[occ, amp] : state.terms()) {
        if (predicate(occ)) {
            out.accumulate(occ, amp);
        }
    }
    return out;
}

PostSelection qibsim::post_select(const SparseState &state, const OccupationPredicate &predicate) {
    SparseState kept = project(state, predicate);
    double probability = kept.norm_squared();
    if (!(probability > 0)) {
        return {SparseState(state.cutoff()), 0.0};
    }
    return {kept.normalized(), probability};
}

OccupationPredicate qibsim::photons_in_equal(SpatialMode mode, std::uint32_t count) {
    return [mode, count](const Occupation &occ) {
        return occ.count_in(mode) == count;
    };
}

OccupationPredicate qibsim::no_env_photons() {
    return [](const Occupation &occ) {
        for (const auto &e : occ) {
            if (e.first.port == Port::Env) {
                return false;
            }
        }
        return true;
    };
}

OccupationPredicate qibsim::all_of(std::vector<OccupationPredicate> predicates) {
    return [predicates = std::move(predicates)](const Occupation &occ) {
        for (const auto &p : predicates) {
            if (!p(occ)) {
                return false;
            }
        }
        return true;
    };
}

std::map<Occupation, SparseState> qibsim::split_modes(const SparseState &state, const ModePredicate &which) {
    std::map<Occupation, SparseState> parts;
    for (const auto &[occ, amp] : state.terms()) {
        Occupation kept;
        Occupation removed;
        for (const auto &[mode, n] : occ) {
            (which(mode) ? removed : kept).add(mode, n);
        }
        auto it = parts.try_emplace(removed, state.cutoff()).first;
        it->second.accumulate(kept, amp);
    }
    return parts;
}

namespace {

bool proportional(const SparseState &a, const SparseState &b) {
    double na = a.norm_squared();
    double nb = b.norm_squared();
    return std::norm(a.inner(b)) >= na * nb * (1 - 1e-12);
}

}  // namespace

std::optional<SparseState> qibsim::try_remove_modes(const SparseState &state, const ModePredicate &which) {
    auto parts = split_modes(state, which);
    if (parts.empty()) {
        return SparseState(state.cutoff());
    }
    const SparseState &first = parts.begin()->second;
    for (const auto &[removed, rest] : parts) {
        if (!proportional(first, rest)) {
            return std::nullopt;
        }
    }
    double n_first = first.norm_squared();
    if (!(n_first > 0)) {
        return SparseState(state.cutoff());
    }
    return first.scaled(std::sqrt(state.norm_squared() / n_first));
}

double qibsim::fidelity(const SparseState &state, const SparseState &target) {
    if (state.spatial_modes_excluding_env() != target.spatial_modes_excluding_env()) {
        throw std::invalid_argument("fidelity: states live on different modes");
    }
    return std::norm(target.inner(state));
}

double qibsim::traced_fidelity(const SparseState &state, const SparseState &target) {
    for (const auto &t : target.terms()) {
        for (const auto &e : t.first) {
            if (e.first.port == Port::Env) {
                throw std::invalid_argument("traced_fidelity: target holds environment photons");
            }
        }
    }
    if (state.spatial_modes_excluding_env() != target.spatial_modes_excluding_env()) {
        throw std::invalid_argument("fidelity: states live on different modes");
    }
    double total = 0;
    for (const auto &[env, rest] : split_modes(state, [](const ModeLabel &m) { return m.port == Port::Env; })) {
        total += std::norm(target.inner(rest));
    }
    return total;
}

SparseState qibsim::compress_environment(const SparseState &state) {
    auto parts = split_modes(state, [](const ModeLabel &m) { return m.port == Port::Env; });
    // Each group keeps one representative direction and the summed weight of its members.
    std::vector<std::pair<SparseState, double>> groups;
    std::optional<SparseState> unlost;
    for (auto &[env, rest] : parts) {
        if (env.empty()) {
            unlost = rest;
            continue;
        }
        double w = rest.norm_squared();
        bool merged = false;
        for (auto &[rep, weight] : groups) {
            if (proportional(rep, rest)) {
                weight += w;
                merged = true;
                break;
            }
        }
        if (!merged && w > 0) {
            groups.emplace_back(rest.scaled(1 / std::sqrt(w)), w);
        }
    }
    SparseState out(state.cutoff());
    if (unlost.has_value()) {
        for (const auto &[occ, amp] : unlost->terms()) {
            out.accumulate(occ, amp);
        }
    }
    for (std::size_t g = 0; g < groups.size(); g++) {
        const auto &[rep, weight] = groups[g];
        ModeLabel marker = ModeLabel::env(static_cast<std::int32_t>(g), Pol::H);
        double scale = std::sqrt(weight);
        for (const auto &[occ, amp] : rep.terms()) {
            Occupation tagged = occ;
            tagged.add(marker, 1);
            out.accumulate(tagged, amp * scale);
        }
    }
    return out.pruned();
}
