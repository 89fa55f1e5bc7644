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

#ifndef _QIBSIM_STATEVEC_ELEMENTS_H
#define _QIBSIM_STATEVEC_ELEMENTS_H

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qibsim/statevec/sparse_state.h"

namespace qibsim {

/// 2x2 polarization transfer matrix in the (H, V) basis. `m[out][in]`.
struct JonesMatrix {
    std::array<std::array<Amplitude, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

    static JonesMatrix identity() {
        return {};
    }
    /// Real rotation taking H to cos(a) H + sin(a) V.
    static JonesMatrix rotation(double angle);

    Amplitude operator()(Pol out, Pol in) const {
        return m[static_cast<int>(out)][static_cast<int>(in)];
    }
    JonesMatrix operator*(const JonesMatrix &rhs) const;
    JonesMatrix adjoint() const;
    bool is_unitary(double tolerance = 1e-12) const;
};

struct WavePlate {
    enum class Kind { Half, Quarter };

    Kind kind = Kind::Half;
    /// Fast-axis angle from H, radians.
    double angle = 0;

    static WavePlate half(double angle_rad) {
        return {Kind::Half, angle_rad};
    }
    static WavePlate quarter(double angle_rad) {
        return {Kind::Quarter, angle_rad};
    }

    /// Half: [[cos 2a, sin 2a], [sin 2a, -cos 2a]]. Quarter: R(a) diag(1, i) R(-a).
    /// Throws std::invalid_argument for a non-finite angle.
    JonesMatrix jones() const;
};

double degrees(double deg);

/// Single-photon image of a mode under a passive linear transformation.
using ModeImage = std::vector<std::pair<ModeLabel, Amplitude>>;
/// Returns nullopt for modes the transformation leaves alone.
using ModeTransform = std::function<std::optional<ModeImage>(const ModeLabel &)>;

/// Applies a linear map on creation operators, a†_m -> sum_k c_k a†_k, to every term.
///
/// The caller guarantees the images of the transformed modes form an isometry on the modes
/// the state actually occupies.
SparseState apply_linear(const SparseState &state, const ModeTransform &transform);

/// Polarization element on every internal label of `target`.
SparseState apply_jones(const SparseState &state, const JonesMatrix &jones, SpatialMode target);
SparseState apply_waveplate(const SparseState &state, const WavePlate &plate, SpatialMode target);

/// Polarizing beam splitter between ports `a` and `b`: H keeps its port, V swaps.
SparseState apply_pbs(const SparseState &state, SpatialMode a, SpatialMode b);

/// Beam splitter of intensity transmission `transmission` coupling `mode` to the environment
/// register `env_index`. Polarization and internal label are kept by the lost photon.
SparseState apply_loss(const SparseState &state, SpatialMode mode, double transmission, std::int32_t env_index);
/// Same as apply_loss with a freshly allocated environment index.
SparseState apply_loss(const SparseState &state, SpatialMode mode, double transmission);

/// Moves photons between equally shaped modes. `relabel` must be injective on occupied modes.
SparseState relabel(const SparseState &state, const std::function<ModeLabel(const ModeLabel &)> &relabel);
SparseState move_spatial(const SparseState &state, SpatialMode from, SpatialMode to);

/// Product of creation operators weighted by an amplitude.
struct CreationMonomial {
    Amplitude coefficient = 1.0;
    std::vector<ModeLabel> modes;
};
/// Applies sum_i c_i prod_j a†_{m_ij} to the state (not normalized).
SparseState apply_creation(const SparseState &state, const std::vector<CreationMonomial> &polynomial);

using OccupationPredicate = std::function<bool(const Occupation &)>;

/// Keeps only the matching terms, without renormalizing. The squared norm of the result is the
/// probability of the event times the squared norm of the input.
SparseState project(const SparseState &state, const OccupationPredicate &predicate);

struct PostSelection {
    /// Normalized conditional state; empty when `probability` is zero.
    SparseState state;
    double probability = 0;

    bool succeeded() const {
        return probability > 0;
    }
};
/// `probability` = sum of |amplitude|^2 over matching terms.
PostSelection post_select(const SparseState &state, const OccupationPredicate &predicate);

OccupationPredicate photons_in_equal(SpatialMode mode, std::uint32_t count);
OccupationPredicate no_env_photons();
OccupationPredicate all_of(std::vector<OccupationPredicate> predicates);

using ModePredicate = std::function<bool(const ModeLabel &)>;

/// Splits every term into the photons in modes matching `which` and the rest, grouping the rest
/// by the occupation of the matching modes. Entry r of the result holds the unnormalized
/// component of the rest that accompanies matching-mode occupation r.
std::map<Occupation, SparseState> split_modes(const SparseState &state, const ModePredicate &which);

/// Drops the modes matching `which` when they are in a product state with the rest, keeping the
/// squared norm. Returns nullopt when they are entangled with the rest (relative tolerance 1e-12).
std::optional<SparseState> try_remove_modes(const SparseState &state, const ModePredicate &which);

/// |<target|state>|^2. Throws std::invalid_argument when the non-environment spatial modes
/// differ.
double fidelity(const SparseState &state, const SparseState &target);

/// <target| Tr_env(|state><state|) |target> for a target without environment photons.
/// Equals `fidelity` when the state holds no environment photons.
double traced_fidelity(const SparseState &state, const SparseState &target);

/// Rewrites the environment so that branches whose system parts are proportional share one
/// environment configuration. The reduced state of the non-environment modes is unchanged.
/// Valid only while no element acts on the environment again, which no element does.
SparseState compress_environment(const SparseState &state);

}  // namespace qibsim

#endif
