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

#ifndef _QIBSIM_STATEVEC_SPARSE_STATE_H
#define _QIBSIM_STATEVEC_SPARSE_STATE_H

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qibsim/statevec/mode.h"

namespace qibsim {

using Amplitude = std::complex<double>;

/// Photon numbers per mode. Absent modes hold zero photons; zeros are never stored.
class Occupation {
   public:
    using Entry = std::pair<ModeLabel, std::uint32_t>;

    Occupation() = default;
    Occupation(std::initializer_list<ModeLabel> photons);

    std::uint32_t count(const ModeLabel &mode) const;
    std::uint32_t count_in(SpatialMode spatial) const;
    std::uint32_t count_in(SpatialMode spatial, Pol pol) const;
    std::uint32_t total() const;
    bool empty() const {
        return entries_.empty();
    }

    /// Adds `delta` photons to `mode`. Throws if the count would become negative.
    void add(const ModeLabel &mode, std::int64_t delta = 1);

    const std::vector<Entry> &entries() const {
        return entries_;
    }
    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

    auto operator<=>(const Occupation &) const = default;
    std::string str() const;

   private:
    std::vector<Entry> entries_;
};

/// Superposition of photon-number configurations.
///
/// Values are treated as immutable once built: every optical element returns a new state.
/// `accumulate` exists for construction. Terms whose amplitude magnitude falls below the cutoff
/// are dropped by `pruned()`, which the elements call after acting.
class SparseState {
   public:
    static constexpr double kDefaultCutoff = 1e-15;

    explicit SparseState(double cutoff = kDefaultCutoff);

    static SparseState vacuum(double cutoff = kDefaultCutoff);
    static SparseState basis(const Occupation &occupation, Amplitude amplitude = 1.0);
    static SparseState from_terms(std::initializer_list<std::pair<Occupation, Amplitude>> terms);

    const std::map<Occupation, Amplitude> &terms() const {
        return terms_;
    }
    double cutoff() const {
        return cutoff_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    void accumulate(const Occupation &occupation, Amplitude amplitude);

    Amplitude amplitude(const Occupation &occupation) const;
    double norm_squared() const;

    /// <this|other>.
    Amplitude inner(const SparseState &other) const;

    SparseState scaled(Amplitude factor) const;
    /// Throws std::domain_error on a zero-norm state.
    SparseState normalized() const;
    SparseState pruned() const;
    SparseState with_cutoff(double cutoff) const;

    std::set<SpatialMode> spatial_modes() const;
    std::set<SpatialMode> spatial_modes_excluding_env() const;
    /// One past the largest environment index in use, or 0.
    std::int32_t next_env_index() const;

    std::string str() const;

   private:
    std::map<Occupation, Amplitude> terms_;
    double cutoff_;
};

SparseState operator+(const SparseState &a, const SparseState &b);

}  // namespace qibsim

#endif
