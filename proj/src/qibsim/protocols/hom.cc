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


#include "qibsim/protocols/hom.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace qibsim;

namespace {

/// The photon from bin 0 after storage, sitting in From(storage_bins).
SparseState stored_photon(const SourceModel &source, const QibConfig &config, int storage_bins) {
    SparseState s = emit_heralded(SparseState::vacuum(), source, 0, PairKind::Horizontal);
    s = qib_step(s, QibFunction::StoreRelease, config, 0);
    s = compress_environment(s);
    for (std::int32_t t = 1; t < storage_bins; t++) {
        s = qib_step(s, QibFunction::Buffer, config, t);
        s = compress_environment(s);
    }
    return s;
}

double coincidence_after_storage(
    const SparseState &stored, const SourceModel &source, const QibConfig &config, std::int32_t t, double delay) {
    SparseState s = emit_heralded(stored, source, t, PairKind::Horizontal, hom_delay_overlap(delay));
    s = apply_jones(s, WavePlate::half(degrees(45)).jones(), {t, Port::In});
    s = qib_step(s, QibFunction::Interfere, config, t);
    const SpatialMode out{t, Port::Out};
    s = apply_jones(s, WavePlate::half(degrees(22.5)).jones(), out);
    double p = 0;
    for (const auto &[occ, amp] : s.terms()) {
        if (occ.count_in(out, Pol::H) >= 1 && occ.count_in(out, Pol::V) >= 1) {
            p += std::norm(amp);
        }
    }
    return p;
}

void check_storage(int storage_bins) {
    if (storage_bins < 1) {
        throw std::invalid_argument("storage time must be at least one roundtrip");
    }
}

}  // namespace

std::vector<double> qibsim::default_hom_delays() {
    std::vector<double> out;
    for (int k = -16; k <= 16; k++) {
        out.push_back(0.25 * k);
    }
    return out;
}

double qibsim::hom_delay_overlap(double delay) {
    return std::exp(-delay * delay);
}

double qibsim::hom_coincidence(const SourceModel &source, const QibConfig &config, int storage_bins, double delay) {
    return hom_experiment(source, config, storage_bins, {delay}).coincidences.front();
}

HomResult qibsim::hom_experiment(const SourceModel &source, const QibConfig &config, int storage_bins) {
    return hom_experiment(source, config, storage_bins, default_hom_delays());
}

HomResult qibsim::hom_experiment(
    const SourceModel &source, const QibConfig &config, int storage_bins, const std::vector<double> &delays) {
    check_storage(storage_bins);
    if (delays.empty()) {
        throw std::invalid_argument("no delays to scan");
    }
    source.validate();
    config.validate();
    SparseState stored = stored_photon(source, config, storage_bins);
    HomResult result;
    result.delays = delays;
    for (double d : delays) {
        if (!std::isfinite(d)) {
            throw std::invalid_argument("delay must be finite");
        }
        result.coincidences.push_back(coincidence_after_storage(stored, source, config, storage_bins, d));
    }
    auto [lo, hi] = std::minmax_element(result.coincidences.begin(), result.coincidences.end());
    result.visibility = *hi > 0 ? (*hi - *lo) / *hi : 0;
    return result;
}

double qibsim::calibrate_hom_overlap(const SourceModel &source, const QibConfig &config, double target_visibility) {
    if (!(target_visibility >= 0 && target_visibility <= 1)) {
        throw std::domain_error("target visibility must lie in [0, 1]");
    }
    // The default scan, so the calibrated overlap reproduces the reported visibility exactly.
    const std::vector<double> probe = default_hom_delays();
    auto visibility_at = [&](double overlap) {
        SourceModel s = source;
        s.mode_overlap = overlap;
        return hom_experiment(s, config, 1, probe).visibility;
    };
    double lo = 0;
    double hi = 1;
    double v_lo = visibility_at(lo);
    double v_hi = visibility_at(hi);
    if (target_visibility < v_lo - 1e-12 || target_visibility > v_hi + 1e-12) {
        throw std::domain_error("target visibility is outside the reachable range");
    }
    for (int i = 0; i < 60; i++) {
        double mid = 0.5 * (lo + hi);
        if (visibility_at(mid) < target_visibility) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}
