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


#include "qibsim/protocols/ghz.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qibsim/protocols/result.h"

using namespace qibsim;

TEST(build_ghz, ideal_fidelity_and_probability) {
    for (int n = 2; n <= 4; n++) {
        ProtocolResult r = build_ghz(n, SourceModel{}, QibConfig::ideal());
        ASSERT_EQ(r.photon_count, 2 * n);
        ASSERT_EQ(r.qubit_modes.size(), static_cast<std::size_t>(2 * n));
        ASSERT_NEAR(r.success_probability, std::pow(0.5, n - 1), 1e-14) << n;
        GhzOverlap o = ghz_overlap(r.final_state, r.qubit_modes);
        ASSERT_NEAR(o.fidelity, 1, 1e-10) << n;
        ASSERT_NEAR(fidelity(r.final_state, ghz_target(r.qubit_modes, o.phase)), 1, 1e-10);
    }
}

TEST(build_ghz, two_pair_state_is_literal) {
    ProtocolResult r = build_ghz(2, SourceModel{}, QibConfig::ideal());
    ASSERT_NEAR(fidelity(r.final_state, ghz_target(r.qubit_modes, 0)), 1, 1e-12);
    ASSERT_EQ(r.schedule.size(), 3u);
    ASSERT_EQ(r.schedule[0].second, QibFunction::StoreRelease);
    ASSERT_EQ(r.schedule[1].second, QibFunction::Interfere);
    ASSERT_EQ(r.schedule[2].second, QibFunction::StoreRelease);
}

TEST(build_ghz, phase_is_reported_not_forced) {
    SourceModel source;
    source.bell_phase = 0.3;
    ProtocolResult r = build_ghz(2, source, QibConfig::ideal());
    GhzOverlap o = ghz_overlap(r.final_state, r.qubit_modes);
    ASSERT_NEAR(o.fidelity, 1, 1e-10);
    ASSERT_NEAR(std::remainder(o.phase - 0.6, 2 * M_PI), 0, 1e-9);
}

TEST(build_ghz, loss_scales_probability_with_waiting_time) {
    QibConfig lossy = QibConfig::ideal();
    lossy.roundtrip_transmission = 0.9;
    for (int gap = 1; gap <= 4; gap++) {
        double ideal = build_ghz(2, SourceModel{}, QibConfig::ideal(), {gap}).success_probability;
        ProtocolResult r = build_ghz(2, SourceModel{}, lossy, {gap});
        ASSERT_NEAR(r.success_probability / ideal, std::pow(0.9, gap + 3), 1e-12) << gap;
        ASSERT_NEAR(ghz_overlap(r.final_state, r.qubit_modes).fidelity, 1, 1e-10);
    }
}

TEST(build_ghz, gaps_lengthen_schedule) {
    ProtocolResult r = build_ghz(3, SourceModel{}, QibConfig::ideal(), {2, 3});
    ASSERT_EQ(r.schedule.size(), 7u);
    ASSERT_EQ(r.schedule[2].second, QibFunction::Interfere);
    ASSERT_EQ(r.schedule[3].second, QibFunction::Buffer);
    ASSERT_EQ(r.schedule[5].second, QibFunction::Interfere);
    ASSERT_NEAR(r.success_probability, 0.25, 1e-14);
}

TEST(build_ghz, rejects_bad_inputs) {
    ASSERT_THROW(build_ghz(1, SourceModel{}, QibConfig::ideal()), std::invalid_argument);
    ASSERT_THROW(build_ghz(3, SourceModel{}, QibConfig::ideal(), {1}), std::invalid_argument);
    ASSERT_THROW(build_ghz(2, SourceModel{}, QibConfig::ideal(), {0}), std::invalid_argument);
}

TEST(build_ghz, multipair_emission_needs_loss_to_pass_post_selection) {
    SourceModel source;
    source.pair_probability = 0.05;
    source.multipair = Multipair::TwoModeSqueezedTruncated;
    // Without loss every signal photon reaches an output, so extra pairs fail post-selection.
    ProtocolResult clean = build_ghz(2, source, QibConfig::ideal());
    ASSERT_NEAR(ghz_overlap(clean.final_state, clean.qubit_modes).fidelity, 1, 1e-10);

    QibConfig lossy = QibConfig::ideal();
    lossy.roundtrip_transmission = 0.9;
    ProtocolResult r = build_ghz(2, source, lossy);
    double f = ghz_overlap(r.final_state, r.qubit_modes).fidelity;
    ASSERT_LT(f, 1 - 1e-3);
    ASSERT_GT(f, 0.8);
    SourceModel single = source;
    single.multipair = Multipair::None;
    ASSERT_NEAR(ghz_overlap(build_ghz(2, single, lossy).final_state, r.qubit_modes).fidelity, 1, 1e-10);
}

TEST(build_ghz, misaligned_quarter_wave_plate_lowers_fidelity) {
    QibConfig config = QibConfig::ideal();
    config.qwp_angle_error = degrees(0.27);
    double f1 = ghz_overlap(build_ghz(2, SourceModel{}, config, {1}).final_state,
                            build_ghz(2, SourceModel{}, config, {1}).qubit_modes).fidelity;
    ProtocolResult far = build_ghz(2, SourceModel{}, config, {20});
    double f20 = ghz_overlap(far.final_state, far.qubit_modes).fidelity;
    ASSERT_LT(f1, 1);
    ASSERT_LT(f20, f1);
}

TEST(result_json, state_round_trips) {
    SourceModel source;
    source.bell_phase = 0.7;
    ProtocolResult r = build_ghz(2, source, QibConfig::ideal());
    SparseState back = state_from_json(state_to_json(r.final_state));
    ASSERT_EQ(back.size(), r.final_state.size());
    ASSERT_NEAR(std::abs(back.inner(r.final_state)), 1, 1e-15);
    nlohmann::json j = result_to_json(r);
    ASSERT_NEAR(j["success_probability"].get<double>(), 0.5, 1e-15);
    ASSERT_THROW(state_from_json(nlohmann::json::parse(R"([{"re": 1}])")), std::invalid_argument);
}
