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


#include "qibsim/montecarlo/rng.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace qibsim;

TEST(splitmix64, reference_sequence) {
    // First outputs of SplitMix64 seeded with 0, as published with the algorithm.
    SplitMix64 r(0);
    ASSERT_EQ(r.next(), 0xe220a8397b1dcdafULL);
    ASSERT_EQ(r.next(), 0x6e789e6aa1b965f4ULL);
    ASSERT_EQ(r.next(), 0x06c45d188009454fULL);
}

TEST(splitmix64, trial_streams_are_deterministic_and_distinct) {
    ASSERT_EQ(SplitMix64::for_trial(5, 9).next(), SplitMix64::for_trial(5, 9).next());
    std::set<std::uint64_t> firsts;
    for (std::uint64_t seed = 0; seed < 4; seed++) {
        for (std::uint64_t t = 0; t < 1000; t++) {
            firsts.insert(SplitMix64::for_trial(seed, t).next());
        }
    }
    ASSERT_EQ(firsts.size(), 4000u);
}

TEST(splitmix64, uniform_ranges) {
    SplitMix64 r(1);
    double sum = 0;
    for (int i = 0; i < 100000; i++) {
        double u = r.uniform();
        double v = r.uniform_open_below();
        ASSERT_GE(u, 0);
        ASSERT_LT(u, 1);
        ASSERT_GT(v, 0);
        ASSERT_LE(v, 1);
        sum += u;
    }
    ASSERT_NEAR(sum / 100000, 0.5, 4 * std::sqrt(1.0 / 12 / 100000));
}

TEST(splitmix64, geometric_moments) {
    SplitMix64 r(2);
    for (double p : {0.5, 0.1, 0.01}) {
        const int n = 200000;
        double sum = 0;
        int ones = 0;
        for (int i = 0; i < n; i++) {
            auto k = r.geometric(p);
            ASSERT_GE(k, 1u);
            sum += static_cast<double>(k);
            ones += k == 1;
        }
        double sigma_mean = std::sqrt((1 - p) / (p * p) / n);
        ASSERT_NEAR(sum / n, 1 / p, 4 * sigma_mean) << p;
        ASSERT_NEAR(ones / double(n), p, 4 * std::sqrt(p * (1 - p) / n)) << p;
    }
    ASSERT_EQ(r.geometric(1), 1u);
    ASSERT_THROW(r.geometric(0), std::invalid_argument);
}
