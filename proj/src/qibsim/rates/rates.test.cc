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


#include "qibsim/rates/rates.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace qibsim;

namespace {

/// Series oracles, summed term by term in long double.
long double series_pN_lossy(long double p, long double eta, int M, int N) {
    long double inner = 0;
    long double wait = 1;
    for (int j = 0; j <= M; j++) {
        inner += p * wait * std::pow(eta, (long double)j);
        wait *= 1 - p;
    }
    return p * eta * eta * std::pow(eta * eta * inner, (long double)(N - 1));
}

long double series_mean_wait(long double p, int M) {
    long double num = 0;
    long double den = 0;
    for (int j = 0; j < M; j++) {
        long double w = std::pow(1 - p, (long double)j) * p;
        num += (j + 1) * w;
        den += w;
    }
    return num / den;
}

}  // namespace

TEST(rates, p2_lossless_examples) {
    ASSERT_NEAR(p2_lossless(0.1, 0), 0.01, 1e-16);
    ASSERT_NEAR(p2_lossless(0.1, 1), 0.1 * (0.1 + 0.9 * 0.1), 1e-16);
    double p = 1e-6;
    for (int M : {0, 5, 50}) {
        ASSERT_NEAR(p2_lossless(p, M) / (p * p * (M + 1)), 1, 1e-4);
    }
}

TEST(rates, pN_lossless_reductions) {
    ASSERT_DOUBLE_EQ(pN_lossless(0.3, 7, 1), 0.3);
    ASSERT_DOUBLE_EQ(pN_lossless(0.3, 7, 2), p2_lossless(0.3, 7));
    for (int M : {1, 10, 20}) {
        for (int N : {2, 3, 6}) {
            double p = 1e-8;
            ASSERT_NEAR(pN_lossless(p, M, N) / std::pow(p, N) / std::pow(M + 1.0, N - 1), 1, 1e-4);
        }
    }
}

TEST(rates, lossy_matches_series_oracle) {
    ASSERT_NEAR(pN_lossy(0.05, 0.9, 10, 2), (double)series_pN_lossy(0.05L, 0.9L, 10, 2), 1e-15);
    ASSERT_NEAR(pN_lossy(0.05, 0.9, 10, 2), 9.2932e-3, 1e-6);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 200; k++) {
        double p = u(rng), eta = u(rng);
        int M = static_cast<int>(u(rng) * 40), N = 1 + static_cast<int>(u(rng) * 5);
        double oracle = (double)series_pN_lossy(p, eta, M, N);
        ASSERT_NEAR(pN_lossy(p, eta, M, N), oracle, 1e-13 * std::max(oracle, 1e-300) + 1e-300) << p << " " << eta;
    }
}

TEST(rates, lossless_limit_of_lossy) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 100; k++) {
        double p = 0.001 + 0.998 * u(rng);
        int M = static_cast<int>(u(rng) * 60), N = 1 + static_cast<int>(u(rng) * 8);
        ASSERT_NEAR(pN_lossy(p, 1, M, N), pN_lossless(p, M, N), 1e-12);
    }
}

TEST(rates, unbounded_storage_limit) {
    for (double eta : {0.5, 0.9, 0.99}) {
        ASSERT_NEAR(pN_lossy(0.05, eta, 10000, 4) / pN_lossy_unbounded(0.05, eta, 4), 1, 1e-12);
    }
    ASSERT_THROW(pN_lossy_unbounded(0, 1, 3), std::domain_error);
}

TEST(rates, lossy_monotone_in_every_argument) {
    const double ps[] = {0.01, 0.1, 0.4, 0.9};
    const double etas[] = {0, 0.3, 0.62, 0.9, 1};
    for (int N = 1; N <= 4; N++) {
        for (double p : ps) {
            for (double eta : etas) {
                for (int M = 0; M < 30; M++) {
                    double here = pN_lossy(p, eta, M, N);
                    ASSERT_GE(here, 0);
                    ASSERT_LE(here, 1);
                    ASSERT_LE(here, pN_lossy(p, eta, M + 1, N) * (1 + 1e-14));
                    ASSERT_LE(here, pN_lossy(p, std::min(1.0, eta + 0.05), M, N) * (1 + 1e-14));
                    ASSERT_LE(here, pN_lossy(std::min(1.0, p + 0.05), eta, M, N) * (1 + 1e-14));
                }
            }
        }
    }
}

TEST(rates, buffering_never_hurts_against_plain_time_multiplexing) {
    for (double eta : {0.01, 0.3, 0.7, 1.0}) {
        for (double p : {0.01, 0.5, 0.99}) {
            for (int M : {1, 5, 40}) {
                for (int N : {2, 4}) {
                    ASSERT_GT(pN_lossy(p, eta, M, N) / (std::pow(p, N) * std::pow(eta, 2 * N)), 1);
                }
            }
        }
    }
}

TEST(rates, enhancement_counts_effective_sources) {
    for (double eta : {0.90, 0.917, 0.937}) {
        double oracle = 0;
        for (int j = 0; j <= 20; j++) {
            oracle += std::pow(eta, j);
        }
        double e = multiplexing_enhancement(1e-9, eta, 20, 2);
        ASSERT_NEAR(e / oracle, 1, 1e-7);
        ASSERT_GE(e, 8);
        ASSERT_LE(e, 12);
    }
    ASSERT_NEAR(multiplexing_enhancement(1e-8, 1, 20, 3), 21.0 * 21.0, 1e-4);
}

TEST(rates, enhancement_grows_with_pairs_above_threshold) {
    for (double eta : {0.7, 0.9}) {
        double previous = 1;
        for (int N = 2; N <= 8; N++) {
            double e = multiplexing_enhancement(1e-3, eta, 30, N);
            ASSERT_GT(e, previous);
            previous = e;
        }
    }
}

TEST(rates, threshold) {
    ASSERT_NEAR(eta_threshold(0), (std::sqrt(5.0) - 1) / 2, 1e-15);
    ASSERT_NEAR(eta_threshold(1e-12), 0.6180339887, 1e-9);
    ASSERT_DOUBLE_EQ(eta_threshold(1), 1);
    const double p = 1e-3;
    const int N = 20;
    double th = eta_threshold(p);
    ASSERT_GT(pN_lossy(p, th + 0.02, 100000, N), std::pow(p, N));
    ASSERT_LT(pN_lossy(p, th - 0.02, 100000, N), std::pow(p, N));
}

TEST(rates, p1_examples) {
    ASSERT_DOUBLE_EQ(p1(0.3, 1), 0.3);
    ASSERT_EQ(p1(0.3, 0), 0);
    ASSERT_NEAR(p1(0.05, 10), 1 - std::pow(0.95, 10), 1e-15);
    ASSERT_NEAR(p1(0.05, 10), 0.4013, 1e-4);
}

TEST(rates, mean_wait_matches_series) {
    ASSERT_EQ(mean_wait(1, 7), 1);
    ASSERT_NEAR(mean_wait(0.3, 1), 1, 1e-15);
    for (double p : {1e-9, 1e-5, 0.01, 0.1, 0.5, 0.99}) {
        for (int M : {1, 2, 10, 60, 500}) {
            ASSERT_NEAR(mean_wait(p, M) / (double)series_mean_wait(p, M), 1, 1e-11) << p << " " << M;
        }
    }
    ASSERT_THROW(mean_wait(0.1, 0), std::invalid_argument);
    ASSERT_THROW(mean_wait(0, 3), std::invalid_argument);
}

TEST(rates, waiting_times) {
    ASSERT_NEAR(t_tm(1e-6, 4), 1, 1e-5);
    ASSERT_DOUBLE_EQ(t_tm(1, 3), 3);
    for (int N = 1; N <= 5; N++) {
        ASSERT_NEAR(t_qib(1, 10, N), N, 1e-12);
        for (double p : {0.01, 0.2, 0.7}) {
            for (int M : {0, 1, 10}) {
                ASSERT_GE(t_qib(p, M, N), 1 / p);
            }
        }
    }
    // N = 2 by hand: 1/p + M (1 - P1) + P1 <M>.
    double P1 = p1(0.1, 10);
    ASSERT_NEAR(t_qib(0.1, 10, 2), 10 + 10 * (1 - P1) + P1 * mean_wait(0.1, 10), 1e-12);
    ASSERT_THROW(t_qib(0, 3, 2), std::invalid_argument);
}

TEST(rates, rate_formulas) {
    ASSERT_DOUBLE_EQ(rate_qib(RateParams{1, 1, 5, 1, 76e6}), 76e6);
    ASSERT_DOUBLE_EQ(rate_spatial(1, 0.1, 2), 0.01 * 1.0000000000000002 / 1.0000000000000002);
    ASSERT_NEAR(rate_spatial(1, 0.1, 2), 0.01, 1e-17);
    ASSERT_NEAR(rate_tm(5, 0.2, 1, 3), rate_spatial(5, 0.2, 3) / t_tm(0.2, 3), 1e-15);
    RateParams params{0.05, 0.9, 10, 2, 1};
    ASSERT_NEAR(
        renewal_rate_qib(params), pN_lossy(0.05, 0.9, 10, 2) / 0.05 / t_qib(0.05, 11, 2), 1e-15);
    ASSERT_GT(rate_qib_lossless(RateParams{0.05, 1, 10, 3, 1}), 0);
    ASSERT_THROW(rate_qib(RateParams{0, 0.9, 10, 2, 1}), std::invalid_argument);
    ASSERT_THROW(rate_qib(RateParams{0.1, 1.1, 10, 2, 1}), std::invalid_argument);
}

TEST(rates, rate_enhancement_over_spatial_grows_with_pairs) {
    double previous = 0;
    for (int N = 2; N <= 6; N++) {
        double gain = optimize_M(0.01, 0.917, N, 1).rate / rate_spatial(1, 0.01, N);
        ASSERT_GT(gain, previous) << N;
        previous = gain;
    }
}

TEST(rates, optimal_depth) {
    OptimizedDepth operating_point = optimize_M(0.01, 0.91, 4, 1);
    ASSERT_GE(operating_point.M, 10);
    ASSERT_LE(operating_point.M, 60);
    // Below threshold buffering still beats M = 0, but no depth reaches the spatial rate.
    OptimizedDepth lossy = optimize_M(0.01, 0.3, 10, 1);
    ASSERT_LT(lossy.rate, rate_spatial(1, 0.01, 10));
    ASSERT_GT(lossy.rate, rate_qib(RateParams{0.01, 0.3, 0, 10, 1}));
    OptimizedDepth lossless = optimize_M(0.2, 1, 3, 1, 0, 60);
    for (int M = 0; M < 60; M++) {
        ASSERT_LE(rate_qib(RateParams{0.2, 1, M, 3, 1}), lossless.rate);
    }
    OptimizedDepth capped = optimize_M(0.01, 0.91, 4, 1, 0, 5);
    ASSERT_EQ(capped.M, 5);
    ASSERT_THROW(optimize_M(0.01, 0.9, 2, 1, 4, 3), std::invalid_argument);
}

TEST(rates, equal_rate_pair_probability) {
    auto one = equal_rate_pair_probability(0.01, 0.9, 1);
    ASSERT_DOUBLE_EQ(one.p_qib, 0.01 / 0.81);
    ASSERT_DOUBLE_EQ(one.p_tm, 0.01 / 0.81);
    auto ideal = equal_rate_pair_probability(0.01, 1, 3);
    ASSERT_NEAR(ideal.p_qib, std::pow(0.01, 3), 1e-12 * std::pow(0.01, 3));
    ASSERT_LT(ideal.p_qib, 0.01);
    for (double eta : {0.7, 0.9}) {
        auto r = equal_rate_pair_probability(1e-3, eta, 20);
        ASSERT_LT(r.p_qib, 1e-3);
        ASSERT_GT(r.iterations, 0);
        double p = r.p_qib;
        ASSERT_NEAR(r.p_tm * std::pow(1 - (1 - p) * eta, 19.0 / 20.0), p, 1e-12 * p);
        auto fixed = equal_rate_pair_probability(1e-3, eta, 20, false);
        ASSERT_EQ(fixed.iterations, 0);
        ASSERT_NEAR(fixed.p_qib, r.p_tm * std::pow(1 - (1 - 1e-3) * eta, 19.0 / 20.0), 1e-18);
    }
}
