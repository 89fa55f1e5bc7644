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


#include "qibsim/montecarlo/trials.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace qibsim;

namespace {

TrialConfig config_for(double p, double eta, int M, int N, std::uint64_t trials, std::uint64_t seed = 1) {
    TrialConfig c;
    c.params = RateParams{p, eta, M, N, 1};
    c.n_trials = trials;
    c.rng_seed = seed;
    return c;
}

/// Standard error of `p` times a proportion under the analytic value.
double conditional_sigma(double p, double p_n, std::uint64_t trials) {
    double s = p_n / p;
    return p * std::sqrt(s * (1 - s) / static_cast<double>(trials));
}

}  // namespace

TEST(run_trials, certain_pairs_without_loss) {
    for (int N = 1; N <= 4; N++) {
        MonteCarloSummary s = run_trials(config_for(1, 1, 3, N, 1000));
        ASSERT_EQ(s.p_n.value, 1);
        ASSERT_EQ(s.first_wait.value, 1);
        ASSERT_EQ(s.attempt_length.value, N);
        if (N > 1) {
            ASSERT_EQ(s.pair_wait.value, 1);
        }
    }
}

TEST(run_trials, no_transmission_no_success) {
    MonteCarloSummary s = run_trials(config_for(0.3, 0, 5, 2, 10000));
    ASSERT_EQ(s.tally.successes, 0u);
    ASSERT_EQ(s.p_n.value, 0);
}

TEST(run_trials, two_pair_probability_matches_formula) {
    MonteCarloSummary s = run_trials(config_for(0.05, 0.9, 10, 2, 400000, 42));
    double expected = pN_lossy(0.05, 0.9, 10, 2);
    ASSERT_EQ(s.analytic_p_n, expected);
    double sigma = std::sqrt(expected * (1 - expected) / 400000);
    ASSERT_NEAR(s.p_n.value, expected, 3 * sigma);
    ASSERT_LE(s.p_n.lower, s.p_n.value);
    ASSERT_GE(s.p_n.upper, s.p_n.value);
    ASSERT_NEAR(s.rate.value, s.analytic_rate, 3 * s.rate.sigma);
    ASSERT_NEAR(s.attempt_length.value, s.analytic_attempt_length, 3 * s.attempt_length.sigma);
}

TEST(run_trials, grid_agrees_with_formulas) {
    int beyond_two_sigma = 0;
    for (double p : {0.01, 0.05, 0.2}) {
        for (double eta : {0.7, 0.9}) {
            for (auto [M, N] : {std::pair{5, 2}, std::pair{20, 3}}) {
                MonteCarloSummary s = run_trials(config_for(p, eta, M, N, 200000, 7));
                double sigma = conditional_sigma(p, s.analytic_p_n, s.tally.trials);
                double z = std::abs(s.p_n_conditional.value - s.analytic_p_n) / sigma;
                ASSERT_LT(z, 3) << p << " " << eta << " " << M;
                ASSERT_NEAR(s.pair_wait.value, s.analytic_pair_wait, 3 * s.pair_wait.sigma) << p << " " << eta;
                ASSERT_NEAR(s.first_wait.value, s.analytic_first_wait, 3 * s.first_wait.sigma);
                beyond_two_sigma += z > 2;
            }
        }
    }
    ASSERT_LE(beyond_two_sigma, 1);
}

TEST(run_trials, more_storage_never_lowers_success) {
    double previous = 0;
    double previous_sigma = 0;
    for (int M = 0; M <= 12; M += 2) {
        MonteCarloSummary s = run_trials(config_for(0.05, 0.9, M, 3, 100000, 9));
        ASSERT_GE(s.p_n_conditional.value + 3 * std::hypot(s.p_n_conditional.sigma, previous_sigma), previous);
        previous = s.p_n_conditional.value;
        previous_sigma = s.p_n_conditional.sigma;
    }
}

TEST(run_trials, independent_of_thread_count) {
    TrialConfig c = config_for(0.1, 0.8, 6, 3, 30001, 5);
    c.threads = 1;
    MonteCarloSummary one = run_trials(c);
    c.threads = 3;
    MonteCarloSummary three = run_trials(c);
    ASSERT_TRUE(one.tally == three.tally);
    TrialTally manual;
    for (std::uint64_t k = 0; k < c.n_trials; k++) {
        manual.add(run_trial(c, k));
    }
    ASSERT_TRUE(manual == one.tally);
    c.rng_seed = 6;
    ASSERT_FALSE(run_trials(c).tally == one.tally);
}

TEST(run_trials, sampled_post_selection_scales_success) {
    TrialConfig c = config_for(0.2, 0.95, 8, 3, 200000, 3);
    c.sample_postselection = true;
    c.detector_efficiency = 0.9;
    MonteCarloSummary s = run_trials(c);
    double factor = 0.25 * std::pow(0.9, 6);
    ASSERT_NEAR(s.analytic_p_n, factor * pN_lossy(0.2, 0.95, 8, 3), 1e-15);
    ASSERT_NEAR(s.p_n_conditional.value, s.analytic_p_n, 3 * conditional_sigma(0.2, s.analytic_p_n, c.n_trials));
}

TEST(run_trials, dark_counts_only_hurt) {
    TrialConfig c = config_for(0.05, 0.9, 10, 2, 100000, 4);
    double clean = run_trials(c).success.value;
    c.dark_count_probability = 0.05;
    MonteCarloSummary dark = run_trials(c);
    ASSERT_LT(dark.success.value, clean);
    ASSERT_LT(dark.first_wait.value, 1 / 0.05);
}

TEST(run_trials, restart_and_block_variants) {
    TrialConfig c = config_for(0.05, 0.9, 4, 3, 50000, 8);
    c.per_pair_restart = true;
    MonteCarloSummary restart = run_trials(c);
    ASSERT_EQ(restart.tally.pair_count, 2 * c.n_trials);
    c.per_pair_restart = false;
    c.relative_multiplexing = false;
    MonteCarloSummary blocks = run_trials(c);
    for (std::uint64_t k = 0; k < 200; k++) {
        TrialOutcome o = run_trial(c, k);
        if (o.complete) {
            ASSERT_EQ(o.pulses_elapsed, o.first_wait + 2 * 5);
        }
    }
    ASSERT_LT(blocks.success.value, run_trials(config_for(0.05, 0.9, 4, 3, 50000, 8)).success.value);
}

TEST(run_trials, switch_rate_caps_rate) {
    TrialConfig c = config_for(1, 1, 1, 2, 100);
    c.params.f = 76e6;
    c.max_switch_rate = 1e5;
    MonteCarloSummary s = run_trials(c);
    ASSERT_EQ(s.rate.value, 1e5);
    ASSERT_EQ(s.analytic_rate, 1e5);
}

TEST(run_trials, rejects_bad_config) {
    TrialConfig c = config_for(0.1, 0.9, 3, 2, 0);
    ASSERT_THROW(run_trials(c), std::invalid_argument);
    c.n_trials = 10;
    c.dark_count_probability = 1;
    ASSERT_THROW(run_trials(c), std::invalid_argument);
}

TEST(wilson_proportion, known_interval) {
    Proportion w = wilson_proportion(5, 10);
    ASSERT_NEAR(w.lower, 0.2365931, 1e-6);
    ASSERT_NEAR(w.upper, 0.7634069, 1e-6);
    Proportion zero = wilson_proportion(0, 100);
    ASSERT_EQ(zero.lower, 0);
    ASSERT_GT(zero.upper, 0.03);
    ASSERT_THROW(wilson_proportion(3, 2), std::invalid_argument);
}

TEST(waiting_time_histogram, first_pair_is_geometric) {
    WaitingTimeHistogram h = waiting_time_histogram(config_for(0.5, 1, 3, 2, 100000));
    double n = 0, sum = 0;
    for (auto [w, c] : h.first_wait) {
        n += c;
        sum += double(w) * c;
    }
    ASSERT_NEAR(sum / n, 2, 3 * std::sqrt(2.0 / n));
    ASSERT_NEAR(h.first_wait[1] / n, 0.5, 3 * std::sqrt(0.25 / n));
}

TEST(waiting_time_histogram, attempt_length_matches_formula) {
    TrialConfig c = config_for(0.1, 1, 10, 3, 200000, 12);
    WaitingTimeHistogram h = waiting_time_histogram(c);
    double n = 0, sum = 0, sq = 0;
    for (auto [w, k] : h.attempt_length) {
        n += k;
        sum += double(w) * k;
        sq += double(w) * w * k;
    }
    double mean = sum / n;
    double sigma = std::sqrt((sq / n - mean * mean) / n);
    ASSERT_NEAR(mean, t_qib(0.1, 11, 3), 3 * sigma);
    WaitingTimeHistogram certain = waiting_time_histogram(config_for(1, 1, 10, 4, 10));
    ASSERT_EQ(certain.attempt_length.size(), 1u);
    ASSERT_EQ(certain.attempt_length.begin()->first, 4u);
}

TEST(worker_threads, environment_caps) {
    ASSERT_GE(worker_threads(0), 1);
    ::setenv("QIBSIM_THREADS", "1", 1);
    ASSERT_EQ(worker_threads(8), 1);
    ::setenv("QIBSIM_THREADS", "nonsense", 1);
    ASSERT_EQ(worker_threads(3), 3);
    ::unsetenv("QIBSIM_THREADS");
}
