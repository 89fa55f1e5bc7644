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


#ifndef _QIBSIM_MONTECARLO_TRIALS_H
#define _QIBSIM_MONTECARLO_TRIALS_H

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qibsim/rates/rates.h"

namespace qibsim {

struct TrialConfig {
    RateParams params;
    std::uint64_t rng_seed = 0;
    std::uint64_t n_trials = 1000000;
    /// Ceiling on the reported rate from the switching speed of the buffer, Hz.
    std::optional<double> max_switch_rate;
    /// Each later pair gets M + 1 bins counted from the previous herald. When false the bins are
    /// fixed blocks of M + 1 after the first herald, so a stored photon also waits out the rest
    /// of its block.
    bool relative_multiplexing = true;
    /// On a timeout keep the stored photons and wait another M + 1 bins instead of aborting.
    bool per_pair_restart = false;
    /// Probability per pulse of a herald click without a pair.
    double dark_count_probability = 0;
    /// Samples the 2^{-(N-1)} post-selection and detector efficiency instead of leaving them as
    /// an analytic factor.
    bool sample_postselection = false;
    double detector_efficiency = 1;
    /// 0 picks the hardware concurrency, capped by QIBSIM_THREADS when set.
    int threads = 0;

    void validate() const;
};

/// One attempt: wait for a first herald, then for N - 1 more, each within its window.
struct TrialOutcome {
    bool success = false;
    /// All N heralds arrived in time.
    bool complete = false;
    /// Pulses from the start of the attempt to its end.
    std::uint64_t pulses_elapsed = 0;
    /// Pulses until the first herald, >= 1.
    std::uint64_t first_wait = 0;
    /// Pulses from one herald to the next, for the later pairs that arrived.
    std::vector<std::uint64_t> pair_waits;
    int surviving_photons = 0;
};

TrialOutcome run_trial(const TrialConfig &config, std::uint64_t trial);

__extension__ typedef unsigned __int128 WideCount;

/// Integer sums over trials, so merging is exact in any order.
struct TrialTally {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t successes_first_at_zero = 0;
    std::uint64_t first_wait_sum = 0;
    WideCount first_wait_sum_sq = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t pair_wait_sum = 0;
    WideCount pair_wait_sum_sq = 0;
    std::uint64_t pulses_sum = 0;
    WideCount pulses_sum_sq = 0;
    /// Sum of pulses over successful attempts, for the rate covariance.
    std::uint64_t success_pulses_sum = 0;

    void add(const TrialOutcome &outcome);
    void merge(const TrialTally &other);
    bool operator==(const TrialTally &other) const = default;
};

struct Measured {
    double value = 0;
    double sigma = 0;
};

struct Proportion {
    double value = 0;
    double sigma = 0;
    /// Wilson score interval at 95%.
    double lower = 0;
    double upper = 0;
};
Proportion wilson_proportion(std::uint64_t hits, std::uint64_t trials);

struct MonteCarloSummary {
    TrialTally tally;
    /// Fraction of attempts whose first pair came in the first pulse and that succeeded.
    Proportion p_n;
    /// Successes per attempt.
    Proportion success;
    /// p times success: an estimate of p_n that does not wait for the first pair to be at bin 0.
    Measured p_n_conditional;
    Measured first_wait;
    Measured pair_wait;
    Measured attempt_length;
    /// Successes per second at the configured clock, capped by max_switch_rate.
    Measured rate;

    /// pN_lossy, times the sampled post-selection and detection factors when those are on.
    double analytic_p_n = 0;
    double analytic_first_wait = 0;
    /// mean_wait(p, M + 1).
    double analytic_pair_wait = 0;
    /// t_qib(p, M + 1, N).
    double analytic_attempt_length = 0;
    /// renewal_rate_qib with the same factors as analytic_p_n.
    double analytic_rate = 0;
};

/// Runs the trials in parallel. The result depends only on the config, not on the thread count.
MonteCarloSummary run_trials(const TrialConfig &config);

/// Summary statistics from an existing tally.
MonteCarloSummary summarize(const TrialConfig &config, const TrialTally &tally);

struct WaitingTimeHistogram {
    std::map<std::uint64_t, std::uint64_t> first_wait;
    std::map<std::uint64_t, std::uint64_t> pair_wait;
    std::map<std::uint64_t, std::uint64_t> attempt_length;
};
WaitingTimeHistogram waiting_time_histogram(const TrialConfig &config);

/// Threads to use for `requested` (0 = automatic), honoring QIBSIM_THREADS.
int worker_threads(int requested);

}  // namespace qibsim

#endif
