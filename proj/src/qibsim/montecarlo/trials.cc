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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "qibsim/montecarlo/rng.h"

using namespace qibsim;

namespace {

constexpr double WILSON_Z = 1.959963984540054;

double to_double(WideCount x) {
    return static_cast<double>(x);
}

Measured sample_mean(std::uint64_t n, std::uint64_t sum, WideCount sum_sq) {
    if (n == 0) {
        return {std::nan(""), std::nan("")};
    }
    double mean = static_cast<double>(sum) / static_cast<double>(n);
    double second = to_double(sum_sq) / static_cast<double>(n);
    double variance = std::max(0.0, second - mean * mean);
    return {mean, std::sqrt(variance / static_cast<double>(n))};
}

/// Herald clicks: a pair with probability p, otherwise a dark count.
struct HeraldSource {
    double click_probability;
    double real_fraction;

    explicit HeraldSource(const TrialConfig &config) {
        double p = config.params.p;
        click_probability = p + (1 - p) * config.dark_count_probability;
        real_fraction = p / click_probability;
    }

    /// Pulses to the next click, and whether it came with a photon.
    std::pair<std::uint64_t, bool> next(SplitMix64 &rng) const {
        std::uint64_t wait = rng.geometric(click_probability);
        bool real = real_fraction >= 1 || rng.bernoulli(real_fraction);
        return {wait, real};
    }
};

double analytic_factor(const TrialConfig &config) {
    if (!config.sample_postselection) {
        return 1;
    }
    int N = config.params.N;
    return std::pow(0.5, N - 1) * std::pow(config.detector_efficiency, 2 * N);
}

}  // namespace

void TrialConfig::validate() const {
    params.validate();
    if (n_trials == 0) {
        throw std::invalid_argument("n_trials must be > 0");
    }
    if (max_switch_rate.has_value() && !(*max_switch_rate > 0)) {
        throw std::invalid_argument("max_switch_rate must be > 0");
    }
    if (!(dark_count_probability >= 0 && dark_count_probability < 1)) {
        throw std::invalid_argument("dark_count_probability must lie in [0, 1)");
    }
    if (!(detector_efficiency >= 0 && detector_efficiency <= 1)) {
        throw std::invalid_argument("detector_efficiency must lie in [0, 1]");
    }
    if (threads < 0) {
        throw std::invalid_argument("threads must be >= 0");
    }
}

TrialOutcome qibsim::run_trial(const TrialConfig &config, std::uint64_t trial) {
    const RateParams &params = config.params;
    SplitMix64 rng = SplitMix64::for_trial(config.rng_seed, trial);
    HeraldSource source(config);
    const std::uint64_t window = static_cast<std::uint64_t>(params.M) + 1;

    TrialOutcome out;
    auto [first, first_real] = source.next(rng);
    out.first_wait = first;
    bool all_real = first_real;

    // Roundtrips each photon but the last spends waiting for the next pair.
    std::vector<std::uint64_t> stored_waits;
    std::uint64_t last_herald = first;
    std::uint64_t cursor = first;
    std::uint64_t window_end = first + window;
    for (int pair = 1; pair < params.N; pair++) {
        bool arrived = false;
        while (!arrived) {
            auto [gap, real] = source.next(rng);
            if (gap <= window_end - cursor) {
                std::uint64_t t = cursor + gap;
                stored_waits.push_back(t - last_herald - 1);
                out.pair_waits.push_back(t - last_herald);
                all_real = all_real && real;
                last_herald = t;
                if (config.relative_multiplexing) {
                    cursor = t;
                    window_end = t + window;
                } else {
                    // Later clicks in a fixed block are not used.
                    cursor = window_end;
                    window_end += window;
                }
                arrived = true;
            } else {
                cursor = window_end;
                if (!config.per_pair_restart) {
                    out.pulses_elapsed = cursor;
                    return out;
                }
                window_end += window;
            }
        }
    }
    out.complete = true;
    out.pulses_elapsed = cursor;

    const double eta = params.eta;
    bool survived = true;
    for (auto w : stored_waits) {
        bool kept = rng.bernoulli(std::pow(eta, static_cast<double>(w) + 2));
        out.surviving_photons += kept;
        survived = survived && kept;
    }
    bool last_kept = rng.bernoulli(eta * eta);
    out.surviving_photons += last_kept;
    survived = survived && last_kept;

    bool detected = true;
    if (config.sample_postselection) {
        detected = rng.bernoulli(std::pow(0.5, params.N - 1)) &&
                   rng.bernoulli(std::pow(config.detector_efficiency, 2 * params.N));
    }
    out.success = all_real && survived && detected;
    return out;
}

void TrialTally::add(const TrialOutcome &o) {
    trials++;
    successes += o.success;
    successes_first_at_zero += o.success && o.first_wait == 1;
    first_wait_sum += o.first_wait;
    first_wait_sum_sq += static_cast<WideCount>(o.first_wait) * o.first_wait;
    for (auto w : o.pair_waits) {
        pair_count++;
        pair_wait_sum += w;
        pair_wait_sum_sq += static_cast<WideCount>(w) * w;
    }
    pulses_sum += o.pulses_elapsed;
    pulses_sum_sq += static_cast<WideCount>(o.pulses_elapsed) * o.pulses_elapsed;
    if (o.success) {
        success_pulses_sum += o.pulses_elapsed;
    }
}

void TrialTally::merge(const TrialTally &o) {
    trials += o.trials;
    successes += o.successes;
    successes_first_at_zero += o.successes_first_at_zero;
    first_wait_sum += o.first_wait_sum;
    first_wait_sum_sq += o.first_wait_sum_sq;
    pair_count += o.pair_count;
    pair_wait_sum += o.pair_wait_sum;
    pair_wait_sum_sq += o.pair_wait_sum_sq;
    pulses_sum += o.pulses_sum;
    pulses_sum_sq += o.pulses_sum_sq;
    success_pulses_sum += o.success_pulses_sum;
}

Proportion qibsim::wilson_proportion(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0 || hits > trials) {
        throw std::invalid_argument("proportion needs 0 <= hits <= trials and trials > 0");
    }
    double n = static_cast<double>(trials);
    double x = static_cast<double>(hits);
    double phat = x / n;
    double z2 = WILSON_Z * WILSON_Z;
    double center = (x + z2 / 2) / (n + z2);
    double half = WILSON_Z / (n + z2) * std::sqrt(x * (n - x) / n + z2 / 4);
    return {phat, std::sqrt(phat * (1 - phat) / n), std::max(0.0, center - half), std::min(1.0, center + half)};
}

MonteCarloSummary qibsim::summarize(const TrialConfig &config, const TrialTally &tally) {
    const RateParams &params = config.params;
    MonteCarloSummary s;
    s.tally = tally;
    s.p_n = wilson_proportion(tally.successes_first_at_zero, tally.trials);
    s.success = wilson_proportion(tally.successes, tally.trials);
    s.p_n_conditional = {params.p * s.success.value, params.p * s.success.sigma};
    s.first_wait = sample_mean(tally.trials, tally.first_wait_sum, tally.first_wait_sum_sq);
    s.pair_wait = sample_mean(tally.pair_count, tally.pair_wait_sum, tally.pair_wait_sum_sq);
    s.attempt_length = sample_mean(tally.trials, tally.pulses_sum, tally.pulses_sum_sq);

    // Ratio estimator f S / T with its delta-method error.
    double n = static_cast<double>(tally.trials);
    double mean_x = static_cast<double>(tally.successes) / n;
    double mean_l = static_cast<double>(tally.pulses_sum) / n;
    double r = mean_x / mean_l;
    double var_x = mean_x * (1 - mean_x);
    double var_l = std::max(0.0, to_double(tally.pulses_sum_sq) / n - mean_l * mean_l);
    double cov = static_cast<double>(tally.success_pulses_sum) / n - mean_x * mean_l;
    double var_r = std::max(0.0, (var_x - 2 * r * cov + r * r * var_l) / (mean_l * mean_l * n));
    s.rate = {params.f * r, params.f * std::sqrt(var_r)};
    if (config.max_switch_rate.has_value() && s.rate.value > *config.max_switch_rate) {
        s.rate = {*config.max_switch_rate, 0};
    }

    double factor = analytic_factor(config);
    s.analytic_p_n = factor * pN_lossy(params.p, params.eta, params.M, params.N);
    s.analytic_first_wait = 1 / params.p;
    s.analytic_pair_wait = mean_wait(params.p, params.M + 1);
    s.analytic_attempt_length = t_qib(params.p, params.M + 1, params.N);
    s.analytic_rate = factor * renewal_rate_qib(params);
    if (config.max_switch_rate.has_value()) {
        s.analytic_rate = std::min(s.analytic_rate, *config.max_switch_rate);
    }
    return s;
}

int qibsim::worker_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char *cap = std::getenv("QIBSIM_THREADS")) {
        try {
            int limit = std::stoi(cap);
            if (limit >= 1) {
                n = std::min(n, limit);
            }
        } catch (const std::exception &) {
            // A malformed cap is ignored rather than failing the simulation.
        }
    }
    return n;
}

namespace {

template <typename Body>
void for_trial_ranges(const TrialConfig &config, std::vector<TrialTally> &tallies, Body body) {
    const std::uint64_t total = config.n_trials;
    const std::uint64_t workers = std::min<std::uint64_t>(worker_threads(config.threads), total);
    tallies.assign(workers, TrialTally{});
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; w++) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] { body(tallies[w], begin, end); });
    }
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace

MonteCarloSummary qibsim::run_trials(const TrialConfig &config) {
    config.validate();
    std::vector<TrialTally> tallies;
    for_trial_ranges(config, tallies, [&](TrialTally &tally, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; k++) {
            tally.add(run_trial(config, k));
        }
    });
    TrialTally total;
    for (const auto &t : tallies) {
        total.merge(t);
    }
    return summarize(config, total);
}

WaitingTimeHistogram qibsim::waiting_time_histogram(const TrialConfig &config) {
    config.validate();
    WaitingTimeHistogram h;
    for (std::uint64_t k = 0; k < config.n_trials; k++) {
        TrialOutcome o = run_trial(config, k);
        h.first_wait[o.first_wait]++;
        for (auto w : o.pair_waits) {
            h.pair_wait[w]++;
        }
        h.attempt_length[o.pulses_elapsed]++;
    }
    return h;
}
