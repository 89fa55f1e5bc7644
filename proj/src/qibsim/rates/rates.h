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


#ifndef _QIBSIM_RATES_RATES_H
#define _QIBSIM_RATES_RATES_H

#include <cstdint>

namespace qibsim {

/// Operating point of the multiplexed source.
struct RateParams {
    /// Pair probability per pulse, in (0, 1].
    double p = 0.05;
    /// Roundtrip transmission of the buffer, in [0, 1].
    double eta = 1;
    /// Largest number of roundtrips a photon waits for the next pair.
    int M = 0;
    /// Number of pairs fused.
    int N = 1;
    /// Source clock frequency, Hz.
    double f = 1;

    /// Throws std::invalid_argument outside the documented ranges.
    void validate() const;
};

/// Probability of two pairs when the second has M + 1 chances: p (1 - (1 - p)^{M+1}).
double p2_lossless(double p, int M);

/// p (1 - (1 - p)^{M+1})^{N-1}.
double pN_lossless(double p, int M, int N);

/// p^N eta^{2N} ((1 - ((1 - p) eta)^{M+1}) / (1 - (1 - p) eta))^{N-1}.
///
/// Each photon but the last sees the loop loss j + 2 times for a wait of j bins; the last
/// sees it twice.
double pN_lossy(double p, double eta, int M, int N);

/// The M -> infinity limit of pN_lossy: p^N eta^{2N} (1 - (1 - p) eta)^{-(N-1)}.
double pN_lossy_unbounded(double p, double eta, int N);

/// sum_{j=0}^{M} ((1 - p) eta)^j, the number of effective sources seen by one waiting photon.
double effective_sources(double p, double eta, int M);

/// pN_lossy with the first pair counted in the waiting time instead: pN_lossy / p. Used by the
/// rate formulas.
double pN_rate_lossy(double p, double eta, int M, int N);

/// Gain in pN_lossy from storing up to M roundtrips over not storing at all.
double multiplexing_enhancement(double p, double eta, int M, int N);

/// Loop transmission above which buffering beats p^N for many pairs:
/// (p - 1 + sqrt(p^2 - 2p + 5)) / 2.
double eta_threshold(double p);

/// Probability of a pair within M bins: 1 - (1 - p)^M.
double p1(double p, int M);

/// Mean bins until the next pair given one arrives within M bins. Throws std::invalid_argument
/// for M < 1 or p <= 0.
double mean_wait(double p, int M);

/// Mean pulses per attempt without buffering, in which the attempt stops at the first missing
/// pair.
double t_tm(double p, int N);

/// Mean pulses per buffered attempt: 1/p for the first pair, then up to N - 1 waits of at most
/// M bins with mean mean_wait(p, M), aborting after the first wait that runs out. Throws
/// std::invalid_argument for p <= 0.
double t_qib(double p, int M, int N);

/// f p^N.
double rate_spatial(double f, double p, int N);
/// f (p eta^2)^N / t_tm(p, N).
double rate_tm(double f, double p, double eta, int N);
/// f pN_rate_lossy / t_qib(p, M, N).
double rate_qib(const RateParams &params);
/// f p1(p, M)^{N-1} / t_qib(p, M, N).
double rate_qib_lossless(const RateParams &params);

/// Successes per pulse of the renewal process in which every later pair gets M + 1 bins,
/// matching the chances counted by pN_lossy: f pN_rate_lossy / t_qib(p, M + 1, N).
double renewal_rate_qib(const RateParams &params);

struct OptimizedDepth {
    int M = 0;
    double rate = 0;
};
/// Scans M in [M_min, M_max] for the largest rate_qib. Ties go to the smaller M.
OptimizedDepth optimize_M(double p, double eta, int N, double f, int M_min = 0, int M_max = 200);

/// Pair probability needed to keep the rate of spatial multiplexing at p_S.
struct EqualRatePairProbability {
    /// p_S / eta^2.
    double p_tm = 0;
    /// (p_S / eta^2) (1 - (1 - p) eta)^{(N-1)/N}.
    double p_qib = 0;
    /// Iterations used by the fixed point; 0 when p = p_S is substituted.
    int iterations = 0;
};
/// With `self_consistent`, the p inside the bracket is p_qib itself, found by iterating to a
/// relative change below 1e-12. Otherwise p = p_S. Throws std::domain_error when the iteration
/// does not settle or leaves (0, 1].
EqualRatePairProbability equal_rate_pair_probability(double p_s, double eta, int N, bool self_consistent = true);

}  // namespace qibsim

#endif
