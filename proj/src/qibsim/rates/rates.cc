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
#include <stdexcept>
#include <string>

using namespace qibsim;

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

void check_depth(int M) {
    if (M < 0) {
        throw std::invalid_argument("M must be >= 0");
    }
}

void check_pairs(int N) {
    if (N < 1) {
        throw std::invalid_argument("N must be >= 1");
    }
}

void check_frequency(double f) {
    if (!(f >= 0 && std::isfinite(f))) {
        throw std::invalid_argument("f must be finite and >= 0");
    }
}

/// (1 - p)^k without underflow for large k.
double survival_power(double p, double k) {
    if (p == 1) {
        return k == 0 ? 1 : 0;
    }
    return std::exp(k * std::log1p(-p));
}

/// sum_{j=0}^{k-1} x^j for x = (1 - p) eta, evaluated as expm1(k L) / expm1(L).
double geometric_sum(double p, double eta, double k) {
    if (k == 0) {
        return 0;
    }
    if (eta == 0 || p == 1) {
        return 1;
    }
    double log_x = std::log1p(-p) + std::log(eta);
    if (log_x == 0) {
        return k;
    }
    return std::expm1(k * log_x) / std::expm1(log_x);
}

}  // namespace

void RateParams::validate() const {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in (0, 1]");
    }
    check_probability(eta, "eta");
    check_depth(M);
    check_pairs(N);
    check_frequency(f);
}

double qibsim::p2_lossless(double p, int M) {
    return pN_lossless(p, M, 2);
}

double qibsim::pN_lossless(double p, int M, int N) {
    check_probability(p, "p");
    check_depth(M);
    check_pairs(N);
    return p * std::pow(-std::expm1((M + 1.0) * std::log1p(-p)), N - 1);
}

double qibsim::effective_sources(double p, double eta, int M) {
    check_probability(p, "p");
    check_probability(eta, "eta");
    check_depth(M);
    return geometric_sum(p, eta, M + 1.0);
}

double qibsim::pN_lossy(double p, double eta, int M, int N) {
    check_pairs(N);
    double sources = effective_sources(p, eta, M);
    return std::pow(p, N) * std::pow(eta, 2 * N) * std::pow(sources, N - 1);
}

double qibsim::pN_lossy_unbounded(double p, double eta, int N) {
    check_probability(p, "p");
    check_probability(eta, "eta");
    check_pairs(N);
    double denominator = (1 - eta) + p * eta;
    if (denominator == 0) {
        throw std::domain_error("unbounded storage diverges at p = 0, eta = 1");
    }
    return std::pow(p, N) * std::pow(eta, 2 * N) * std::pow(1 / denominator, N - 1);
}

double qibsim::pN_rate_lossy(double p, double eta, int M, int N) {
    check_pairs(N);
    double sources = effective_sources(p, eta, M);
    return std::pow(p, N - 1) * std::pow(eta, 2 * N) * std::pow(sources, N - 1);
}

double qibsim::multiplexing_enhancement(double p, double eta, int M, int N) {
    check_pairs(N);
    check_probability(eta, "eta");
    if (p <= 0 || eta <= 0) {
        throw std::domain_error("enhancement needs p > 0 and eta > 0");
    }
    // The p^N eta^{2N} prefactor cancels against the unbuffered case.
    return std::pow(effective_sources(p, eta, M), N - 1);
}

double qibsim::eta_threshold(double p) {
    check_probability(p, "p");
    return (p - 1 + std::sqrt(p * p - 2 * p + 5)) / 2;
}

double qibsim::p1(double p, int M) {
    check_probability(p, "p");
    check_depth(M);
    return -std::expm1(M * std::log1p(-p));
}

double qibsim::mean_wait(double p, int M) {
    if (M < 1) {
        throw std::invalid_argument("mean wait needs M >= 1");
    }
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("mean wait needs p in (0, 1]");
    }
    if (p == 1) {
        return 1;
    }
    if (p * M < 1e-3) {
        // The closed form cancels catastrophically here; the series is short relative to 1/p.
        double q = 1 - p;
        double weight = 1;
        double numerator = 0;
        double denominator = 0;
        for (int j = 0; j < M; j++) {
            numerator += (j + 1) * weight;
            denominator += weight;
            weight *= q;
        }
        return numerator / denominator;
    }
    double qm = survival_power(p, M);
    return 1 / p - M * qm / -std::expm1(M * std::log1p(-p));
}

double qibsim::t_tm(double p, int N) {
    check_probability(p, "p");
    check_pairs(N);
    double numerator = 0;
    double denominator = 0;
    for (int q = 1; q <= N; q++) {
        double stop = std::pow(p, q - 1) * (1 - p);
        numerator += stop * q;
        denominator += stop;
    }
    numerator += std::pow(p, N) * N;
    denominator += std::pow(p, N);
    return numerator / denominator;
}

double qibsim::t_qib(double p, int M, int N) {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("t_qib needs p in (0, 1]");
    }
    check_depth(M);
    check_pairs(N);
    double P1 = p1(p, M);
    // With M = 0 no later pair can arrive, and every term carrying the mean wait has weight 0.
    double wait = M > 0 ? mean_wait(p, M) : 0;
    double numerator = 0;
    double denominator = 0;
    for (int q = 1; q <= N - 1; q++) {
        double stop = std::pow(P1, q - 1) * (1 - P1);
        numerator += stop * ((q - 1) * wait + M);
        denominator += stop;
    }
    numerator += std::pow(P1, N - 1) * (N - 1) * wait;
    denominator += std::pow(P1, N - 1);
    return 1 / p + numerator / denominator;
}

double qibsim::rate_spatial(double f, double p, int N) {
    check_frequency(f);
    check_probability(p, "p");
    check_pairs(N);
    return f * std::pow(p, N);
}

double qibsim::rate_tm(double f, double p, double eta, int N) {
    check_frequency(f);
    check_probability(p, "p");
    check_probability(eta, "eta");
    check_pairs(N);
    return f * std::pow(p * eta * eta, N) / t_tm(p, N);
}

double qibsim::rate_qib(const RateParams &params) {
    params.validate();
    return params.f * pN_rate_lossy(params.p, params.eta, params.M, params.N) / t_qib(params.p, params.M, params.N);
}

double qibsim::rate_qib_lossless(const RateParams &params) {
    params.validate();
    return params.f * std::pow(p1(params.p, params.M), params.N - 1) / t_qib(params.p, params.M, params.N);
}

double qibsim::renewal_rate_qib(const RateParams &params) {
    params.validate();
    return params.f * pN_rate_lossy(params.p, params.eta, params.M, params.N) /
           t_qib(params.p, params.M + 1, params.N);
}

OptimizedDepth qibsim::optimize_M(double p, double eta, int N, double f, int M_min, int M_max) {
    check_depth(M_min);
    if (M_max < M_min) {
        throw std::invalid_argument("empty M range");
    }
    OptimizedDepth best{M_min, -1};
    for (int M = M_min; M <= M_max; M++) {
        double r = rate_qib(RateParams{p, eta, M, N, f});
        if (r > best.rate) {
            best = {M, r};
        }
    }
    return best;
}

EqualRatePairProbability qibsim::equal_rate_pair_probability(double p_s, double eta, int N, bool self_consistent) {
    if (!(p_s > 0 && p_s <= 1)) {
        throw std::invalid_argument("p_S must lie in (0, 1]");
    }
    if (!(eta > 0 && eta <= 1)) {
        throw std::invalid_argument("eta must lie in (0, 1]");
    }
    check_pairs(N);
    EqualRatePairProbability r;
    r.p_tm = p_s / (eta * eta);
    const double exponent = (N - 1.0) / N;
    auto step = [&](double p) {
        // 1 - (1 - p) eta without cancelling p against 1.
        return r.p_tm * std::pow((1 - eta) + p * eta, exponent);
    };
    if (!self_consistent) {
        r.p_qib = step(p_s);
        return r;
    }
    // The map contracts by at most `exponent` near the fixed point, so this step size bounds the
    // remaining error by 1e-12 relative.
    const double step_tolerance = 1e-12 * (1 - exponent);
    double p = p_s;
    for (int i = 1; i <= 100000; i++) {
        double next = step(p);
        if (!(next > 0 && next <= 1)) {
            throw std::domain_error("fixed point left (0, 1]");
        }
        if (std::abs(next - p) <= step_tolerance * next) {
            r.p_qib = next;
            r.iterations = i;
            return r;
        }
        p = next;
    }
    throw std::domain_error("fixed point did not converge");
}
