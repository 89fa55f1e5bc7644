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


#ifndef _QIBSIM_MONTECARLO_RNG_H
#define _QIBSIM_MONTECARLO_RNG_H

#include <cstdint>

namespace qibsim {

/// SplitMix64 generator. Streams are keyed by (seed, trial) so that a trial draws the same
/// numbers no matter which thread or batch runs it.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {
    }

    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in (0, 1].
    double uniform_open_below();
    bool bernoulli(double probability);
    /// Number of Bernoulli(p) draws up to and including the first success, by inverse CDF.
    /// Throws std::invalid_argument unless p is in (0, 1].
    std::uint64_t geometric(double p);

   private:
    std::uint64_t state_;
};

/// The SplitMix64 output function, a bijection on 64-bit words.
std::uint64_t splitmix_finalize(std::uint64_t z);

}  // namespace qibsim

#endif
