// Copyright 2026 The qreuse Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qreuse {

/// SplitMix64 generator. Used instead of the <random> distributions so that
/// seeded outputs are identical across standard library implementations.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~uint64_t{0}; }

    result_type operator()() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t limit = max() - max() % bound;
        uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    /// Two independent standard normal samples (Box-Muller).
    std::pair<double, double> normal_pair() {
        double u1 = uniform();
        while (u1 <= 0) {
            u1 = uniform();
        }
        double u2 = uniform();
        double rad = std::sqrt(-2 * std::log(u1));
        double ang = 2 * std::numbers::pi * u2;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

   private:
    uint64_t state_;
};

/// Combines a seed with a site index into an independent stream seed.
inline uint64_t stream_seed(uint64_t seed, uint64_t site) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ull * (site + 1)));
    mix();
    return mix();
}

}  // namespace qreuse
