// Copyright 2026 The qss Authors
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

#include <cstdint>
#include <limits>

namespace qss {

/// Counter-based random stream.
///
/// Every stream is keyed by (master seed, round index, channel). The n-th output
/// is a pure function of the key and n, so rounds can be evaluated in any order
/// or on any thread and still reproduce the same transcript.
///
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
   public:
    using result_type = std::uint64_t;

    /// Named sub-streams of a round. Kept separate so that physical-layer gating
    /// draws never shift the protocol draws (and vice versa).
    enum class Channel : std::uint64_t {
        gates = 1,
        protocol = 2,
        comparison = 3,
        test = 4,
    };

    explicit RandomStream(std::uint64_t key) : key_(key) {
    }

    static RandomStream derive(std::uint64_t seed, std::uint64_t round_index, Channel channel) {
        std::uint64_t k = mix(seed ^ 0x6a09e667f3bcc909ULL);
        k = mix(k + round_index * 0x9e3779b97f4a7c15ULL);
        k = mix(k ^ (static_cast<std::uint64_t>(channel) * 0xbb67ae8584caa73bULL));
        return RandomStream(k);
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform double in [0, 1) with 53 bits of resolution. One draw.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n) from exactly one draw. Exact when n is a power
    /// of two; otherwise the bias is below n / 2^53.
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    }

    std::uint64_t draws() const {
        return counter_;
    }

    /// SplitMix64 finalizer.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace qss
