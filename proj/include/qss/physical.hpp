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

#include <cmath>
#include <stdexcept>
#include <string>

#include "qss/phase.hpp"
#include "qss/random.hpp"

namespace qss {

/// Lumped model of the heralded single-photon source and detection chain.
struct NoiseSpec {
    /// Mean number of trigger photons per collection window (Poisson).
    double herald_mu = 0.89;
    /// Probability of a coincidence given exactly one herald.
    double coincidence_eta = 0.231;
    /// Probability that the final measurement outcome is flipped.
    double flip_e = 0.0234;

    friend bool operator==(const NoiseSpec &, const NoiseSpec &) = default;
};

// Default source parameters are obtained by inverting the reference count chain
// z_total = 25000, z_one = 9125, z_raw = 2107:
//   mu * exp(-mu) = 9125 / 25000 = 0.365  ->  lower root 0.880, used as 0.89
//                                             (0.89 * exp(-0.89) = 0.3655)
//   eta = 2107 / 9125 = 0.2309           ->  eta = 0.231
// flip_e is the reference sifted error rate 2.34 %.
inline constexpr NoiseSpec kReferenceNoise{0.89, 0.231, 0.0234};

inline void validate(const NoiseSpec &spec) {
    if (!(spec.herald_mu >= 0) || !std::isfinite(spec.herald_mu)) {
        throw std::invalid_argument("herald_mu must be a finite value >= 0");
    }
    if (!(spec.coincidence_eta >= 0 && spec.coincidence_eta <= 1)) {
        throw std::invalid_argument("coinc_eta must lie in [0, 1]");
    }
    if (!(spec.flip_e >= 0 && spec.flip_e <= 1)) {
        throw std::invalid_argument("flip_e must lie in [0, 1]");
    }
}

enum class HeraldResult { no_herald, heralded, multi };

/// Probability that the Poisson trigger count is exactly one.
inline double herald_probability(const NoiseSpec &spec) {
    return spec.herald_mu * std::exp(-spec.herald_mu);
}

/// Draws n ~ Poisson(herald_mu) and classifies n = 0, n = 1, n >= 2.
/// Uses one uniform draw by inverting the first two CDF steps.
inline HeraldResult herald_gate(const NoiseSpec &spec, RandomStream &rng) {
    double u = rng.uniform();
    double p0 = std::exp(-spec.herald_mu);
    if (u < p0) {
        return HeraldResult::no_herald;
    }
    if (u < p0 + spec.herald_mu * p0) {
        return HeraldResult::heralded;
    }
    return HeraldResult::multi;
}

inline bool coincidence_gate(const NoiseSpec &spec, RandomStream &rng) {
    return rng.uniform() < spec.coincidence_eta;
}

/// Symmetric flip channel on the final outcome. Always consumes one draw.
inline Outcome flip_outcome(Outcome outcome, const NoiseSpec &spec, RandomStream &rng) {
    return rng.uniform() < spec.flip_e ? flipped(outcome) : outcome;
}

}  // namespace qss
