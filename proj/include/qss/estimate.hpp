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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qss/config.hpp"
#include "qss/phase.hpp"

namespace qss {

/// Error fraction with its plain binomial standard error sqrt(q(1-q)/n).
struct QberEstimate {
    double q = 0;
    double stderr_ = 0;
    std::uint64_t n = 0;
};

/// Absent when n == 0.
inline std::optional<QberEstimate> qber(std::uint64_t errors, std::uint64_t n) {
    if (errors > n) {
        throw std::invalid_argument("qber: errors exceed sample count");
    }
    if (n == 0) {
        return std::nullopt;
    }
    double q = static_cast<double>(errors) / static_cast<double>(n);
    return QberEstimate{q, std::sqrt(q * (1 - q) / static_cast<double>(n)), n};
}

/// p+ - p- for a qubit prepared at phases[0], shifted by every later phase,
/// then measured in the x basis. Built from the detection probabilities only.
inline Exact expectation_A(std::span<const Phase8> phases) {
    EquatorState s = prepare(phases.empty() ? Phase8(0) : phases.front());
    for (std::size_t j = 1; j < phases.size(); ++j) {
        s = apply_phase(s, phases[j]);
    }
    return prob_plus(s, Phase8(0)).to_exact() - prob_minus(s, Phase8(0)).to_exact();
}

enum class AbortDecision { no, yes, undecided };

constexpr const char *to_string(AbortDecision d) {
    switch (d) {
        case AbortDecision::no:
            return "no";
        case AbortDecision::yes:
            return "yes";
        default:
            return "undecided";
    }
}

/// Aggregated outcome of a session.
struct SessionReport {
    std::uint64_t z_total = 0;
    std::uint64_t z_one = 0;
    std::uint64_t z_raw = 0;
    std::uint64_t z_val = 0;
    std::uint64_t compared = 0;
    std::optional<QberEstimate> qber;
    std::vector<bool> key_bits;
    AbortDecision abort = AbortDecision::undecided;
    SessionConfig config_echo;
};

}  // namespace qss
