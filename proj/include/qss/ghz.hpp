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
#include <stdexcept>
#include <vector>

#include "qss/estimate.hpp"
#include "qss/exact.hpp"
#include "qss/phase.hpp"
#include "qss/random.hpp"

namespace qss {

/// Local measurement parameters phi_j of the (N+1) GHZ holders. The first
/// entry belongs to the distributor.
struct GHZSetting {
    std::vector<Phase8> phases;

    explicit GHZSetting(std::vector<Phase8> p) : phases(std::move(p)) {
        if (phases.size() < 2) {
            throw std::invalid_argument("GHZSetting: need at least 2 parties");
        }
    }
    std::size_t size() const {
        return phases.size();
    }
};

struct GHZOutcome {
    std::vector<Outcome> results;

    int product() const {
        int p = 1;
        for (Outcome k : results) {
            p *= sign(k);
        }
        return p;
    }
};

/// <prod_j sigma_j(phi_j)> = cos(sum phi_j).
inline ExactCos ghz_correlation(const GHZSetting &setting) {
    return ExactCos(sum_phases(setting.phases));
}

/// P(k) = 2^-(N+1) (1 + prod(k) cos(sum phi)).
inline Exact ghz_joint_probability(const GHZSetting &setting, const GHZOutcome &outcome) {
    if (outcome.results.size() != setting.size()) {
        throw std::invalid_argument("ghz_joint_probability: outcome length differs from setting");
    }
    Exact corr = ghz_correlation(setting).to_exact();
    Exact weight(Rational(1, std::int64_t{1} << setting.size()));
    return weight * (Exact(1) + Exact(outcome.product()) * corr);
}

/// Draws all but the last result uniformly, then the last from its exact
/// conditional, so every proper subset of results is uniform. N+1 draws.
inline GHZOutcome ghz_sample(const GHZSetting &setting, RandomStream &rng) {
    GHZOutcome out;
    out.results.reserve(setting.size());
    int partial = 1;
    for (std::size_t j = 0; j + 1 < setting.size(); ++j) {
        Outcome k = rng.uniform() < 0.5 ? Outcome::plus : Outcome::minus;
        partial *= sign(k);
        out.results.push_back(k);
    }
    // P(product = +1) = (1 + cos)/2.
    double p_even = ExactProb::half_one_plus_cos(sum_phases(setting.phases)).value();
    int product = rng.uniform() < p_even ? 1 : -1;
    out.results.push_back(product * partial == 1 ? Outcome::plus : Outcome::minus);
    return out;
}

inline constexpr int kMaxEquivalenceRecipients = 6;

struct EquivalenceResult {
    bool equal = true;
    std::uint64_t assignments = 0;
    explicit operator bool() const {
        return equal;
    }
};

/// Compares the GHZ correlation against the single-qubit expectation p+ - p-
/// for every assignment over {0, pi/2, pi, 3pi/2} with 1..max_recipients
/// recipients.
inline EquivalenceResult equivalence_check(int max_recipients) {
    if (max_recipients > kMaxEquivalenceRecipients) {
        throw std::invalid_argument("equivalence_check: at most " + std::to_string(kMaxEquivalenceRecipients) +
                                    " recipients can be enumerated");
    }
    EquivalenceResult result;
    for (int n = 1; n <= max_recipients; ++n) {
        std::vector<int> digits(static_cast<std::size_t>(n) + 1, 0);
        std::vector<Phase8> phases(digits.size());
        while (true) {
            for (std::size_t j = 0; j < digits.size(); ++j) {
                phases[j] = Phase8(2 * digits[j]);
            }
            ++result.assignments;
            if (!(ghz_correlation(GHZSetting(phases)).to_exact() == expectation_A(phases))) {
                result.equal = false;
            }
            std::size_t j = 0;
            while (j < digits.size() && ++digits[j] == 4) {
                digits[j++] = 0;
            }
            if (j == digits.size()) {
                break;
            }
        }
    }
    return result;
}

}  // namespace qss
