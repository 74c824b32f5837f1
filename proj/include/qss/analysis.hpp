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

#include <cstdio>
#include <optional>
#include <string>

#include "qss/adversary.hpp"
#include "qss/ghz.hpp"
#include "qss/oracle.hpp"

namespace qss {

/// Exact QBER on valid runs under intercept-resend in `basis` at `link`.
inline Exact attack_qber_exact(AttackBasis basis, int recipients, int link = 0) {
    return Oracle(recipients, AttackSpec::intercept(basis, link)).qber();
}

/// Mutual information (bits) between the eavesdropper's outcome and the
/// distributor's bit on valid runs, given the public class announcements.
inline double attack_information_exact(const AttackSpec &attack, int recipients) {
    return Oracle(recipients, attack).eve_information();
}

inline double attack_information_exact(AttackBasis basis, int recipients, int link = 0) {
    return attack_information_exact(AttackSpec::intercept(basis, link), recipients);
}

struct OracleAnswer {
    std::optional<Exact> exact;
    double decimal = 0;
    std::string text;
};

namespace detail {
inline std::string decimal_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
inline OracleAnswer exact_answer(const Exact &e) {
    return {e, e.to_double(), e.to_string() + " = " + decimal_string(e.to_double())};
}
}  // namespace detail

/// Single entry point used by the command line. `recipients` is N; for the
/// equivalence query it is the largest N enumerated.
inline OracleAnswer brute_force_oracle(int recipients, const AttackSpec &attack, OracleQuery query) {
    if (query == OracleQuery::equivalence) {
        if (recipients > kMaxEquivalenceRecipients) {
            throw OracleBudgetExceeded("oracle: equivalence enumerates at most " +
                                       std::to_string(kMaxEquivalenceRecipients) + " recipients");
        }
        auto r = equivalence_check(recipients);
        return {std::nullopt, r.equal ? 1.0 : 0.0,
                std::string("equal: ") + (r.equal ? "true" : "false") + " (" + std::to_string(r.assignments) +
                    " assignments)"};
    }
    Oracle oracle(recipients, attack);
    switch (query) {
        case OracleQuery::valid_fraction:
            return detail::exact_answer(oracle.valid_fraction());
        case OracleQuery::qber:
            return detail::exact_answer(oracle.qber());
        case OracleQuery::reconstruction:
            return detail::exact_answer(oracle.reconstruction_rate());
        case OracleQuery::information: {
            double info = oracle.eve_information();
            return {std::nullopt, info, detail::decimal_string(info) + " bit"};
        }
        default: {
            // Worst case over all proper coalitions.
            std::string text;
            bool uniform = true;
            const std::uint32_t all = (1u << recipients) - 1;
            for (std::uint32_t mask = 0; mask < all; ++mask) {
                for (const auto &p0 : oracle.subset_bit_distribution(mask)) {
                    if (!(p0 == Exact(Rational(1, 2)))) {
                        uniform = false;
                        text = "P(bit=0) = " + p0.to_string() + " for coalition mask " + std::to_string(mask);
                    }
                }
            }
            if (uniform) {
                return {Exact(Rational(1, 2)), 0.5, "(1/2, 1/2) for every proper coalition"};
            }
            return {std::nullopt, 0.0, text};
        }
    }
}

}  // namespace qss
