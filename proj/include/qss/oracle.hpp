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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/exact.hpp"
#include "qss/phase.hpp"
#include "qss/protocol.hpp"

namespace qss {

inline constexpr int kMaxOracleRecipients = 5;

class OracleBudgetExceeded : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive, exact model of one noiseless protocol round.
///
/// Every phase assignment (distributor and intermediate recipients over
/// {0, pi/2, pi, 3pi/2}, last recipient over {0, pi/2}), every outcome of the
/// eavesdropper and every final outcome is expanded into a weighted leaf.
/// Weights are exact elements of Q(sqrt 2), so all queries except the
/// information measure are exact.
class Oracle {
   public:
    struct Leaf {
        Exact probability;
        Phase8 distributor;
        std::vector<Phase8> recipients;
        std::optional<Outcome> eve;
        Outcome outcome;
        bool valid;
        int bit;          // distributor's bit, meaningful when valid
        int reconstructed;  // joint inference of the recipients, when valid
    };

    Oracle(int recipients, AttackSpec attack) : n_(recipients), attack_(attack) {
        if (recipients > kMaxOracleRecipients) {
            throw OracleBudgetExceeded("oracle: at most " + std::to_string(kMaxOracleRecipients) +
                                       " recipients can be enumerated, got " + std::to_string(recipients));
        }
        if (recipients < 2) {
            throw std::invalid_argument("oracle: need at least 2 recipients");
        }
        if (attack.active() && (attack.link < 0 || attack.link >= recipients)) {
            throw std::invalid_argument("oracle: attack link outside [0, N)");
        }
        enumerate();
    }

    int recipients() const {
        return n_;
    }
    const std::vector<Leaf> &leaves() const {
        return leaves_;
    }

    Exact valid_fraction() const {
        Exact p;
        for (const auto &l : leaves_) {
            if (l.valid) p += l.probability;
        }
        return p;
    }

    /// P(reconstructed bit != distributor bit | valid).
    Exact qber() const {
        Exact err;
        for (const auto &l : leaves_) {
            if (l.valid && l.reconstructed != l.bit) err += l.probability;
        }
        return err / valid_fraction();
    }

    /// P(reconstructed bit == distributor bit | valid).
    Exact reconstruction_rate() const {
        return Exact(1) - qber();
    }

    /// Count of reachable valid leaves whose reconstruction is wrong.
    std::uint64_t reconstruction_failures() const {
        std::uint64_t bad = 0;
        for (const auto &l : leaves_) {
            bad += l.valid && l.reconstructed != l.bit;
        }
        return bad;
    }

    /// Distinct values of P(bit = 0 | coalition view) over every view the
    /// coalition can have on a valid round. Bit j of coalition_mask marks
    /// recipient j as a member. The view holds all announced classes, the
    /// members' exact phases and, when the last recipient is a member, the
    /// final outcome.
    std::vector<Exact> subset_bit_distribution(std::uint32_t coalition_mask) const {
        using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
        std::map<Key, std::pair<Exact, Exact>> views;  // (P(bit 0, view), P(view))
        bool knows_outcome = coalition_mask >> (n_ - 1) & 1u;
        for (const auto &l : leaves_) {
            if (!l.valid) continue;
            std::vector<int> classes, phases;
            for (int j = 0; j < n_; ++j) {
                classes.push_back(static_cast<int>(classify(l.recipients[j])));
                phases.push_back(coalition_mask >> j & 1u ? l.recipients[j].k() : -1);
            }
            auto &slot = views[Key{classes, phases, knows_outcome ? sign(l.outcome) : 0}];
            if (l.bit == 0) slot.first += l.probability;
            slot.second += l.probability;
        }
        std::vector<Exact> distinct;
        for (const auto &[key, joint] : views) {
            if (joint.second.is_zero()) continue;
            Exact p0 = joint.first / joint.second;
            bool seen = false;
            for (const auto &d : distinct) seen = seen || d == p0;
            if (!seen) distinct.push_back(p0);
        }
        return distinct;
    }

    /// True iff every proper coalition sees the distributor's bit as exactly
    /// (1/2, 1/2) in every view.
    bool subset_ignorance() const {
        const std::uint32_t all = (1u << n_) - 1;
        for (std::uint32_t mask = 0; mask < all; ++mask) {
            auto d = subset_bit_distribution(mask);
            if (d.size() != 1 || !(d[0] == Exact(Rational(1, 2)))) {
                return false;
            }
        }
        return true;
    }

    /// I(eavesdropper outcome; distributor bit | announced classes, valid), in bits.
    double eve_information() const {
        if (!attack_.active()) {
            return 0.0;
        }
        using Cls = std::vector<int>;
        std::map<std::tuple<Cls, int, int>, Exact> joint;
        std::map<Cls, Exact> pc;
        std::map<std::pair<Cls, int>, Exact> pce, pcb;
        Exact total;
        for (const auto &l : leaves_) {
            if (!l.valid || l.probability.is_zero()) continue;
            Cls c;
            for (Phase8 r : l.recipients) c.push_back(static_cast<int>(classify(r)));
            int e = sign(*l.eve);
            joint[{c, e, l.bit}] += l.probability;
            pc[c] += l.probability;
            pce[{c, e}] += l.probability;
            pcb[{c, l.bit}] += l.probability;
            total += l.probability;
        }
        double info = 0;
        for (const auto &[key, p] : joint) {
            const auto &[c, e, b] = key;
            Exact num = p * pc[c];
            Exact den = pce[{c, e}] * pcb[{c, b}];
            if (num == den) continue;  // independent slice contributes exactly 0
            info += (p / total).to_double() * std::log2(num.to_double() / den.to_double());
        }
        return info;
    }

   private:
    void enumerate() {
        const Exact weight(Rational(1, (std::int64_t{1} << (2 * n_)) * 2));
        std::vector<int> digits(static_cast<std::size_t>(n_) + 1, 0);
        // digits[0] = distributor, digits[1..n] = recipients; last has radix 2.
        auto radix = [&](std::size_t j) { return j == static_cast<std::size_t>(n_) ? 2 : 4; };
        while (true) {
            Phase8 d(2 * digits[0]);
            std::vector<Phase8> rs;
            for (int j = 1; j <= n_; ++j) rs.push_back(Phase8(2 * digits[j]));
            expand(weight, d, rs);
            std::size_t j = 0;
            while (j < digits.size() && ++digits[j] == radix(j)) {
                digits[j++] = 0;
            }
            if (j == digits.size()) break;
        }
    }

    void expand(const Exact &weight, Phase8 d, const std::vector<Phase8> &rs) {
        Phase8 before_link = d;
        for (int j = 0; j < attack_.link && attack_.active(); ++j) before_link += rs[j];
        Phase8 after_link;
        for (int j = attack_.active() ? attack_.link : 0; j < n_; ++j) after_link += rs[j];

        std::vector<std::pair<std::optional<Outcome>, std::pair<Exact, Phase8>>> branches;
        if (attack_.active()) {
            Phase8 basis = measurement_phase(attack_.basis);
            EquatorState at_link = prepare(before_link);
            branches.push_back({Outcome::plus, {prob_plus(at_link, basis).to_exact(), basis}});
            branches.push_back({Outcome::minus, {prob_minus(at_link, basis).to_exact(), basis + Phase8(4)}});
        } else {
            branches.push_back({std::nullopt, {Exact(1), d}});
        }

        bool valid = (d + sum_phases(rs)).k() % 4 == 0;
        for (const auto &[eve, branch] : branches) {
            const auto &[p_eve, start] = branch;
            if (p_eve.is_zero()) continue;
            EquatorState final_state = prepare(start + after_link);
            for (Outcome o : {Outcome::plus, Outcome::minus}) {
                Exact p_o = (o == Outcome::plus ? prob_plus(final_state, Phase8(0)) : prob_minus(final_state, Phase8(0)))
                                .to_exact();
                if (p_o.is_zero()) continue;
                Leaf leaf{weight * p_eve * p_o, d, rs, eve, o, valid, bit_of_phase(d), 0};
                leaf.reconstructed = valid ? reconstruct(o, rs) : -1;
                leaves_.push_back(std::move(leaf));
            }
        }
    }

    int n_;
    AttackSpec attack_;
    std::vector<Leaf> leaves_;
};

enum class OracleQuery { valid_fraction, qber, reconstruction, subset, information, equivalence };

inline std::optional<OracleQuery> parse_oracle_query(std::string_view name) {
    if (name == "valid-fraction") return OracleQuery::valid_fraction;
    if (name == "qber") return OracleQuery::qber;
    if (name == "reconstruction") return OracleQuery::reconstruction;
    if (name == "subset") return OracleQuery::subset;
    if (name == "information") return OracleQuery::information;
    if (name == "equivalence") return OracleQuery::equivalence;
    return std::nullopt;
}

}  // namespace qss
