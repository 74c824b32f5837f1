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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qss/phase.hpp"
#include "qss/random.hpp"

namespace qss {

enum class AttackKind { none, intercept_resend };
enum class AttackBasis { x, y, breidbart };

/// x -> 0, y -> pi/2, Breidbart -> pi/4.
constexpr Phase8 measurement_phase(AttackBasis basis) {
    switch (basis) {
        case AttackBasis::x:
            return Phase8(0);
        case AttackBasis::y:
            return Phase8(2);
        default:
            return Phase8(1);
    }
}

constexpr std::string_view basis_name(AttackBasis basis) {
    switch (basis) {
        case AttackBasis::x:
            return "x";
        case AttackBasis::y:
            return "y";
        default:
            return "breidbart";
    }
}

inline std::optional<AttackBasis> parse_basis(std::string_view name) {
    if (name == "x") return AttackBasis::x;
    if (name == "y") return AttackBasis::y;
    if (name == "breidbart" || name == "b") return AttackBasis::breidbart;
    return std::nullopt;
}

/// Where and how the qubit channel is attacked.
///
/// link 0 sits between the distributor and the first recipient; link j sits
/// just before recipient j+1 applies its phase. A dishonest first recipient
/// is the same thing as an attack on link 0.
struct AttackSpec {
    AttackKind kind = AttackKind::none;
    AttackBasis basis = AttackBasis::x;
    int link = 0;

    bool active() const {
        return kind != AttackKind::none;
    }
    static AttackSpec none() {
        return {};
    }
    static AttackSpec intercept(AttackBasis basis, int link) {
        return {AttackKind::intercept_resend, basis, link};
    }

    /// "none" or "<basis>:<link>".
    std::string to_string() const {
        if (!active()) {
            return "none";
        }
        return std::string(basis_name(basis)) + ":" + std::to_string(link);
    }

    friend bool operator==(const AttackSpec &, const AttackSpec &) = default;
};

/// Parses "none", "x:0", "y:2", "breidbart:1". A missing link means link 0.
inline AttackSpec parse_attack(std::string_view text) {
    if (text == "none") {
        return AttackSpec::none();
    }
    auto colon = text.find(':');
    std::string_view basis_text = text.substr(0, colon);
    auto basis = parse_basis(basis_text);
    if (!basis) {
        throw std::invalid_argument("attack: unknown basis '" + std::string(basis_text) + "'");
    }
    int link = 0;
    if (colon != std::string_view::npos) {
        std::string link_text(text.substr(colon + 1));
        std::size_t used = 0;
        try {
            link = std::stoi(link_text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (link_text.empty() || used != link_text.size() || link < 0) {
            throw std::invalid_argument("attack: bad link '" + link_text + "'");
        }
    }
    return AttackSpec::intercept(*basis, link);
}

struct EveRecord {
    Phase8 measured_basis;
    Outcome eve_outcome = Outcome::plus;
    Phase8 resent_phase;
};

/// Measures s in the given basis and resends the eigenstate that was found.
inline std::pair<EquatorState, EveRecord> intercept_resend(EquatorState s, Phase8 basis, RandomStream &rng) {
    Outcome seen = measure(s, basis, rng);
    Phase8 resent = seen == Outcome::plus ? basis : basis + Phase8(4);
    return {prepare(resent), EveRecord{basis, seen, resent}};
}

}  // namespace qss
