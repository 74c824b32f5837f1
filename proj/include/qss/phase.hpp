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
#include <compare>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "qss/exact.hpp"
#include "qss/random.hpp"

namespace qss {

/// A phase angle that is an integer multiple of pi/4, stored as k in [0, 8).
class Phase8 {
   public:
    constexpr Phase8() = default;
    constexpr Phase8(int k) : k_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {
    }

    constexpr int k() const {
        return k_;
    }
    constexpr bool is_protocol_phase() const {
        return k_ % 2 == 0;
    }
    double radians() const {
        return k_ * std::numbers::pi / 4;
    }

    friend constexpr Phase8 operator+(Phase8 a, Phase8 b) {
        return Phase8(a.k_ + b.k_);
    }
    friend constexpr Phase8 operator-(Phase8 a, Phase8 b) {
        return Phase8(a.k_ - b.k_);
    }
    constexpr Phase8 &operator+=(Phase8 o) {
        return *this = *this + o;
    }
    friend constexpr bool operator==(Phase8, Phase8) = default;

   private:
    std::uint8_t k_ = 0;
};

constexpr Phase8 sum_phases(std::span<const Phase8> phases) {
    Phase8 total;
    for (Phase8 p : phases) {
        total += p;
    }
    return total;
}

/// The equatorial qubit state (|0> + e^{i phase}|1>)/sqrt 2. Global phase is dropped.
struct EquatorState {
    Phase8 phase;
    friend constexpr bool operator==(EquatorState, EquatorState) = default;
};

enum class Outcome : int { plus = +1, minus = -1 };

constexpr int sign(Outcome o) {
    return static_cast<int>(o);
}
constexpr Outcome flipped(Outcome o) {
    return o == Outcome::plus ? Outcome::minus : Outcome::plus;
}

namespace detail {

// Five-valued (a + b*sqrt2)/4 representation shared by probabilities and cosines.
struct QuarterSurd {
    int a = 0;
    int b = 0;
    double value() const {
        return (a + b * std::numbers::sqrt2) / 4;
    }
    Exact to_exact() const {
        return Exact(Rational(a, 4), Rational(b, 4));
    }
    friend constexpr bool operator==(QuarterSurd, QuarterSurd) = default;
};

// cos(k*pi/4) as (a + b*sqrt2)/4.
constexpr QuarterSurd cos_quarter(Phase8 k) {
    switch (k.k()) {
        case 0:
            return {4, 0};
        case 1:
        case 7:
            return {0, 2};
        case 2:
        case 6:
            return {0, 0};
        case 3:
        case 5:
            return {0, -2};
        default:
            return {-4, 0};
    }
}

}  // namespace detail

/// Exact value cos(k pi/4), one of {1, sqrt2/2, 0, -sqrt2/2, -1}.
class ExactCos {
   public:
    constexpr explicit ExactCos(Phase8 angle) : v_(detail::cos_quarter(angle)) {
    }
    constexpr int a() const {
        return v_.a;
    }
    constexpr int b() const {
        return v_.b;
    }
    double value() const {
        return v_.value();
    }
    Exact to_exact() const {
        return v_.to_exact();
    }
    friend constexpr bool operator==(ExactCos, ExactCos) = default;

   private:
    friend class ExactProb;
    detail::QuarterSurd v_;
};

/// Exact probability (a + b sqrt2)/4 restricted to the five values reachable
/// with pi/4 phases: 0, (2-sqrt2)/4, 1/2, (2+sqrt2)/4, 1.
class ExactProb {
   public:
    constexpr ExactProb(int a, int b) : v_{a, b} {
        if (!is_reachable(v_)) {
            throw std::invalid_argument("ExactProb: (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") is not one of the five reachable probabilities");
        }
    }

    /// (1 + cos(angle))/2.
    static constexpr ExactProb half_one_plus_cos(Phase8 angle) {
        detail::QuarterSurd c = detail::cos_quarter(angle);
        return ExactProb(2 + c.a / 2, c.b / 2);
    }

    constexpr int a() const {
        return v_.a;
    }
    constexpr int b() const {
        return v_.b;
    }
    constexpr ExactProb complement() const {
        return ExactProb(4 - v_.a, -v_.b);
    }
    double value() const {
        return v_.value();
    }
    Exact to_exact() const {
        return v_.to_exact();
    }
    friend constexpr bool operator==(ExactProb, ExactProb) = default;

   private:
    static constexpr bool is_reachable(detail::QuarterSurd v) {
        return (v.a == 0 && v.b == 0) || (v.a == 2 && v.b >= -1 && v.b <= 1) || (v.a == 4 && v.b == 0);
    }
    detail::QuarterSurd v_;
};

constexpr EquatorState prepare(Phase8 phase) {
    return EquatorState{phase};
}

/// |0> -> |0>, |1> -> e^{i phi}|1>.
constexpr EquatorState apply_phase(EquatorState s, Phase8 phi) {
    return EquatorState{s.phase + phi};
}

/// Probability of the +1 outcome when projecting s onto the basis
/// {|basis>, |basis + pi>}.
constexpr ExactProb prob_plus(EquatorState s, Phase8 basis) {
    return ExactProb::half_one_plus_cos(s.phase - basis);
}

constexpr ExactProb prob_minus(EquatorState s, Phase8 basis) {
    return prob_plus(s, basis).complement();
}

/// Projective measurement; consumes exactly one draw from rng.
inline Outcome measure(EquatorState s, Phase8 basis, RandomStream &rng) {
    double u = rng.uniform();
    return u < prob_plus(s, basis).value() ? Outcome::plus : Outcome::minus;
}

}  // namespace qss
