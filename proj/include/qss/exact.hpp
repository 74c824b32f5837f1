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

#include <boost/integer/common_factor_rt.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qss {

using Rational = boost::rational<std::int64_t>;

/// Exact element p + q*sqrt(2) of the field Q(sqrt 2).
///
/// Every probability reachable in the protocol (phases are multiples of pi/4)
/// and every sum or ratio of such probabilities lives here, so enumeration
/// results can be compared with ==.
class Exact {
   public:
    Exact() = default;
    Exact(std::int64_t p) : p_(p) {
    }
    Exact(Rational p, Rational q = Rational(0)) : p_(p), q_(q) {
    }

    const Rational &rational_part() const {
        return p_;
    }
    const Rational &sqrt2_part() const {
        return q_;
    }
    bool is_zero() const {
        return p_.numerator() == 0 && q_.numerator() == 0;
    }

    friend Exact operator+(const Exact &a, const Exact &b) {
        return {a.p_ + b.p_, a.q_ + b.q_};
    }
    friend Exact operator-(const Exact &a, const Exact &b) {
        return {a.p_ - b.p_, a.q_ - b.q_};
    }
    friend Exact operator-(const Exact &a) {
        return {-a.p_, -a.q_};
    }
    friend Exact operator*(const Exact &a, const Exact &b) {
        return {a.p_ * b.p_ + 2 * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_};
    }
    friend Exact operator/(const Exact &a, const Exact &b) {
        // Multiply through by the conjugate b.p - b.q*sqrt2.
        Rational norm = b.p_ * b.p_ - 2 * b.q_ * b.q_;
        if (norm.numerator() == 0) {
            throw std::domain_error("Exact: division by zero");
        }
        Exact conj{b.p_, -b.q_};
        Exact num = a * conj;
        return {num.p_ / norm, num.q_ / norm};
    }
    Exact &operator+=(const Exact &o) {
        return *this = *this + o;
    }
    Exact &operator-=(const Exact &o) {
        return *this = *this - o;
    }
    Exact &operator*=(const Exact &o) {
        return *this = *this * o;
    }

    // sqrt(2) is irrational, so the representation is unique.
    friend bool operator==(const Exact &a, const Exact &b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

    double to_double() const {
        long double p = static_cast<long double>(p_.numerator()) / p_.denominator();
        long double q = static_cast<long double>(q_.numerator()) / q_.denominator();
        return static_cast<double>(p + q * std::sqrt(2.0L));
    }

    /// Symbolic form over a common denominator, e.g. "1/4", "(2 + √2)/4", "-√2/2".
    std::string to_string() const {
        std::int64_t d = boost::integer::lcm(p_.denominator(), q_.denominator());
        std::int64_t a = p_.numerator() * (d / p_.denominator());
        std::int64_t b = q_.numerator() * (d / q_.denominator());
        if (b == 0) {
            return d == 1 ? std::to_string(a) : std::to_string(a) + "/" + std::to_string(d);
        }
        std::string surd;
        std::int64_t mag = b < 0 ? -b : b;
        surd = (mag == 1 ? "" : std::to_string(mag)) + "√2";
        std::string num;
        if (a == 0) {
            num = (b < 0 ? "-" : "") + surd;
            return d == 1 ? num : num + "/" + std::to_string(d);
        }
        num = std::to_string(a) + (b < 0 ? " - " : " + ") + surd;
        return d == 1 ? num : "(" + num + ")/" + std::to_string(d);
    }

   private:
    Rational p_{0};
    Rational q_{0};
};

}  // namespace qss
