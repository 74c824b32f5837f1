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

#include "qss/physical.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace qss;

namespace {
NoiseSpec with(double mu, double eta, double e) {
    return NoiseSpec{mu, eta, e};
}
}  // namespace

TEST(physical, herald_gate_zero_mean_never_heralds) {
    RandomStream rng(1);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(herald_gate(with(0, 1, 0), rng), HeraldResult::no_herald);
    }
}

TEST(physical, herald_gate_reference_rate) {
    NoiseSpec spec = kReferenceNoise;
    const double p = 0.89 * std::exp(-0.89);
    EXPECT_NEAR(herald_probability(spec), 0.365484, 1e-6);
    RandomStream rng(2);
    const int n = 100000;
    int heralded = 0, multi = 0;
    for (int i = 0; i < n; ++i) {
        auto h = herald_gate(spec, rng);
        heralded += h == HeraldResult::heralded;
        multi += h == HeraldResult::multi;
    }
    EXPECT_NEAR(heralded, n * p, 5 * std::sqrt(n * p * (1 - p)));
    double pm = 1 - std::exp(-0.89) * (1 + 0.89);
    EXPECT_NEAR(multi, n * pm, 5 * std::sqrt(n * pm * (1 - pm)));
    EXPECT_EQ(rng.draws(), static_cast<std::uint64_t>(n));
}

TEST(physical, herald_gate_large_mean_stops_heralding) {
    RandomStream rng(3);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(herald_gate(with(60, 1, 0), rng), HeraldResult::multi);
    }
    EXPECT_LT(herald_probability(with(60, 1, 0)), 1e-20);
}

TEST(physical, coincidence_gate) {
    RandomStream rng(4);
    int always = 0, never = 0, partial = 0;
    const int n = 9125;
    for (int i = 0; i < n; ++i) {
        always += coincidence_gate(with(1, 1, 0), rng);
        never += coincidence_gate(with(1, 0, 0), rng);
        partial += coincidence_gate(with(1, 0.231, 0), rng);
    }
    EXPECT_EQ(always, n);
    EXPECT_EQ(never, 0);
    EXPECT_NEAR(partial, 2107, 5 * std::sqrt(n * 0.231 * 0.769));
}

TEST(physical, flip_outcome) {
    RandomStream rng(5);
    int flips = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        ASSERT_EQ(flip_outcome(Outcome::plus, with(1, 1, 0), rng), Outcome::plus);
        ASSERT_EQ(flip_outcome(Outcome::minus, with(1, 1, 1), rng), Outcome::plus);
        flips += flip_outcome(Outcome::plus, with(1, 1, 0.0234), rng) == Outcome::minus;
    }
    EXPECT_NEAR(flips, n * 0.0234, 5 * std::sqrt(n * 0.0234 * 0.9766));
}

TEST(physical, validation) {
    EXPECT_THROW(validate(with(-1, 0.5, 0)), std::invalid_argument);
    EXPECT_THROW(validate(with(1, 1.5, 0)), std::invalid_argument);
    EXPECT_THROW(validate(with(1, 0.5, -0.1)), std::invalid_argument);
    EXPECT_NO_THROW(validate(kReferenceNoise));
}
