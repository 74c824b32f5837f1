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

#include "qss/phase.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "support/amplitude_model.hpp"

using namespace qss;

TEST(Phase8, arithmetic_is_mod_8) {
    EXPECT_EQ(Phase8(8).k(), 0);
    EXPECT_EQ(Phase8(-1).k(), 7);
    EXPECT_EQ((Phase8(6) + Phase8(5)).k(), 3);
    EXPECT_EQ((Phase8(1) - Phase8(2)).k(), 7);
    EXPECT_TRUE(Phase8(4).is_protocol_phase());
    EXPECT_FALSE(Phase8(5).is_protocol_phase());
}

TEST(phase_core, prepare) {
    EXPECT_EQ(prepare(0).phase, Phase8(0));
    EXPECT_EQ(prepare(2).phase, Phase8(2));
    EXPECT_EQ(prepare(1).phase, Phase8(1));
    // |+y> = (|0> + i|1>)/sqrt2
    auto y = qss_test::equator(prepare(2).phase.k());
    EXPECT_NEAR(y[1].real(), 0, 1e-15);
    EXPECT_NEAR(y[1].imag(), std::sqrt(0.5), 1e-15);
}

TEST(phase_core, apply_phase) {
    EXPECT_EQ(apply_phase(prepare(0), 0).phase, Phase8(0));
    EXPECT_EQ(apply_phase(prepare(2), 6).phase, Phase8(0));
    EquatorState s = prepare(0);
    for (int phi : {2, 2, 4, 0, 6}) {
        s = apply_phase(s, phi);
    }
    EXPECT_EQ(s.phase, Phase8(6));
}

TEST(phase_core, accumulation_matches_sum_mod_8) {
    RandomStream rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        int start = static_cast<int>(rng.uniform_below(8));
        int len = static_cast<int>(rng.uniform_below(12));
        std::vector<Phase8> seq;
        int total = start;
        EquatorState s = prepare(start);
        for (int i = 0; i < len; ++i) {
            int k = static_cast<int>(rng.uniform_below(8));
            seq.push_back(k);
            total += k;
            s = apply_phase(s, k);
        }
        ASSERT_EQ(s.phase.k(), total % 8);
        // commutative: reversed order gives the same state
        EquatorState r = prepare(start);
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) r = apply_phase(r, *it);
        ASSERT_EQ(r, s);
    }
}

TEST(phase_core, prob_plus_examples) {
    EXPECT_EQ(prob_plus(prepare(0), 0), ExactProb(4, 0));
    EXPECT_EQ(prob_plus(prepare(2), 0), ExactProb(2, 0));
    EXPECT_EQ(prob_plus(prepare(1), 0), ExactProb(2, 1));
    EXPECT_NEAR(prob_plus(prepare(1), 0).value(), 0.85355339059, 1e-10);
}

TEST(phase_core, prob_plus_matches_amplitude_model_for_all_pairs) {
    for (int k = 0; k < 8; ++k) {
        for (int b = 0; b < 8; ++b) {
            double ref = qss_test::p_plus(qss_test::equator(k), b);
            ExactProb p = prob_plus(prepare(k), b);
            EXPECT_NEAR(p.value(), ref, 1e-14) << k << " " << b;
            EXPECT_NEAR(p.to_exact().to_double(), ref, 1e-14);
        }
    }
}

TEST(phase_core, probabilities_complement_and_depend_on_difference) {
    for (int k = 0; k < 8; ++k) {
        for (int b = 0; b < 8; ++b) {
            EquatorState s = prepare(k);
            EXPECT_EQ(prob_plus(s, b).to_exact() + prob_minus(s, b).to_exact(), Exact(1));
            EXPECT_EQ(prob_plus(s, b), prob_plus(prepare(k - b), 0));
        }
    }
}

TEST(ExactProb, only_five_values) {
    EXPECT_NO_THROW(ExactProb(0, 0));
    EXPECT_NO_THROW(ExactProb(2, -1));
    EXPECT_NO_THROW(ExactProb(4, 0));
    EXPECT_THROW(ExactProb(3, 0), std::invalid_argument);
    EXPECT_THROW(ExactProb(4, 1), std::invalid_argument);
    EXPECT_THROW(ExactProb(0, 1), std::invalid_argument);
}

TEST(ExactCos, values) {
    EXPECT_EQ(ExactCos(0).to_exact(), Exact(1));
    EXPECT_EQ(ExactCos(4).to_exact(), Exact(-1));
    EXPECT_EQ(ExactCos(2).to_exact(), Exact(0));
    EXPECT_EQ(ExactCos(7).to_exact(), Exact(Rational(0), Rational(1, 2)));
    for (int k = 0; k < 8; ++k) {
        EXPECT_NEAR(ExactCos(k).value(), std::cos(k * M_PI / 4), 1e-15);
    }
}

TEST(phase_core, measure_deterministic_cases) {
    RandomStream rng(11);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(measure(prepare(0), 0, rng), Outcome::plus);
        ASSERT_EQ(measure(prepare(4), 0, rng), Outcome::minus);
    }
    EXPECT_EQ(rng.draws(), 2000u);
}

TEST(phase_core, measure_frequencies_converge) {
    const int n = 100000;
    for (int k = 0; k < 8; ++k) {
        RandomStream rng(100 + k);
        long sum = 0;
        for (int i = 0; i < n; ++i) sum += sign(measure(prepare(k), 0, rng));
        double p = prob_plus(prepare(k), 0).value();
        double mean = static_cast<double>(sum) / n;
        double se = 2 * std::sqrt(p * (1 - p) / n);  // sd of the +-1 mean
        EXPECT_NEAR(mean, 2 * p - 1, 5 * se + 1e-12) << "phase " << k;
        if (k == 2) {
            EXPECT_NEAR(mean, 0.0, 0.02);
        }
    }
}
