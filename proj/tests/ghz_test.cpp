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

#include "qss/ghz.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "support/amplitude_model.hpp"

using namespace qss;

namespace {

GHZSetting setting(std::initializer_list<int> ks) {
    return GHZSetting(std::vector<Phase8>(ks.begin(), ks.end()));
}

std::vector<GHZOutcome> all_outcomes(std::size_t n) {
    std::vector<GHZOutcome> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        GHZOutcome o;
        for (std::size_t j = 0; j < n; ++j) o.results.push_back(m >> j & 1u ? Outcome::minus : Outcome::plus);
        out.push_back(o);
    }
    return out;
}

}  // namespace

TEST(ghz, setting_needs_two_parties) {
    EXPECT_THROW(setting({0}), std::invalid_argument);
}

TEST(ghz, correlation_examples) {
    EXPECT_EQ(ghz_correlation(setting({0, 0, 0})).to_exact(), Exact(1));
    EXPECT_EQ(ghz_correlation(setting({2, 2, 0})).to_exact(), Exact(-1));
    EXPECT_EQ(ghz_correlation(setting({2, 0, 0})).to_exact(), Exact(0));
}

TEST(ghz, correlation_matches_state_vector) {
    RandomStream rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_below(6));
        std::vector<int> ks;
        std::vector<Phase8> ps;
        for (int j = 0; j < n; ++j) {
            ks.push_back(static_cast<int>(rng.uniform_below(8)));
            ps.push_back(ks.back());
        }
        EXPECT_NEAR(ghz_correlation(GHZSetting(ps)).value(), qss_test::ghz_expectation(ks), 1e-12);
    }
}

TEST(ghz, joint_distribution_sums_to_one_exactly) {
    for (auto s : {setting({0, 0}), setting({1, 2, 3}), setting({2, 2, 2, 2}), setting({1, 0, 0, 0, 0, 0}),
                   setting({6, 4, 2, 0, 1, 3, 5})}) {
        Exact total;
        for (const auto &o : all_outcomes(s.size())) {
            Exact p = ghz_joint_probability(s, o);
            ASSERT_GE(p.to_double(), 0.0);
            total += p;
        }
        EXPECT_EQ(total, Exact(1));
    }
}

TEST(ghz, proper_subset_marginals_are_uniform) {
    GHZSetting s = setting({1, 2, 0, 4});
    // Marginal of the first three results: sum over the last one.
    auto outcomes = all_outcomes(4);
    for (std::uint32_t m = 0; m < 8; ++m) {
        Exact marginal;
        for (const auto &o : outcomes) {
            std::uint32_t head = 0;
            for (int j = 0; j < 3; ++j) head |= (o.results[j] == Outcome::minus ? 1u : 0u) << j;
            if (head == m) marginal += ghz_joint_probability(s, o);
        }
        EXPECT_EQ(marginal, Exact(Rational(1, 8)));
    }
}

TEST(ghz, sampler_examples) {
    RandomStream rng(31);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(ghz_sample(setting({0, 0, 0}), rng).product(), 1);
    }
    const int n = 100000;
    int even = 0;
    int first_plus = 0;
    for (int i = 0; i < n; ++i) {
        auto o = ghz_sample(setting({2, 0, 0}), rng);
        even += o.product() == 1;
        first_plus += o.results[0] == Outcome::plus;
    }
    const double sd = std::sqrt(n * 0.25);
    EXPECT_NEAR(even, n / 2.0, 5 * sd);
    EXPECT_NEAR(first_plus, n / 2.0, 5 * sd);
}

TEST(ghz, equivalence_check) {
    EXPECT_TRUE(equivalence_check(2));
    auto r = equivalence_check(4);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.assignments, 16u + 64u + 256u + 1024u);
    EXPECT_THROW(equivalence_check(7), std::invalid_argument);
}

TEST(ghz, equivalence_examples) {
    std::vector<Phase8> zero{0, 4, 4};
    EXPECT_EQ(expectation_A(zero), Exact(1));
    EXPECT_EQ(ghz_correlation(GHZSetting(zero)).to_exact(), Exact(1));
    std::vector<Phase8> odd_quarter{2, 4, 0, 0};
    EXPECT_EQ(expectation_A(odd_quarter), Exact(0));
    EXPECT_EQ(ghz_correlation(GHZSetting(odd_quarter)).to_exact(), Exact(0));
}
