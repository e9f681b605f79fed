// Copyright 2026 The qaeortho Authors
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

#include "qaeortho/probability_model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace qaeortho {
namespace {

TEST(GroverProb, SpecExamples) {
    EXPECT_DOUBLE_EQ(grover_prob(std::numbers::pi / 4, 0.7, 0), 0.5);
    EXPECT_DOUBLE_EQ(grover_prob(0.3, 0.0, 5), 0.5);
    const double s = std::sin(0.35);
    EXPECT_NEAR(grover_prob(0.35, 1.0, 0), s * s, 1e-15);
}

TEST(GroverProb, NoiselessMatchesRotatedAngle) {
    for (int m = 0; m < 20; ++m) {
        const double s = std::sin((2 * m + 1) * 0.21);
        EXPECT_NEAR(grover_prob(0.21, 1.0, m), s * s, 1e-13) << m;
    }
}

TEST(GroverProb, RejectsOutOfDomain) {
    EXPECT_THROW(grover_prob(-0.1, 0.5, 1), DomainError);
    EXPECT_THROW(grover_prob(1.6, 0.5, 1), DomainError);
    EXPECT_THROW(grover_prob(0.3, 1.5, 1), DomainError);
    EXPECT_THROW(grover_prob(0.3, -0.1, 1), DomainError);
    EXPECT_THROW(grover_prob(0.3, 0.5, -1), DomainError);
    EXPECT_THROW(grover_prob(std::nan(""), 0.5, 1), DomainError);
}

TEST(AncillaryProb, SpecExamples) {
    for (double theta : {0.05, 0.35, 1.2}) {
        EXPECT_DOUBLE_EQ(ancillary_prob(theta, 0.6, 2), grover_prob(theta, 0.6, 0));
        EXPECT_DOUBLE_EQ(ancillary_prob(theta, 0.6, 1), ancillary_prob(theta, 0.6, 2));
    }
    EXPECT_DOUBLE_EQ(ancillary_prob(0.1, 0.0, 3), 0.5);
    EXPECT_THROW(ancillary_prob(0.1, 0.5, 0), DomainError);
}

TEST(AncillaryProb, LagsGroverByTwoApplications) {
    for (int m = 2; m < 12; ++m) {
        EXPECT_DOUBLE_EQ(ancillary_prob(0.4, 0.8, m), grover_prob(0.4, 0.8, m - 2));
    }
}

TEST(DepolarizingBeta, SpecExamples) {
    EXPECT_EQ(depolarizing_beta(0.0, 17), 1.0);
    EXPECT_EQ(depolarizing_beta(0.01, 0), 1.0);
    EXPECT_DOUBLE_EQ(depolarizing_beta(0.01, 1), std::exp(-0.01));
    EXPECT_THROW(depolarizing_beta(-0.1, 1), DomainError);
    EXPECT_THROW(depolarizing_beta(0.1, -1), DomainError);
}

TEST(DepolarizingBeta, LongDoubleAgrees) {
    for (int m : {1, 8, 64, 128}) {
        const long double ref = depolarizing_beta<long double>(0.01L, m);
        EXPECT_NEAR(depolarizing_beta(0.01, m), static_cast<double>(ref), 1e-15);
    }
}

TEST(DepolarizingNoise, FollowsSchedule) {
    const Schedule s = Schedule::exponential(8, 50, 50);
    const NoiseVector beta = depolarizing_noise({0.01}, s);
    ASSERT_EQ(beta.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_DOUBLE_EQ(beta[k], std::exp(-0.01 * s.m[k]));
    }
}

TEST(Schedule, ExponentialAndPrefix) {
    const Schedule s = Schedule::exponential(4, 10, 20);
    EXPECT_EQ(s.m, (std::vector<int>{1, 2, 4, 8}));
    EXPECT_EQ(s.max_m(), 8);
    const Schedule p = s.prefix(2);
    EXPECT_EQ(p.m, (std::vector<int>{1, 2}));
    EXPECT_EQ(p.n_shot, 10);
    EXPECT_EQ(p.n_shot_prime, 20);
    EXPECT_THROW(s.prefix(0), DimensionError);
    EXPECT_THROW(s.prefix(5), DimensionError);
}

TEST(Schedule, Validation) {
    EXPECT_NO_THROW((Schedule{{0, 1, 3}, 1, 1}.validate()));
    EXPECT_THROW((Schedule{{}, 1, 1}.validate()), DomainError);
    EXPECT_THROW((Schedule{{-1}, 1, 1}.validate()), DomainError);
    EXPECT_THROW((Schedule{{1}, 0, 1}.validate()), DomainError);
    EXPECT_THROW((Schedule{{1}, 1, 0}.validate()), DomainError);
    EXPECT_TRUE((Schedule{{0, 2}, 1, 1}.has_ancillary(1)));
    EXPECT_FALSE((Schedule{{0, 2}, 1, 1}.has_ancillary(0)));
}

TEST(NoiseVector, RejectsOutOfRange) {
    EXPECT_THROW(NoiseVector({0.5, 1.01}), DomainError);
    EXPECT_THROW(NoiseVector({-0.01}), DomainError);
    EXPECT_NO_THROW(NoiseVector({0.0, 1.0}));
}

}  // namespace
}  // namespace qaeortho
