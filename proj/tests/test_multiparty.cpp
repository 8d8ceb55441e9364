// Copyright 2026 LCTC Contributors
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

#include "lctc/multiparty.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace lctc;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int popcount3(int x) { return ((x >> 2) & 1) + ((x >> 1) & 1) + (x & 1); }

double cosine_value(const multiparty::ThreePartyGame &g, const multiparty::GhzAngles &angles) {
    double total = 0.0;
    for (int idx = 0; idx < 8; ++idx) {
        const double s = angles.phi[0] + angles.phi[1] * ((idx >> 2) & 1) +
                         angles.phi[2] * ((idx >> 1) & 1) + angles.phi[3] * (idx & 1);
        total += g.m[idx] * std::cos(s);
    }
    return total;
}

double behavior_omega(const multiparty::ThreePartyGame &g,
                      const multiparty::MultiInputDistribution &dist,
                      const multiparty::BehaviorThree &behavior) {
    // Full 64-term expectation of the majority utility with softness beta.
    double omega = 0.0;
    for (int x = 0; x < 8; ++x) {
        const int wt = popcount3(x);
        const int maj = wt >= 2 ? 1 : 0;
        for (int a = 0; a < 8; ++a) {
            const int o = popcount3(a) & 1;
            double u = (o == maj) ? 1.0 : 0.0;
            if (wt == 1 || wt == 2) u = (1.0 - g.beta) * u + g.beta * (1.0 - u);
            omega += dist.p[x] * u * behavior.p[x][a];
        }
    }
    return omega;
}

}  // namespace

TEST(BuildThreeParty, UniformZeroBeta) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    for (int idx = 0; idx < 8; ++idx) {
        EXPECT_DOUBLE_EQ(std::abs(g.m[idx]), 0.125);
        const int maj = popcount3(idx) >= 2 ? 1 : 0;
        EXPECT_DOUBLE_EQ(g.m[idx], maj ? -0.125 : 0.125);
    }
}

TEST(BuildThreeParty, HalfBetaKeepsOnlyUnanimousInputs) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.5);
    for (int idx = 0; idx < 8; ++idx) {
        if (idx == 0 || idx == 7) {
            EXPECT_NE(g.m[idx], 0.0);
        } else {
            EXPECT_DOUBLE_EQ(g.m[idx], 0.0);
        }
    }
}

TEST(BuildThreeParty, BernoulliWeights) {
    const double p = 0.3;
    const auto dist = multiparty::MultiInputDistribution::bernoulli(p);
    for (int idx = 0; idx < 8; ++idx) {
        const int wt = popcount3(idx);
        EXPECT_NEAR(dist.p[idx], std::pow(p, wt) * std::pow(1.0 - p, 3 - wt), 1e-15);
    }
}

TEST(ClassicalValueThree, UniformMajorityGame) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    const auto sol = multiparty::classical_value_three(g);
    EXPECT_NEAR(sol.value, 0.5, 1e-12);  // omega_C = 3/4
    // The response table must reproduce the value.
    double check = 0.0;
    for (int idx = 0; idx < 8; ++idx) {
        const int parity = sol.response[0][(idx >> 2) & 1] ^ sol.response[1][(idx >> 1) & 1] ^
                           sol.response[2][idx & 1];
        check += g.m[idx] * (parity ? -1.0 : 1.0);
    }
    EXPECT_NEAR(check, sol.value, 1e-15);
}

TEST(ClassicalValueThree, HalfBetaIdentityStrategy) {
    const auto dist = multiparty::MultiInputDistribution::bernoulli(0.35);
    const auto g = multiparty::build_three_party(dist, 0.5);
    const auto sol = multiparty::classical_value_three(g);
    EXPECT_NEAR(sol.value, dist.p[0] + dist.p[7], 1e-14);
}

TEST(ClassicalValueThree, ZeroGame) {
    multiparty::ThreePartyGame g{};
    EXPECT_DOUBLE_EQ(multiparty::classical_value_three(g).value, 0.0);
}

TEST(QuantumValueThree, UniformMajorityGame) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    const auto sol = multiparty::quantum_value_three(g);
    EXPECT_NEAR(sol.value, kInvSqrt2, 1e-9);
    // The canonical angle solution achieves the same value.
    multiparty::GhzAngles canonical{{-M_PI / 4.0, M_PI / 2.0, M_PI / 2.0, M_PI / 2.0}};
    EXPECT_NEAR(cosine_value(g, canonical), kInvSqrt2, 1e-12);
    // Returned angles achieve the reported value.
    EXPECT_NEAR(cosine_value(g, sol.angles), sol.value, 1e-9);
}

TEST(QuantumValueThree, HalfBetaHasNoAdvantage) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::bernoulli(0.4), 0.5);
    const auto quantum = multiparty::quantum_value_three(g);
    const auto classical = multiparty::classical_value_three(g);
    EXPECT_NEAR(quantum.value, classical.value, 1e-9);
}

TEST(QuantumValueThree, ZeroGame) {
    multiparty::ThreePartyGame g{};
    EXPECT_DOUBLE_EQ(multiparty::quantum_value_three(g).value, 0.0);
}

TEST(QuantumValueThree, MatchesGridOracle) {
    std::mt19937_64 gen(8080);
    std::uniform_real_distribution<double> weight(-0.2, 0.2);
    for (int trial = 0; trial < 10; ++trial) {
        multiparty::ThreePartyGame g{};
        for (int idx = 0; idx < 8; ++idx) g.m[idx] = weight(gen);
        const double impl = multiparty::quantum_value_three(g).value;
        const double grid = oracle::quantum_value_three_grid(g.m, 40);
        EXPECT_NEAR(impl, grid, 1e-6);
        EXPECT_GE(impl, grid - 1e-9);
    }
}

TEST(QuantumValueThree, DominatesClassicalOnRandomGames) {
    std::mt19937_64 gen(9090);
    std::uniform_real_distribution<double> weight(-0.2, 0.2);
    for (int trial = 0; trial < 40; ++trial) {
        multiparty::ThreePartyGame g{};
        for (int idx = 0; idx < 8; ++idx) g.m[idx] = weight(gen);
        EXPECT_GE(multiparty::quantum_value_three(g).value,
                  multiparty::classical_value_three(g).value - 1e-9);
    }
}

TEST(QuantumValueThree, RelabelingInvariance) {
    std::mt19937_64 gen(616);
    std::uniform_real_distribution<double> weight(-0.2, 0.2);
    for (int trial = 0; trial < 10; ++trial) {
        multiparty::ThreePartyGame g{};
        for (int idx = 0; idx < 8; ++idx) g.m[idx] = weight(gen);
        for (int party = 0; party < 3; ++party) {
            multiparty::ThreePartyGame flipped{};
            const int bit = 4 >> party;
            for (int idx = 0; idx < 8; ++idx) flipped.m[idx ^ bit] = g.m[idx];
            EXPECT_NEAR(multiparty::quantum_value_three(flipped).value,
                        multiparty::quantum_value_three(g).value, 1e-8);
        }
    }
}

TEST(GhzCombinedInfidelity, Examples) {
    EXPECT_DOUBLE_EQ(multiparty::ghz_combined_infidelity(multiparty::GhzNoise(0.0, 0.0)), 0.0);
    const double expected = 1.0 - (1.0 - 0.4 / 7.0) * 0.98 * 0.98 * 0.98;
    EXPECT_NEAR(multiparty::ghz_combined_infidelity(multiparty::GhzNoise(0.05, 0.01)), expected,
                1e-15);
    EXPECT_THROW(multiparty::GhzNoise(0.9, 0.0), std::invalid_argument);
}

TEST(GhzThreshold, MatchesTwoPartyBenchmark) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    const auto result = multiparty::ghz_threshold(g, 0.0);
    EXPECT_NEAR(result.threshold, 1.0 - kInvSqrt2, 1e-9);
    EXPECT_TRUE(result.advantage);
}

TEST(GhzThreshold, MarginAffineInEpsPrime) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::bernoulli(0.45), 0.1);
    const double omega_q0 = 0.5 * (1.0 + multiparty::quantum_value_three(g).value);
    const auto at0 = multiparty::ghz_threshold(g, 0.0);
    for (double eps : {0.05, 0.1, 0.2}) {
        const auto at_eps = multiparty::ghz_threshold(g, eps);
        EXPECT_NEAR(at_eps.gap, at0.gap - eps * (omega_q0 - 0.5), 1e-12);
        EXPECT_NEAR(at_eps.margin, at0.margin - eps, 1e-12);
    }
}

TEST(BehaviorThree, FullyMixedAtMaxNoise) {
    multiparty::GhzAngles angles{{0.3, 1.0, 2.0, 0.5}};
    const auto behavior = multiparty::behavior_three(1.0, angles);
    for (int x = 0; x < 8; ++x) {
        for (int a = 0; a < 8; ++a) EXPECT_NEAR(behavior.p[x][a], 0.125, 1e-15);
    }
}

TEST(BehaviorThree, OptimalAnglesReachQuantumValue) {
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    const auto sol = multiparty::quantum_value_three(g);
    const auto behavior = multiparty::behavior_three(0.0, sol.angles);
    const double omega =
        behavior_omega(g, multiparty::MultiInputDistribution::uniform(), behavior);
    EXPECT_NEAR(omega, 0.5 * (1.0 + kInvSqrt2), 1e-9);
}

TEST(BehaviorThree, UniformSingleAndTwoPartyMarginals) {
    multiparty::GhzAngles angles{{0.7, 2.1, 0.4, 5.0}};
    const auto behavior = multiparty::behavior_three(0.2, angles);
    EXPECT_LT(behavior.no_signaling_defect(), 1e-12);
    // Single-party marginals are exactly uniform for every setting.
    for (int x = 0; x < 8; ++x) {
        for (int party = 0; party < 3; ++party) {
            const int bit = 4 >> party;
            double marginal = 0.0;
            for (int a = 0; a < 8; ++a) {
                if (a & bit) marginal += behavior.p[x][a];
            }
            EXPECT_NEAR(marginal, 0.5, 1e-15);
        }
    }
}

TEST(BehaviorThree, CertificationReusesTwoPartyMachinery) {
    // The binomial certification applies unchanged with three-party values.
    const auto g =
        multiparty::build_three_party(multiparty::MultiInputDistribution::uniform(), 0.0);
    const double omega_c = 0.5 * (1.0 + multiparty::classical_value_three(g).value);
    const double omega_q = 0.5 * (1.0 + multiparty::quantum_value_three(g).value);
    EXPECT_NEAR(omega_c, 0.75, 1e-12);
    EXPECT_NEAR(omega_q, 0.5 * (1.0 + kInvSqrt2), 1e-9);
}

TEST(MultiInputDistribution, Validation) {
    std::array<double, 8> bad{0.5, 0.5, 0.5, 0, 0, 0, 0, 0};
    EXPECT_THROW(multiparty::MultiInputDistribution{bad}, std::invalid_argument);
}
