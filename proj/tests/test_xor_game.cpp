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

#include "lctc/xor_game.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace lctc;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

game::GameMatrix make_matrix(double m00, double m01, double m10, double m11) {
    game::GameMatrix m;
    m.m = {{{m00, m01}, {m10, m11}}};
    return m;
}

double correlator_value(const game::GameMatrix &m, const game::MeasurementAngles &angles) {
    const double ax[2] = {0.0, angles.theta};
    const double phi[2] = {angles.phi0, angles.phi1};
    double total = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) total += -m.m[x][y] * std::cos(ax[x] - phi[y]);
    }
    return total;
}

}  // namespace

TEST(InputDistribution, ValidatesNormalization) {
    EXPECT_NO_THROW(game::InputDistribution(0.25, 0.25, 0.25, 0.25));
    EXPECT_THROW(game::InputDistribution(0.3, 0.3, 0.3, 0.3), std::invalid_argument);
    EXPECT_THROW(game::InputDistribution(-0.1, 0.5, 0.3, 0.3), std::invalid_argument);
    // Degenerate entries are allowed.
    EXPECT_NO_THROW(game::InputDistribution(1.0, 0.0, 0.0, 0.0));
}

TEST(BuildGameMatrix, ChshFromUniformZeroBeta) {
    const auto m = game::build_game_matrix(game::InputDistribution::uniform(),
                                           game::UtilityWeights(0.0, 0.0));
    EXPECT_DOUBLE_EQ(m.m[0][0], 0.25);
    EXPECT_DOUBLE_EQ(m.m[0][1], 0.25);
    EXPECT_DOUBLE_EQ(m.m[1][0], 0.25);
    EXPECT_DOUBLE_EQ(m.m[1][1], -0.25);
}

TEST(BuildGameMatrix, HalfBetaKillsOffDiagonals) {
    const auto m = game::build_game_matrix(game::InputDistribution::uniform(),
                                           game::UtilityWeights(0.5, 0.5));
    EXPECT_DOUBLE_EQ(m.m[0][1], 0.0);
    EXPECT_DOUBLE_EQ(m.m[1][0], 0.0);
    EXPECT_DOUBLE_EQ(m.m[0][0], 0.25);
    EXPECT_DOUBLE_EQ(m.m[1][1], -0.25);
}

TEST(BuildGameMatrix, CorrelatedFamilyAgainstHandExpansion) {
    // P(1,1) = 0.4, P(0,1) = P(1,0) = 0.2, P(0,0) = 0.2; beta = 0.
    const auto dist = game::InputDistribution::correlated(0.4);
    EXPECT_DOUBLE_EQ(dist.p[0][0], 0.2);
    EXPECT_DOUBLE_EQ(dist.p[0][1], 0.2);
    const auto m = game::build_game_matrix(dist, game::UtilityWeights(0.0, 0.0));
    // Direct expansion of M_xy = P(x,y) [u(0|x,y) - u(1|x,y)]: only input
    // (1,1) rewards odd parity.
    EXPECT_DOUBLE_EQ(m.m[0][0], 0.2);
    EXPECT_DOUBLE_EQ(m.m[0][1], 0.2);
    EXPECT_DOUBLE_EQ(m.m[1][0], 0.2);
    EXPECT_DOUBLE_EQ(m.m[1][1], -0.4);
}

TEST(BuildGameMatrixGeneral, ChshPredicate) {
    const auto m = game::build_game_matrix_general(game::InputDistribution::uniform(),
                                                   game::UtilityTable::chsh());
    EXPECT_DOUBLE_EQ(m.m[0][0], 0.25);
    EXPECT_DOUBLE_EQ(m.m[0][1], 0.25);
    EXPECT_DOUBLE_EQ(m.m[1][0], 0.25);
    EXPECT_DOUBLE_EQ(m.m[1][1], -0.25);
}

TEST(BuildGameMatrixGeneral, ConstantUtilityGivesZeroMatrix) {
    game::UtilityTable table{};
    for (int o = 0; o < 2; ++o) {
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) table.u[o][x][y] = 0.37;
        }
    }
    const auto m = game::build_game_matrix_general(game::InputDistribution::uniform(), table);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) EXPECT_DOUBLE_EQ(m.m[x][y], 0.0);
    }
}

TEST(BuildGameMatrixGeneral, MatchesWeightedBuilder) {
    const auto dist = game::InputDistribution::uniform();
    const auto a = game::build_game_matrix(dist, game::UtilityWeights(0.2, 0.1));
    const auto b =
        game::build_game_matrix_general(dist, game::UtilityTable::load_balancing(0.2, 0.1));
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) EXPECT_DOUBLE_EQ(a.m[x][y], b.m[x][y]);
    }
}

TEST(ClassicalValue, Chsh) {
    const auto sol = game::classical_value(game::GameMatrix::chsh());
    EXPECT_DOUBLE_EQ(sol.value, 0.5);
    double check = 0.0;
    const auto m = game::GameMatrix::chsh();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) check += m.m[x][y] * sol.a_sign[x] * sol.b_sign[y];
    }
    EXPECT_DOUBLE_EQ(check, 0.5);
}

TEST(ClassicalValue, ZeroMatrixTieBreaksToAllMinusOne) {
    const auto sol = game::classical_value(make_matrix(0, 0, 0, 0));
    EXPECT_DOUBLE_EQ(sol.value, 0.0);
    EXPECT_EQ(sol.a_sign[0], -1);
    EXPECT_EQ(sol.a_sign[1], -1);
    EXPECT_EQ(sol.b_sign[0], -1);
    EXPECT_EQ(sol.b_sign[1], -1);
}

TEST(ClassicalValue, DiagonalMatrix) {
    EXPECT_DOUBLE_EQ(game::classical_value(make_matrix(0.25, 0, 0, 0.25)).value, 0.5);
    EXPECT_DOUBLE_EQ(game::classical_value(make_matrix(0.25, 0, 0, -0.25)).value, 0.5);
}

TEST(ClassicalValue, MatchesOracleOnRandomMatrices) {
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        EXPECT_NEAR(game::classical_value(m).value, oracle::classical_value_2x2(m.m), 1e-14);
    }
}

TEST(QuantumValue, ChshTsirelson) {
    const auto sol = game::quantum_value(game::GameMatrix::chsh());
    EXPECT_NEAR(sol.value, kInvSqrt2, 1e-9);
    EXPECT_NEAR(correlator_value(game::GameMatrix::chsh(), sol.angles), sol.value, 1e-9);
    // The textbook angle triple achieves the optimum up to the reflection
    // theta -> -theta.
    game::MeasurementAngles textbook{3.0 * M_PI / 2.0, 3.0 * M_PI / 4.0, -3.0 * M_PI / 4.0};
    EXPECT_NEAR(correlator_value(game::GameMatrix::chsh(), textbook), kInvSqrt2, 1e-12);
}

TEST(QuantumValue, DiagonalHasNoAdvantage) {
    EXPECT_NEAR(game::quantum_value(make_matrix(0.25, 0, 0, 0.25)).value, 0.5, 1e-10);
    EXPECT_NEAR(game::quantum_value(make_matrix(0.25, 0, 0, -0.25)).value, 0.5, 1e-10);
}

TEST(QuantumValue, ZeroMatrix) {
    EXPECT_DOUBLE_EQ(game::quantum_value(make_matrix(0, 0, 0, 0)).value, 0.0);
}

TEST(QuantumValue, MatchesGridOracleOnRandomMatrices) {
    std::mt19937_64 gen(777);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        const double impl = game::quantum_value(m).value;
        const double grid = oracle::quantum_value_grid(m.m, 72);
        EXPECT_NEAR(impl, grid, 1e-6);
        EXPECT_GE(impl, grid - 1e-9);  // the oracle's optimum is feasible
    }
}

TEST(QuantumValue, ChshSpectralNormIdentity) {
    // For the canonical game the planar optimum equals twice the largest
    // singular value of M; both singular values are sqrt(2)/4.
    const double q = game::quantum_value(game::GameMatrix::chsh()).value;
    EXPECT_NEAR(q, 2.0 * std::sqrt(2.0) / 4.0, 1e-9);
}

TEST(QuantumValue, AnglesReproduceValueOnRandomMatrices) {
    std::mt19937_64 gen(999);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        const auto sol = game::quantum_value(m);
        EXPECT_NEAR(correlator_value(m, sol.angles), sol.value, 1e-9);
    }
}

TEST(CombinedInfidelity, ReferenceBudget) {
    const double eps = game::combined_infidelity(game::NoiseModel(0.04, 0.002));
    EXPECT_GT(eps, 0.0605);
    EXPECT_LT(eps, 0.0612);
}

TEST(CombinedInfidelity, Zero) {
    EXPECT_DOUBLE_EQ(game::combined_infidelity(game::NoiseModel(0.0, 0.0)), 0.0);
}

TEST(CombinedInfidelity, DirectArithmetic) {
    const double expected = 1.0 - 0.96 * 0.98 * 0.98;
    EXPECT_NEAR(game::combined_infidelity(game::NoiseModel(0.03, 0.01)), expected, 1e-15);
}

TEST(CombinedInfidelity, RangeChecks) {
    EXPECT_THROW(game::NoiseModel(0.8, 0.0), std::invalid_argument);
    EXPECT_THROW(game::NoiseModel(0.0, 0.6), std::invalid_argument);
}

TEST(OmegaValues, ChshNoiseless) {
    const auto m = game::GameMatrix::chsh();
    EXPECT_DOUBLE_EQ(game::omega_classical(m), 0.75);
    EXPECT_NEAR(game::omega_quantum(0.0, m), 0.5 * (1.0 + kInvSqrt2), 1e-9);
    EXPECT_NEAR(game::gap(0.0, m), (std::sqrt(2.0) - 1.0) / 4.0, 1e-9);
}

TEST(OmegaValues, GapVanishesAtThreshold) {
    const auto m = game::GameMatrix::chsh();
    EXPECT_NEAR(game::gap(game::epsilon_threshold(m), m), 0.0, 1e-12);
}

TEST(OmegaValues, BetaGameAgainstOracles) {
    const auto m = game::build_game_matrix(game::InputDistribution::uniform(),
                                           game::UtilityWeights(0.3, 0.3));
    const double c = oracle::classical_value_2x2(m.m);
    const double q = oracle::quantum_value_grid(m.m, 72);
    EXPECT_NEAR(game::gap(0.0, m), 0.5 * (q - c), 1e-6);
}

TEST(EpsilonThreshold, Chsh) {
    EXPECT_NEAR(game::epsilon_threshold(game::GameMatrix::chsh()), 1.0 - kInvSqrt2, 1e-9);
}

TEST(EpsilonThreshold, DiagonalClampsToZero) {
    EXPECT_DOUBLE_EQ(game::epsilon_threshold(make_matrix(0.25, 0, 0, -0.25)), 0.0);
}

TEST(EpsilonThreshold, ScaleInvariant) {
    const auto m = game::build_game_matrix(game::InputDistribution::uniform(),
                                           game::UtilityWeights(0.2, 0.1));
    auto scaled = m;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) scaled.m[x][y] *= 3.7;
    }
    EXPECT_NEAR(game::epsilon_threshold(m), game::epsilon_threshold(scaled), 1e-12);
}

TEST(EpsilonThreshold, DegenerateGameThrows) {
    EXPECT_THROW(game::epsilon_threshold(make_matrix(0, 0, 0, 0)), game::DegenerateGameError);
}

TEST(Invariants, QuantumDominatesClassical) {
    std::mt19937_64 gen(4242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        EXPECT_GE(game::quantum_value(m).value, game::classical_value(m).value - 1e-10);
    }
}

TEST(Invariants, PositiveHomogeneity) {
    std::mt19937_64 gen(31337);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        const double c = scale(gen);
        auto scaled = m;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) scaled.m[x][y] *= c;
        }
        EXPECT_NEAR(game::classical_value(scaled).value, c * game::classical_value(m).value,
                    1e-10);
        EXPECT_NEAR(game::quantum_value(scaled).value, c * game::quantum_value(m).value, 1e-8);
    }
}

TEST(Invariants, SignFlipSymmetry) {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = make_matrix(dist(gen), dist(gen), dist(gen), dist(gen));
        for (int row = 0; row < 2; ++row) {
            auto flipped = m;
            flipped.m[row][0] *= -1.0;
            flipped.m[row][1] *= -1.0;
            EXPECT_NEAR(game::classical_value(flipped).value, game::classical_value(m).value,
                        1e-12);
            EXPECT_NEAR(game::quantum_value(flipped).value, game::quantum_value(m).value, 1e-8);
        }
        for (int col = 0; col < 2; ++col) {
            auto flipped = m;
            flipped.m[0][col] *= -1.0;
            flipped.m[1][col] *= -1.0;
            EXPECT_NEAR(game::classical_value(flipped).value, game::classical_value(m).value,
                        1e-12);
            EXPECT_NEAR(game::quantum_value(flipped).value, game::quantum_value(m).value, 1e-8);
        }
    }
}

TEST(Invariants, GapAffineInEpsilon) {
    const auto m = game::build_game_matrix(game::InputDistribution::bernoulli(0.3),
                                           game::UtilityWeights(0.1, 0.25));
    const double q = game::quantum_value(m).value;
    const double g0 = game::gap(0.0, m);
    for (double eps : {0.1, 0.25, 0.6}) {
        EXPECT_NEAR(game::gap(eps, m), g0 - eps * q / 2.0, 1e-12);
    }
}
