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

#ifndef LCTC_XOR_GAME_HPP
#define LCTC_XOR_GAME_HPP

#include <array>
#include <stdexcept>

namespace lctc::game {

/// A game whose quantum value vanishes, so noise thresholds are undefined.
struct DegenerateGameError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Joint distribution P(x, y) over the binary inputs of the two parties.
struct InputDistribution {
    // p[x][y]
    std::array<std::array<double, 2>, 2> p;

    InputDistribution(double p00, double p01, double p10, double p11);

    static InputDistribution uniform();
    /// Independent inputs, each Bernoulli(prob_one).
    static InputDistribution bernoulli(double prob_one);
    /// Correlated family P(1,1) = 2 P(0,1) = 2 P(1,0) = p11, P(0,0) = 1 - 2 p11.
    static InputDistribution correlated(double p11);
};

/// Mismatch penalties for the load-balancing utility. beta1 applies to input
/// (0,1), beta2 to (1,0).
struct UtilityWeights {
    double beta1 = 0.0;
    double beta2 = 0.0;

    UtilityWeights() = default;
    UtilityWeights(double b1, double b2);
};

/// XOR utility table u(o | x, y) for parity outcome o.
struct UtilityTable {
    // u[o][x][y]
    std::array<std::array<std::array<double, 2>, 2>, 2> u;

    /// Win iff a xor b == x*y.
    static UtilityTable chsh();
    /// Asymmetric coordination utility with mismatch penalties beta1, beta2.
    /// Reduces to chsh() at beta1 = beta2 = 0.
    static UtilityTable load_balancing(double beta1, double beta2);
};

/// Weight matrix M_{x,y} = P(x,y) [u(0|x,y) - u(1|x,y)] characterizing an
/// XOR game. Strategies maximize sum_{x,y} M_{x,y} E_{x,y}.
struct GameMatrix {
    // m[x][y]
    std::array<std::array<double, 2>, 2> m{};

    static GameMatrix chsh();
};

/// Planar measurement axes: Alice's first axis is fixed along angle 0, her
/// second at `theta`; Bob's axes lie at `phi0`, `phi1`. All in the equatorial
/// plane of the Bloch sphere.
struct MeasurementAngles {
    double theta = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
};

/// Werner-state entanglement infidelity plus independent measurement flips.
struct NoiseModel {
    double eps_s = 0.0;
    double eps_meas = 0.0;

    NoiseModel() = default;
    NoiseModel(double entanglement_infidelity, double measurement_flip_prob);
};

struct ClassicalSolution {
    double value = 0.0;
    // Deterministic +-1 assignments n_{a,x} and n_{b,y} achieving `value`.
    std::array<int, 2> a_sign{1, 1};
    std::array<int, 2> b_sign{1, 1};
};

struct QuantumSolution {
    double value = 0.0;
    MeasurementAngles angles;
};

GameMatrix build_game_matrix(const InputDistribution &dist, const UtilityWeights &weights);
GameMatrix build_game_matrix_general(const InputDistribution &dist, const UtilityTable &utility);

/// Best deterministic strategy value C(M) by enumeration of the 16 sign
/// assignments. Ties resolve to the lexicographically smallest signs with
/// -1 ordered before +1.
ClassicalSolution classical_value(const GameMatrix &m);

/// Optimal planar quantum value Q(M) and achieving measurement angles.
/// For fixed Alice axes the optimal Bob axis is antiparallel to
/// sum_x M_{x,y} a_x, giving Q(theta) = sum_y |M_{0,y} a_0 + M_{1,y} a_1|;
/// the outer 1-D search uses a dense grid plus golden-section refinement.
QuantumSolution quantum_value(const GameMatrix &m);

/// epsilon = 1 - (1 - 4 eps_s / 3)(1 - 2 eps_meas)^2.
double combined_infidelity(const NoiseModel &noise);
/// Same contraction evaluated on raw values, without the NoiseModel range
/// checks (used for memory-adjusted budgets that may exceed the Werner cap).
double combined_infidelity_raw(double eps_s, double eps_meas);

double omega_classical(const GameMatrix &m);
double omega_quantum(double eps, const GameMatrix &m);
/// Quantum-classical gap [(1 - eps) Q(M) - C(M)] / 2.
double gap(double eps, const GameMatrix &m);

/// Largest combined infidelity with a positive gap: 1 - C(M)/Q(M), clamped
/// at zero when C >= Q. Throws DegenerateGameError when Q(M) == 0.
double epsilon_threshold(const GameMatrix &m);

}  // namespace lctc::game

#endif
