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

#ifndef LCTC_MULTIPARTY_HPP
#define LCTC_MULTIPARTY_HPP

#include <array>
#include <stdexcept>

namespace lctc::multiparty {

/// Distribution over the 8 three-party inputs. Index packs the bits as
/// (x1 << 2) | (x2 << 1) | x3.
struct MultiInputDistribution {
    std::array<double, 8> p{};

    explicit MultiInputDistribution(const std::array<double, 8> &probs);
    static MultiInputDistribution uniform();
    /// Independent Bernoulli(prob_one) inputs for every party.
    static MultiInputDistribution bernoulli(double prob_one);
};

/// Majority-vote XOR game with softness beta on inputs whose Hamming weight
/// is not 0 mod 3.
struct ThreePartyGame {
    std::array<double, 8> m{};
    double beta = 0.0;
};

/// GHZ-strategy measurement angles (phi0..phi3).
struct GhzAngles {
    std::array<double, 4> phi{};
};

struct GhzNoise {
    double eps_ghz = 0.0;
    double eps_meas = 0.0;

    GhzNoise() = default;
    GhzNoise(double ghz_infidelity, double measurement_flip_prob);
};

struct ClassicalSolution3 {
    double value = 0.0;
    // response[i] = {a_i(0), a_i(1)} for party i.
    std::array<std::array<int, 2>, 3> response{};
};

struct QuantumSolution3 {
    double value = 0.0;
    GhzAngles angles;
};

struct GhzThresholdResult {
    bool advantage = false;
    double margin = 0.0;     // threshold - eps_prime
    double threshold = 0.0;  // largest eps_prime with a positive gap
    double gap = 0.0;        // quantum-classical gap at eps_prime
};

/// Parity-conditional three-party behavior P(a | x) as an 8x8 table indexed
/// by packed input and output triples.
struct BehaviorThree {
    double p[8][8] = {};
    /// Largest deviation of any single- or two-party marginal across the
    /// settings of the remaining parties.
    double no_signaling_defect() const;
};

/// M_x = P(x) (-1)^Maj(x) for wt(x) in {0, 3}, with the extra (1 - 2 beta)
/// factor otherwise.
ThreePartyGame build_three_party(const MultiInputDistribution &dist, double beta);

/// Exact maximum over the 64 deterministic response tables.
ClassicalSolution3 classical_value_three(const ThreePartyGame &g);

/// Q3 = max over angles of sum_x M_x cos(phi0 + sum_i phi_i x_i), computed
/// by reducing phi0 in closed form and multi-start local search over the
/// remaining three angles.
QuantumSolution3 quantum_value_three(const ThreePartyGame &g);

/// eps' = 1 - (1 - 8 eps_ghz / 7)(1 - 2 eps_meas)^3.
double ghz_combined_infidelity(const GhzNoise &noise);

/// Gap at eps' is Delta(0) - eps' (omega_Q(0) - 1/2); the advantage region is
/// eps' < Delta(0) / (omega_Q(0) - 1/2).
GhzThresholdResult ghz_threshold(const ThreePartyGame &g, double eps_prime);

/// Parity distribution P(o|x) = [1 + (-1)^o (1 - eps') cos(phi0 + s_x)] / 2
/// with the four parity-consistent output triples equiprobable (lower-order
/// GHZ correlators vanish for equatorial measurements).
BehaviorThree behavior_three(double eps_prime, const GhzAngles &angles);

}  // namespace lctc::multiparty

#endif
