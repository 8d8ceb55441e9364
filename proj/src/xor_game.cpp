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
#include <limits>

namespace lctc::game {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_probability(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

// Q restricted to Alice angle theta, maximized in closed form over Bob's axes.
double q_of_theta(const GameMatrix &m, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double total = 0.0;
    for (int y = 0; y < 2; ++y) {
        const double vx = m.m[0][y] + m.m[1][y] * c;
        const double vy = m.m[1][y] * s;
        total += std::hypot(vx, vy);
    }
    return total;
}

double golden_section_max(const GameMatrix &m, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = q_of_theta(m, x1);
    double f2 = q_of_theta(m, x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = q_of_theta(m, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = q_of_theta(m, x1);
        }
    }
    return 0.5 * (a + b);
}

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

}  // namespace

InputDistribution::InputDistribution(double p00, double p01, double p10, double p11) {
    check_probability(p00, "P(0,0)");
    check_probability(p01, "P(0,1)");
    check_probability(p10, "P(1,0)");
    check_probability(p11, "P(1,1)");
    const double sum = p00 + p01 + p10 + p11;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("input distribution must sum to 1");
    }
    p = {{{p00, p01}, {p10, p11}}};
}

InputDistribution InputDistribution::uniform() {
    return InputDistribution(0.25, 0.25, 0.25, 0.25);
}

InputDistribution InputDistribution::bernoulli(double prob_one) {
    check_probability(prob_one, "bernoulli parameter");
    const double q = 1.0 - prob_one;
    return InputDistribution(q * q, q * prob_one, prob_one * q, prob_one * prob_one);
}

InputDistribution InputDistribution::correlated(double p11) {
    if (!(p11 >= 0.0 && p11 <= 0.5)) {
        throw std::invalid_argument("correlated family requires p11 in [0, 0.5]");
    }
    return InputDistribution(1.0 - 2.0 * p11, 0.5 * p11, 0.5 * p11, p11);
}

UtilityWeights::UtilityWeights(double b1, double b2) : beta1(b1), beta2(b2) {
    check_probability(b1, "beta1");
    check_probability(b2, "beta2");
}

UtilityTable UtilityTable::chsh() {
    UtilityTable t{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const int win_parity = x & y;
            t.u[win_parity][x][y] = 1.0;
            t.u[1 - win_parity][x][y] = 0.0;
        }
    }
    return t;
}

UtilityTable UtilityTable::load_balancing(double beta1, double beta2) {
    UtilityWeights check(beta1, beta2);
    UtilityTable t{};
    // Matched inputs reward agreement on the designated parity; mixed inputs
    // split the unit reward as (1 - beta) vs beta.
    t.u[0][0][0] = 1.0;
    t.u[1][0][0] = 0.0;
    t.u[1][1][1] = 1.0;
    t.u[0][1][1] = 0.0;
    t.u[0][0][1] = 1.0 - check.beta1;
    t.u[1][0][1] = check.beta1;
    t.u[0][1][0] = 1.0 - check.beta2;
    t.u[1][1][0] = check.beta2;
    return t;
}

GameMatrix GameMatrix::chsh() {
    GameMatrix m;
    m.m = {{{0.25, 0.25}, {0.25, -0.25}}};
    return m;
}

NoiseModel::NoiseModel(double entanglement_infidelity, double measurement_flip_prob)
    : eps_s(entanglement_infidelity), eps_meas(measurement_flip_prob) {
    if (!(eps_s >= 0.0 && eps_s <= 0.75)) {
        throw std::invalid_argument("eps_s must lie in [0, 3/4]");
    }
    if (!(eps_meas >= 0.0 && eps_meas <= 0.5)) {
        throw std::invalid_argument("eps_meas must lie in [0, 1/2]");
    }
}

GameMatrix build_game_matrix(const InputDistribution &dist, const UtilityWeights &weights) {
    return build_game_matrix_general(dist, UtilityTable::load_balancing(weights.beta1, weights.beta2));
}

GameMatrix build_game_matrix_general(const InputDistribution &dist, const UtilityTable &utility) {
    GameMatrix m;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (!std::isfinite(utility.u[0][x][y]) || !std::isfinite(utility.u[1][x][y])) {
                throw std::invalid_argument("utility entries must be finite");
            }
            m.m[x][y] = dist.p[x][y] * (utility.u[0][x][y] - utility.u[1][x][y]);
        }
    }
    return m;
}

ClassicalSolution classical_value(const GameMatrix &m) {
    ClassicalSolution best;
    best.value = -std::numeric_limits<double>::infinity();
    // Lexicographic order with -1 before +1; strict improvement keeps the
    // smallest maximizer.
    for (int na0 : {-1, 1}) {
        for (int na1 : {-1, 1}) {
            for (int nb0 : {-1, 1}) {
                for (int nb1 : {-1, 1}) {
                    const double value = m.m[0][0] * na0 * nb0 + m.m[0][1] * na0 * nb1 +
                                         m.m[1][0] * na1 * nb0 + m.m[1][1] * na1 * nb1;
                    if (value > best.value) {
                        best.value = value;
                        best.a_sign = {na0, na1};
                        best.b_sign = {nb0, nb1};
                    }
                }
            }
        }
    }
    return best;
}

QuantumSolution quantum_value(const GameMatrix &m) {
    constexpr int kGrid = 4096;

    double best_theta = 0.0;
    double best_q = -1.0;
    std::array<double, kGrid> values{};
    for (int i = 0; i < kGrid; ++i) {
        values[i] = q_of_theta(m, kTwoPi * i / kGrid);
    }
    // Refine every local maximum of the grid; Q(theta) has few of them.
    const double step = kTwoPi / kGrid;
    for (int i = 0; i < kGrid; ++i) {
        const double prev = values[(i + kGrid - 1) % kGrid];
        const double next = values[(i + 1) % kGrid];
        if (values[i] >= prev && values[i] >= next) {
            const double center = kTwoPi * i / kGrid;
            const double theta = golden_section_max(m, center - step, center + step);
            const double q = q_of_theta(m, theta);
            if (q > best_q) {
                best_q = q;
                best_theta = theta;
            }
        }
    }

    QuantumSolution out;
    out.value = best_q;
    out.angles.theta = wrap_angle(best_theta);
    const double c = std::cos(out.angles.theta);
    const double s = std::sin(out.angles.theta);
    for (int y = 0; y < 2; ++y) {
        const double vx = m.m[0][y] + m.m[1][y] * c;
        const double vy = m.m[1][y] * s;
        const double norm = std::hypot(vx, vy);
        // Bob's optimal axis is antiparallel to the weighted Alice sum; a
        // vanishing sum leaves the axis free.
        double phi = 0.0;
        if (norm > 0.0) phi = std::atan2(-vy, -vx);
        (y == 0 ? out.angles.phi0 : out.angles.phi1) = phi;
    }
    return out;
}

double combined_infidelity_raw(double eps_s, double eps_meas) {
    const double contrast = (1.0 - 4.0 * eps_s / 3.0);
    const double flip = 1.0 - 2.0 * eps_meas;
    return 1.0 - contrast * flip * flip;
}

double combined_infidelity(const NoiseModel &noise) {
    NoiseModel checked(noise.eps_s, noise.eps_meas);
    return combined_infidelity_raw(checked.eps_s, checked.eps_meas);
}

double omega_classical(const GameMatrix &m) {
    return 0.5 * (1.0 + classical_value(m).value);
}

double omega_quantum(double eps, const GameMatrix &m) {
    return 0.5 * (1.0 + (1.0 - eps) * quantum_value(m).value);
}

double gap(double eps, const GameMatrix &m) {
    return 0.5 * ((1.0 - eps) * quantum_value(m).value - classical_value(m).value);
}

double epsilon_threshold(const GameMatrix &m) {
    const double q = quantum_value(m).value;
    if (q <= 1e-15) {
        throw DegenerateGameError("epsilon threshold undefined: Q(M) = 0");
    }
    const double c = classical_value(m).value;
    return std::max(0.0, 1.0 - c / q);
}

}  // namespace lctc::game
