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

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace lctc::multiparty {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int popcount3(int x) { return ((x >> 2) & 1) + ((x >> 1) & 1) + (x & 1); }

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// |sum_x M_x exp(i (phi1 x1 + phi2 x2 + phi3 x3))|; phi0 is optimized out.
std::complex<double> weight_sum(const std::array<double, 8> &m, const std::array<double, 3> &phi) {
    std::complex<double> z = 0.0;
    for (int idx = 0; idx < 8; ++idx) {
        const double s = phi[0] * ((idx >> 2) & 1) + phi[1] * ((idx >> 1) & 1) + phi[2] * (idx & 1);
        z += m[idx] * std::complex<double>(std::cos(s), std::sin(s));
    }
    return z;
}

double objective(const std::array<double, 8> &m, const std::array<double, 3> &phi) {
    return std::abs(weight_sum(m, phi));
}

// Compact Nelder-Mead ascent on the 3-angle objective.
std::array<double, 3> nelder_mead(const std::array<double, 8> &m, std::array<double, 3> start) {
    constexpr int kDim = 3;
    constexpr int kIters = 400;
    std::array<std::array<double, kDim>, kDim + 1> simplex;
    std::array<double, kDim + 1> value;
    simplex[0] = start;
    for (int i = 0; i < kDim; ++i) {
        simplex[i + 1] = start;
        simplex[i + 1][i] += 0.35;
    }
    for (int i = 0; i <= kDim; ++i) value[i] = objective(m, simplex[i]);

    auto order = [&]() {
        for (int i = 0; i <= kDim; ++i) {
            for (int j = i + 1; j <= kDim; ++j) {
                if (value[j] > value[i]) {
                    std::swap(value[i], value[j]);
                    std::swap(simplex[i], simplex[j]);
                }
            }
        }
    };

    for (int it = 0; it < kIters; ++it) {
        order();
        if (value[0] - value[kDim] < 1e-13) break;
        std::array<double, kDim> centroid{};
        for (int i = 0; i < kDim; ++i) {
            for (int d = 0; d < kDim; ++d) centroid[d] += simplex[i][d] / kDim;
        }
        auto blend = [&](double coeff) {
            std::array<double, kDim> p{};
            for (int d = 0; d < kDim; ++d) {
                p[d] = centroid[d] + coeff * (centroid[d] - simplex[kDim][d]);
            }
            return p;
        };
        const auto reflected = blend(1.0);
        const double fr = objective(m, reflected);
        if (fr > value[0]) {
            const auto expanded = blend(2.0);
            const double fe = objective(m, expanded);
            if (fe > fr) {
                simplex[kDim] = expanded;
                value[kDim] = fe;
            } else {
                simplex[kDim] = reflected;
                value[kDim] = fr;
            }
        } else if (fr > value[kDim - 1]) {
            simplex[kDim] = reflected;
            value[kDim] = fr;
        } else {
            const auto contracted = blend(-0.5);
            const double fc = objective(m, contracted);
            if (fc > value[kDim]) {
                simplex[kDim] = contracted;
                value[kDim] = fc;
            } else {
                for (int i = 1; i <= kDim; ++i) {
                    for (int d = 0; d < kDim; ++d) {
                        simplex[i][d] = 0.5 * (simplex[i][d] + simplex[0][d]);
                    }
                    value[i] = objective(m, simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

}  // namespace

MultiInputDistribution::MultiInputDistribution(const std::array<double, 8> &probs) : p(probs) {
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0) throw std::invalid_argument("input probabilities must be >= 0");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("input distribution must sum to 1");
    }
}

MultiInputDistribution MultiInputDistribution::uniform() {
    return MultiInputDistribution({0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125});
}

MultiInputDistribution MultiInputDistribution::bernoulli(double prob_one) {
    if (!(prob_one >= 0.0 && prob_one <= 1.0)) {
        throw std::invalid_argument("bernoulli parameter must lie in [0, 1]");
    }
    std::array<double, 8> p{};
    for (int idx = 0; idx < 8; ++idx) {
        const int wt = popcount3(idx);
        p[idx] = std::pow(prob_one, wt) * std::pow(1.0 - prob_one, 3 - wt);
    }
    return MultiInputDistribution(p);
}

GhzNoise::GhzNoise(double ghz_infidelity, double measurement_flip_prob)
    : eps_ghz(ghz_infidelity), eps_meas(measurement_flip_prob) {
    if (!(eps_ghz >= 0.0 && eps_ghz <= 0.875)) {
        throw std::invalid_argument("eps_ghz must lie in [0, 7/8]");
    }
    if (!(eps_meas >= 0.0 && eps_meas <= 0.5)) {
        throw std::invalid_argument("eps_meas must lie in [0, 1/2]");
    }
}

ThreePartyGame build_three_party(const MultiInputDistribution &dist, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    ThreePartyGame g;
    g.beta = beta;
    for (int idx = 0; idx < 8; ++idx) {
        const int wt = popcount3(idx);
        const int maj = wt >= 2 ? 1 : 0;
        const double softness = (wt == 0 || wt == 3) ? 1.0 : 1.0 - 2.0 * beta;
        g.m[idx] = dist.p[idx] * softness * (maj ? -1.0 : 1.0);
    }
    return g;
}

ClassicalSolution3 classical_value_three(const ThreePartyGame &g) {
    ClassicalSolution3 best;
    best.value = -std::numeric_limits<double>::infinity();
    // Each party's response table a_i: {0,1} -> {0,1} has 4 variants; f
    // encodes it bitwise as a_i(x) = (f >> x) & 1.
    for (int f1 = 0; f1 < 4; ++f1) {
        for (int f2 = 0; f2 < 4; ++f2) {
            for (int f3 = 0; f3 < 4; ++f3) {
                double value = 0.0;
                for (int idx = 0; idx < 8; ++idx) {
                    const int x1 = (idx >> 2) & 1;
                    const int x2 = (idx >> 1) & 1;
                    const int x3 = idx & 1;
                    const int parity = ((f1 >> x1) ^ (f2 >> x2) ^ (f3 >> x3)) & 1;
                    value += g.m[idx] * (parity ? -1.0 : 1.0);
                }
                if (value > best.value) {
                    best.value = value;
                    best.response = {{{f1 & 1, (f1 >> 1) & 1},
                                      {f2 & 1, (f2 >> 1) & 1},
                                      {f3 & 1, (f3 >> 1) & 1}}};
                }
            }
        }
    }
    return best;
}

QuantumSolution3 quantum_value_three(const ThreePartyGame &g) {
    QuantumSolution3 best;
    best.value = -1.0;
    std::array<double, 3> best_phi{};
    // Lattice of 4^3 starts, offset to avoid the symmetric saddles at
    // multiples of pi/2, each polished by Nelder-Mead.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                std::array<double, 3> start{kTwoPi * (i + 0.5) / 4.0, kTwoPi * (j + 0.5) / 4.0,
                                            kTwoPi * (k + 0.5) / 4.0};
                const auto polished = nelder_mead(g.m, start);
                const double value = objective(g.m, polished);
                if (value > best.value + 1e-12) {
                    best.value = value;
                    best_phi = polished;
                } else if (value > best.value - 1e-12) {
                    // Equal maxima resolve to the lexicographically smallest
                    // wrapped angle tuple.
                    std::array<double, 3> wrapped{wrap_angle(polished[0]), wrap_angle(polished[1]),
                                                  wrap_angle(polished[2])};
                    std::array<double, 3> cur{wrap_angle(best_phi[0]), wrap_angle(best_phi[1]),
                                              wrap_angle(best_phi[2])};
                    if (wrapped < cur) best_phi = polished;
                }
            }
        }
    }
    const std::complex<double> z = weight_sum(g.m, best_phi);
    best.angles.phi = {wrap_angle(-std::arg(z)), wrap_angle(best_phi[0]), wrap_angle(best_phi[1]),
                       wrap_angle(best_phi[2])};
    if (std::abs(z) < 1e-15) best.angles.phi[0] = 0.0;
    best.value = std::abs(z);
    return best;
}

double ghz_combined_infidelity(const GhzNoise &noise) {
    GhzNoise checked(noise.eps_ghz, noise.eps_meas);
    const double flip = 1.0 - 2.0 * checked.eps_meas;
    return 1.0 - (1.0 - 8.0 * checked.eps_ghz / 7.0) * flip * flip * flip;
}

GhzThresholdResult ghz_threshold(const ThreePartyGame &g, double eps_prime) {
    const double q3 = quantum_value_three(g).value;
    const double c3 = classical_value_three(g).value;
    if (q3 <= 1e-15) {
        throw std::domain_error("GHZ threshold undefined: quantum value is zero");
    }
    const double omega_q0 = 0.5 * (1.0 + q3);
    const double gap0 = 0.5 * (q3 - c3);
    GhzThresholdResult result;
    result.threshold = std::max(0.0, gap0 / (omega_q0 - 0.5));
    result.gap = gap0 - eps_prime * (omega_q0 - 0.5);
    result.margin = result.threshold - eps_prime;
    result.advantage = eps_prime < result.threshold;
    return result;
}

double BehaviorThree::no_signaling_defect() const {
    double worst = 0.0;
    // The marginal of any proper party subset must not depend on the other
    // parties' settings; subset bits select the retained parties.
    for (int subset = 1; subset < 7; ++subset) {
        for (int in_sub = 0; in_sub < 8; ++in_sub) {
            // Only keep bit patterns where complement bits are zero; they get
            // replaced by the scanned complement inputs below.
            if ((in_sub & ~subset) != 0) continue;
            for (int out_sub = 0; out_sub < 8; ++out_sub) {
                if ((out_sub & ~subset) != 0) continue;
                double reference = -1.0;
                for (int in_rest = 0; in_rest < 8; ++in_rest) {
                    if ((in_rest & subset) != 0) continue;
                    const int x = in_sub | in_rest;
                    double marginal = 0.0;
                    for (int out_rest = 0; out_rest < 8; ++out_rest) {
                        if ((out_rest & subset) != 0) continue;
                        marginal += p[x][out_sub | out_rest];
                    }
                    if (reference < 0.0) {
                        reference = marginal;
                    } else {
                        worst = std::max(worst, std::abs(marginal - reference));
                    }
                }
            }
        }
    }
    return worst;
}

BehaviorThree behavior_three(double eps_prime, const GhzAngles &angles) {
    if (!(eps_prime >= 0.0 && eps_prime <= 1.0)) {
        throw std::invalid_argument("eps_prime must lie in [0, 1]");
    }
    BehaviorThree beh;
    for (int x = 0; x < 8; ++x) {
        const double s = angles.phi[0] + angles.phi[1] * ((x >> 2) & 1) +
                         angles.phi[2] * ((x >> 1) & 1) + angles.phi[3] * (x & 1);
        const double corr = (1.0 - eps_prime) * std::cos(s);
        for (int a = 0; a < 8; ++a) {
            const int parity = popcount3(a) & 1;
            const double p_parity = 0.5 * (1.0 + (parity ? -1.0 : 1.0) * corr);
            beh.p[x][a] = p_parity / 4.0;
        }
    }
    return beh;
}

}  // namespace lctc::multiparty
