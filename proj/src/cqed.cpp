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

#include "lctc/cqed.hpp"

#include <cmath>

namespace lctc::cqed {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;
using State8 = std::array<Complex, 8>;

Complex inner(const State8 &bra, const State8 &ket) {
    Complex acc = 0.0;
    for (int i = 0; i < 8; ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

double norm2(const State8 &v) {
    double acc = 0.0;
    for (const Complex &c : v) acc += std::norm(c);
    return acc;
}

}  // namespace

CavityParams::CavityParams(double coupling, double intrinsic, double external, double atomic)
    : g(coupling), kappa_in(intrinsic), kappa_ex(external), gamma(atomic) {
    if (!(g > 0 && kappa_in > 0 && kappa_ex > 0 && gamma > 0)) {
        throw std::invalid_argument("cavity parameters must be positive");
    }
}

std::pair<Complex, Complex> reflection_coefficients(const CavityParams &cavity, double delta) {
    const Complex i_delta(0.0, delta);
    const Complex num0 = -cavity.kappa_ex + cavity.kappa_in - i_delta;
    const Complex den0 = cavity.kappa_ex + cavity.kappa_in - i_delta;
    const Complex r0 = num0 / den0;
    const Complex atom = cavity.gamma - i_delta;
    const double g2 = cavity.g * cavity.g;
    const Complex r1 = (num0 * atom + g2) / (den0 * atom + g2);
    return {r0, r1};
}

Calibration calibration(const CavityParams &cavity) {
    if (!(cavity.kappa_ex > cavity.kappa_in)) {
        throw std::invalid_argument("calibration requires an overcoupled cavity (kappa_ex > kappa_in)");
    }
    Calibration cal;
    const double c_in = cavity.internal_cooperativity();
    cal.r_opt = 1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 2.0 * c_in));
    cal.tau_delay =
        2.0 * cavity.kappa_ex / (cavity.kappa_ex * cavity.kappa_ex - cavity.kappa_in * cavity.kappa_in);
    return cal;
}

PhotonSpectrum::PhotonSpectrum(double pulse_sigma, double center_detuning)
    : sigma_t(pulse_sigma), center(center_detuning) {
    if (!(sigma_t > 0)) throw std::invalid_argument("sigma_t must be positive");
}

void gauss_hermite(int n, std::vector<double> &nodes, std::vector<double> &weights) {
    if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pim4 = 0.7511255444649425;  // pi^(-1/4)
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // Initial guesses for the descending positive roots.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * nodes[1];
        } else {
            z = 2.0 * z - nodes[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Recurrence on orthonormal Hermite functions keeps magnitudes tame.
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

namespace {

struct GhzIntegrals {
    double p_plus = 0.0;
    double p_minus = 0.0;
    double f_plus = 0.0;
    double f_minus = 0.0;
};

GhzIntegrals ghz_quadrature(const GhzNetworkSpec &spec, int n_nodes) {
    std::array<Calibration, 3> cal;
    double r_bar = 1.0;
    double tau_bar = 0.0;
    for (int j = 0; j < 3; ++j) {
        cal[j] = calibration(spec.nodes[j]);
        r_bar *= cal[j].r_opt;
        tau_bar += cal[j].tau_delay;
    }

    State8 plus_state;
    State8 ghz_minus;
    State8 ghz_plus;
    const double amp = 1.0 / std::sqrt(8.0);
    for (int b = 0; b < 8; ++b) {
        const int wt = ((b >> 2) & 1) + ((b >> 1) & 1) + (b & 1);
        plus_state[b] = amp;
        const double minus_amp = (wt & 1) ? -amp : amp;  // |---> amplitudes
        ghz_minus[b] = (plus_state[b] - minus_amp) / std::sqrt(2.0);
        ghz_plus[b] = (plus_state[b] + minus_amp) / std::sqrt(2.0);
    }

    std::vector<double> t_nodes;
    std::vector<double> t_weights;
    gauss_hermite(n_nodes, t_nodes, t_weights);

    const double sigma_delta = 1.0 / (2.0 * spec.spectrum.sigma_t);
    GhzIntegrals acc;
    for (int k = 0; k < n_nodes; ++k) {
        const double delta = spec.spectrum.center + std::sqrt(2.0) * sigma_delta * t_nodes[k];
        const double w = t_weights[k] / std::sqrt(kPi);

        // V-branch product state from the actual reflections.
        std::array<Complex, 3> c0;
        std::array<Complex, 3> c1;
        for (int j = 0; j < 3; ++j) {
            const auto [r0, r1] = reflection_coefficients(spec.nodes[j], delta);
            c0[j] = r0 / std::sqrt(2.0);
            c1[j] = r1 / std::sqrt(2.0);
        }
        State8 v_branch;
        for (int b = 0; b < 8; ++b) {
            Complex prod = 1.0;
            for (int j = 0; j < 3; ++j) {
                const int bit = (b >> (2 - j)) & 1;
                prod *= bit ? c1[j] : c0[j];
            }
            v_branch[b] = prod;
        }
        const Complex h_amp = r_bar * std::exp(Complex(0.0, tau_bar * delta));

        State8 upsilon_plus;
        State8 upsilon_minus;
        for (int b = 0; b < 8; ++b) {
            upsilon_plus[b] = (h_amp * plus_state[b] + v_branch[b]) / std::sqrt(2.0);
            upsilon_minus[b] = (h_amp * plus_state[b] - v_branch[b]) / std::sqrt(2.0);
        }

        acc.p_plus += w * 0.5 * norm2(upsilon_plus);
        acc.p_minus += w * 0.5 * norm2(upsilon_minus);
        acc.f_plus += w * 0.5 * std::norm(inner(ghz_minus, upsilon_plus));
        acc.f_minus += w * 0.5 * std::norm(inner(ghz_plus, upsilon_minus));
    }
    return acc;
}

}  // namespace

GhzGenerationResult ghz_generation(const GhzNetworkSpec &spec, int min_nodes) {
    if (!(spec.spectrum.sigma_t > 0)) throw std::invalid_argument("sigma_t must be positive");
    if (!(spec.source_emission_prob > 0 && spec.source_emission_prob <= 1)) {
        throw std::invalid_argument("source emission probability must lie in (0, 1]");
    }
    constexpr int kMaxNodes = 4096;
    int n = std::max(min_nodes, 8);
    GhzIntegrals prev = ghz_quadrature(spec, n);
    for (;;) {
        const int n2 = 2 * n;
        if (n2 > kMaxNodes) {
            throw std::runtime_error("GHZ quadrature did not converge by node doubling");
        }
        const GhzIntegrals cur = ghz_quadrature(spec, n2);
        const double p_prev = prev.p_plus + prev.p_minus;
        const double p_cur = cur.p_plus + cur.p_minus;
        const double f_prev = (prev.f_plus + prev.f_minus) / p_prev;
        const double f_cur = (cur.f_plus + cur.f_minus) / p_cur;
        const bool converged = std::abs(p_cur - p_prev) <= 1e-6 * std::max(1.0, std::abs(p_cur)) &&
                               std::abs(f_cur - f_prev) <= 1e-6 * std::max(1.0, std::abs(f_cur));
        if (converged) {
            GhzGenerationResult out;
            out.fidelity = f_cur;
            out.p_success = p_cur * spec.source_emission_prob;
            out.quad_nodes = n2;
            return out;
        }
        prev = cur;
        n = n2;
    }
}

double poisson_cdf(int n, double lambda) {
    if (n < 0) return 0.0;
    if (lambda <= 0.0) return 1.0;
    if (lambda < 700.0) {
        double term = std::exp(-lambda);
        double sum = term;
        for (int m = 1; m <= n; ++m) {
            term *= lambda / m;
            sum += term;
        }
        return std::min(1.0, sum);
    }
    // Log-space accumulation for extreme means.
    double max_log = -lambda;
    std::vector<double> logs(n + 1);
    for (int m = 0; m <= n; ++m) {
        logs[m] = -lambda + m * std::log(lambda) - std::lgamma(m + 1.0);
        max_log = std::max(max_log, logs[m]);
    }
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) sum += std::exp(logs[m] - max_log);
    return std::min(1.0, std::exp(max_log) * sum);
}

std::pair<double, double> readout_error(double tau, int n_th, const ReadoutParams &params) {
    if (!(tau > 0)) throw std::invalid_argument("probe time must be positive");
    if (n_th < 0) throw std::invalid_argument("threshold must be >= 0");
    if (params.r_dark > params.r_bright) {
        throw std::invalid_argument("r_dark must not exceed r_bright");
    }
    if (!(params.r_bright >= 0 && params.r_dark >= 0 && params.t_life > 0)) {
        throw std::invalid_argument("rates must be >= 0 and t_life positive");
    }

    const double p_plus = 1.0 - poisson_cdf(n_th, params.r_dark * tau);

    // Interior depumping term: integrating the exponential depumping density
    // against the Poisson CDF gives a finite geometric-weighted sum of upper
    // Poisson tails,
    //   (1 / (1 + R T)) sum_{m<=n_th} a^m (1 - Qbar(m, z)),
    // with a = R / (R + 1/T) and z = (R + 1/T) tau.
    const double rate_total = params.r_bright + 1.0 / params.t_life;
    const double a = params.r_bright / rate_total;
    const double z = rate_total * tau;
    double interior = 0.0;
    double a_pow = 1.0;
    // Incremental Poisson CDF at mean z. When exp(-z) underflows, every CDF
    // value in the scanned threshold range is negligible anyway.
    double pmf = std::exp(-z);
    double cdf = pmf;
    for (int m = 0; m <= n_th; ++m) {
        if (m > 0) {
            pmf *= z / m;
            cdf = std::min(1.0, cdf + pmf);
        }
        interior += a_pow * (1.0 - cdf);
        a_pow *= a;
    }
    interior /= 1.0 + params.r_bright * params.t_life;
    // Delta term: probes that never depump misclassify with the full-window
    // Poisson CDF.
    const double boundary =
        std::exp(-tau / params.t_life) * poisson_cdf(n_th, params.r_bright * tau);
    return {p_plus, std::min(1.0, interior + boundary)};
}

ThresholdResult optimal_threshold(double tau, const ReadoutParams &params) {
    ThresholdResult best;
    best.total_error = 2.0;
    double prev = 2.0;
    for (int n_th = 0; n_th < 100000; ++n_th) {
        const auto [pp, pm] = readout_error(tau, n_th, params);
        const double err = pp + pm;
        if (err < best.total_error) {
            best.total_error = err;
            best.n_th = n_th;
        }
        if (n_th > 0 && err > prev) break;  // past the unimodal minimum
        if (poisson_cdf(n_th, params.r_bright * tau) > 1.0 - 1e-12) break;
        prev = err;
    }
    return best;
}

double min_readout_time(double target_eps, const ReadoutParams &params) {
    if (!(target_eps > 0 && target_eps < 1)) {
        throw std::invalid_argument("target error must lie in (0, 1)");
    }
    if (!(params.r_bright > 0)) throw std::invalid_argument("r_bright must be positive");

    // Locate the decreasing branch by sampling; the error rises again once
    // depumping or dark counts dominate.
    const double tau_lo_init = 1e-3 / params.r_bright;
    const double tau_hi_init = 50.0 * params.t_life;
    double best_tau = tau_lo_init;
    double best_err = 2.0;
    constexpr int kSamples = 200;
    for (int i = 0; i < kSamples; ++i) {
        const double tau = tau_lo_init * std::pow(tau_hi_init / tau_lo_init,
                                                  static_cast<double>(i) / (kSamples - 1));
        const double err = optimal_threshold(tau, params).total_error;
        if (err < best_err) {
            best_err = err;
            best_tau = tau;
        }
    }
    if (best_err > target_eps) {
        throw std::domain_error("target readout error is below the achievable floor");
    }

    double lo = tau_lo_init;
    double hi = best_tau;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = std::sqrt(lo * hi);
        const double err = optimal_threshold(mid, params).total_error;
        if (std::abs(err - target_eps) <= 1e-5 * target_eps) return mid;
        if (err > target_eps) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi / lo < 1.0 + 1e-14) break;
    }
    return std::sqrt(lo * hi);
}

double bright_rate(const CavityParams &cavity, double eta_det) {
    if (!(eta_det > 0 && eta_det <= 1)) throw std::invalid_argument("eta_det must lie in (0, 1]");
    const double kappa = cavity.kappa_in + cavity.kappa_ex;
    return eta_det * kTwoPi * cavity.kappa_ex * cavity.g * cavity.g / (4.0 * kappa * kappa);
}

double dark_rate(double r_bright, double gamma, double detuning) {
    if (!(detuning > 0)) throw std::invalid_argument("detuning must be positive");
    const double ratio = gamma / detuning;
    return r_bright * ratio * ratio;
}

ReadoutParams readout_reference_params(double c_in, double eta_det, double delta_over_gamma) {
    if (!(c_in > 0)) throw std::invalid_argument("c_in must be positive");
    const double g = kTwoPi * 3e6;
    const double gamma = kTwoPi * 91e3;
    const double kappa_in = g * g / (2.0 * gamma * c_in);
    const double kappa_ex = (g + 2.0 * kappa_in) / 3.0;
    const CavityParams cavity(g, kappa_in, kappa_ex, gamma);
    ReadoutParams params;
    params.r_bright = bright_rate(cavity, eta_det);
    params.r_dark = dark_rate(params.r_bright, gamma, delta_over_gamma * gamma);
    params.t_life = 1.6e-3;
    return params;
}

CavityParams network_reference_cavity(double c_in) {
    if (!(c_in > 0)) throw std::invalid_argument("c_in must be positive");
    const double g = kTwoPi * 3e6;
    const double gamma = kTwoPi * 0.24e6;
    const double kappa_in = g * g / (2.0 * gamma * c_in);
    const double kappa_ex = g + 2.0 * kappa_in;
    return CavityParams(g, kappa_in, kappa_ex, gamma);
}

double tpi_state_infidelity(double trace_purity) {
    if (!(trace_purity >= 0.0 && trace_purity <= 1.0)) {
        throw std::invalid_argument("trace purity must lie in [0, 1]");
    }
    return 0.5 * (1.0 - trace_purity);
}

}  // namespace lctc::cqed
