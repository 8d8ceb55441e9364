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

#ifndef LCTC_CQED_HPP
#define LCTC_CQED_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lctc::cqed {

/// Atom-cavity interface parameters as angular rates (rad/s).
struct CavityParams {
    double g = 0.0;         // atom-cavity coupling
    double kappa_in = 0.0;  // intrinsic cavity decay
    double kappa_ex = 0.0;  // external (coupling mirror) decay
    double gamma = 0.0;     // atomic decay

    CavityParams() = default;
    CavityParams(double coupling, double intrinsic, double external, double atomic);

    double internal_cooperativity() const { return g * g / (2.0 * kappa_in * gamma); }
};

/// Cavity reflection amplitudes for the uncoupled (r0) and coupled (r1)
/// atomic state at photon detuning `delta` (rad/s).
std::pair<std::complex<double>, std::complex<double>> reflection_coefficients(
    const CavityParams &cavity, double delta);

struct Calibration {
    double r_opt = 0.0;      // matched attenuation for the bypass arm
    double tau_delay = 0.0;  // matched group delay, seconds
};

/// Per-node bypass-arm calibration; requires an overcoupled cavity
/// (kappa_ex > kappa_in).
Calibration calibration(const CavityParams &cavity);

/// Gaussian photon pulse with intensity-envelope standard deviation sigma_t;
/// the spectral density |f(Delta)|^2 is Gaussian with std 1 / (2 sigma_t).
struct PhotonSpectrum {
    double sigma_t = 0.0;
    double center = 0.0;  // rad/s

    PhotonSpectrum() = default;
    explicit PhotonSpectrum(double pulse_sigma, double center_detuning = 0.0);
};

struct GhzNetworkSpec {
    std::array<CavityParams, 3> nodes;
    PhotonSpectrum spectrum;
    /// Source emission probability; scales the success probability only.
    double source_emission_prob = 1.0;
};

struct GhzGenerationResult {
    double fidelity = 0.0;
    double p_success = 0.0;
    int quad_nodes = 0;  // node count at which the quadrature converged
};

/// Spectrally averaged fidelity and success probability of the sequential
/// scattering GHZ protocol, integrated with Gauss-Hermite quadrature against
/// the Gaussian spectrum. Node doubling continues until the results change
/// by less than 1e-6 relative.
GhzGenerationResult ghz_generation(const GhzNetworkSpec &spec, int min_nodes = 64);

/// Poisson readout-error model rates.
struct ReadoutParams {
    double r_bright = 0.0;  // detected photon rate from the bright state, 1/s
    double r_dark = 0.0;    // detected photon rate from the dark state, 1/s
    double t_life = 0.0;    // bright-state depumping lifetime, s
};

/// Upper regularized Poisson CDF: exp(-lambda) sum_{m<=n} lambda^m / m!.
double poisson_cdf(int n, double lambda);

/// (P+, P-) misclassification probabilities at probe time tau and photon
/// count threshold n_th. The depumping density's boundary term is handled in
/// closed form; the interior integral uses the exact finite-sum form.
std::pair<double, double> readout_error(double tau, int n_th, const ReadoutParams &params);

struct ThresholdResult {
    int n_th = 0;
    double total_error = 1.0;
};

/// Scans thresholds from 0 until the total error stops decreasing; ties keep
/// the smallest threshold.
ThresholdResult optimal_threshold(double tau, const ReadoutParams &params);

/// Shortest probe time whose threshold-optimized total error reaches
/// `target_eps` (relative tolerance 1e-5). Throws std::domain_error when the
/// depumping error floor exceeds the target.
double min_readout_time(double target_eps, const ReadoutParams &params);

/// Detected bright-state photon rate of the cavity-enhanced fluorescence
/// readout. The linewidths enter as angular rates; the leading 2 pi converts
/// the combination to a detected count rate.
double bright_rate(const CavityParams &cavity, double eta_det);

/// Off-resonant dark-state scattering: r_bright (gamma / detuning)^2.
double dark_rate(double r_bright, double gamma, double detuning);

/// Readout rates for the reference cavity family parameterized by the
/// internal cooperativity: g/2pi = 3 MHz, gamma/2pi = 91 kHz,
/// kappa_in = g^2/(2 gamma C_in), kappa_ex = (g + 2 kappa_in)/3,
/// T_life = 1.6 ms.
ReadoutParams readout_reference_params(double c_in, double eta_det = 0.9,
                                       double delta_over_gamma = 100.0);

/// Networking cavity family used by the GHZ figures: g/2pi = 3 MHz,
/// gamma/2pi = 0.24 MHz, kappa_in = g^2/(2 gamma C_in), kappa_ex = g + 2 kappa_in.
CavityParams network_reference_cavity(double c_in);

/// Werner-budget entanglement infidelity of the two-photon-interference
/// Bell state with single-photon trace purity V: (1 - V) / 2.
double tpi_state_infidelity(double trace_purity);

/// Gauss-Hermite nodes and weights for integrals against exp(-t^2).
void gauss_hermite(int n, std::vector<double> &nodes, std::vector<double> &weights);

}  // namespace lctc::cqed

#endif
