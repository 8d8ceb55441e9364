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

#ifndef LCTC_HARDWARE_HPP
#define LCTC_HARDWARE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "lctc/xor_game.hpp"

namespace lctc::hardware {

/// Per-node timings and emission probability of the event-ready protocol.
/// All times in seconds.
struct NodeTimings {
    double tau_p = 240e-9;     // photon pulse width
    double tau_swap = 100e-9;  // time-bin state swap
    double tau_rot = 100e-9;   // measurement-basis rotation
    double tau_meas = 870e-9;  // Z-basis measurement
    double tau_res = 1e-6;     // qubit reset
    double tau_mem = 7.9;      // memory coherence time
    int n_a = 250;             // memories multiplexed per channel
    double p_e = 0.70;         // photon emission probability

    void validate() const;
};

/// Fiber link and detection budget.
struct LinkBudget {
    double length_km = 50.0;
    double alpha_att = 0.25;  // dB/km
    double v_g = 2.1e8;       // m/s
    double eta_det = 0.9;
    double eta_misc = 0.8;
    double dark_rate = 10.0;  // 1/s
    int n_ch = 1;
    /// Explicit link transmission; when set it replaces the dB computation
    /// (used where a rounded transmission value is the quoted quantity).
    std::optional<double> eta_att_override;

    void validate() const;
    /// End-to-end fiber transmission 10^(-alpha_att L / 10) or the override.
    double eta_att() const;
};

/// Derived per-channel performance figures.
struct PerformanceReport {
    double tau_e = 0.0;
    double tau_link = 0.0;
    double tau_dec = 0.0;
    double tau_occ = 0.0;
    double r0 = 0.0;          // intrinsic HEG rate, 1/s
    double gamma_heg = 0.0;   // attempt rate, 1/s
    double r_heg = 0.0;       // delivered pair rate, 1/s
    double p_ent = 0.0;
    double p_false = 0.0;
    double duty = 0.0;        // N_a tau_e / tau_occ
    double eps_budget = 0.0;  // combined infidelity incl. memory adjustment
};

enum class CriterionStatus {
    kPass,
    kFail,
    kNotApplicable,  // rate criterion when the fidelity criterion fails
    kUncertifiable,  // required rounds exceed the search cap
    kNoFiniteLifetime,
};

const char *to_string(CriterionStatus status);

/// Pass/fail per operational criterion with signed slack margins:
/// fidelity eps_th - eps, rate R_HEG - R_req (1/s), decision T_loc - tau_dec
/// (s), memory tau_mem - tau_mem_th (s).
struct CriteriaVerdict {
    bool fidelity_ok = false;
    bool rate_ok = false;
    bool decision_ok = false;
    bool memory_ok = false;
    double fidelity_margin = 0.0;
    double rate_margin = 0.0;
    double decision_margin = 0.0;
    double memory_margin = 0.0;
    CriterionStatus rate_status = CriterionStatus::kFail;
    CriterionStatus memory_status = CriterionStatus::kFail;
    double eps = 0.0;
    double eps_threshold = 0.0;
    double r_req = 0.0;
    int64_t n_req = 0;
    double tau_mem_threshold = 0.0;

    bool all_ok() const { return fidelity_ok && rate_ok && decision_ok && memory_ok; }
};

struct Table2Report {
    PerformanceReport performance;
    CriteriaVerdict verdict;
};

/// tau_e = 2 tau_p + tau_swap.
double trial_period(const NodeTimings &t);
/// R_0 = (p_e^2 / 2) / tau_e.
double intrinsic_rate(const NodeTimings &t);
/// p_ent = (p_e^2 / 2) eta_att eta_det^2 eta_misc^2.
double ent_success_prob(const NodeTimings &t, const LinkBudget &l);
/// Photon transit to the midpoint plus herald return: one full L / v_g.
double link_latency(const LinkBudget &l);
/// tau_dec = tau_rot + tau_meas.
double decision_latency(const NodeTimings &t);
/// tau_occ = tau_e + tau_link + tau_dec + tau_res.
double occupancy(const NodeTimings &t, const LinkBudget &l);
/// Gamma_HEG = min(1 / tau_e, N_a / tau_occ).
double heg_attempt_rate(const NodeTimings &t, double tau_occ);
/// R_HEG = N_ch p_ent Gamma_HEG.
double heg_rate(const NodeTimings &t, const LinkBudget &l);
/// p_false = 4 tau_p D / p_ent.
double dark_count_false_positive(const NodeTimings &t, const LinkBudget &l, double p_ent);

/// eps_s' = eps_s + 2 (1 - exp(-tau_occ / tau_mem)).
double memory_adjusted_infidelity(double eps_s, double tau_occ, double tau_mem);

/// Shortest memory lifetime keeping the combined infidelity at eps_th.
/// Throws std::domain_error when the static budget is already exhausted.
double min_memory_lifetime(double tau_occ, double eps_th, double eps_meas, double eps_s);

PerformanceReport performance_report(const NodeTimings &t, const LinkBudget &l,
                                     const game::NoiseModel &noise);

/// Evaluates the fidelity, rate, decision and memory criteria for game M
/// under the given noise and hardware. Degenerate-game and uncertifiable
/// conditions surface as verdict states rather than exceptions.
CriteriaVerdict evaluate_criteria(const game::GameMatrix &m, const game::NoiseModel &noise,
                                  const NodeTimings &t, const LinkBudget &l, double t_loc,
                                  double t_env, double alpha,
                                  int64_t n_req_cap = 50000000LL);

Table2Report table2_report(const NodeTimings &t, const LinkBudget &l,
                           const game::NoiseModel &noise, const game::GameMatrix &m,
                           double t_loc, double t_env, double alpha);

}  // namespace lctc::hardware

#endif
