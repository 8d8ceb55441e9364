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

#include "lctc/hardware.hpp"

#include <cmath>
#include <limits>

#include "lctc/certify.hpp"

namespace lctc::hardware {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

void NodeTimings::validate() const {
    if (!(tau_p >= 0 && tau_swap >= 0 && tau_rot >= 0 && tau_meas >= 0 && tau_res >= 0)) {
        throw std::invalid_argument("node timings must be non-negative");
    }
    if (!(tau_mem > 0)) throw std::invalid_argument("tau_mem must be positive");
    if (!(trial_period(*this) > 0)) {
        throw std::invalid_argument("trial period 2 tau_p + tau_swap must be positive");
    }
    if (n_a < 1) throw std::invalid_argument("n_a must be >= 1");
    if (!(p_e > 0 && p_e <= 1)) throw std::invalid_argument("p_e must lie in (0, 1]");
}

void LinkBudget::validate() const {
    if (length_km < 0) throw std::invalid_argument("length must be >= 0");
    if (!(eta_det > 0 && eta_det <= 1) || !(eta_misc > 0 && eta_misc <= 1)) {
        throw std::invalid_argument("efficiencies must lie in (0, 1]");
    }
    if (dark_rate < 0) throw std::invalid_argument("dark rate must be >= 0");
    if (n_ch < 1) throw std::invalid_argument("n_ch must be >= 1");
    if (!(v_g > 0)) throw std::invalid_argument("group velocity must be positive");
    if (eta_att_override && !(*eta_att_override > 0 && *eta_att_override <= 1)) {
        throw std::invalid_argument("link transmission override must lie in (0, 1]");
    }
}

double LinkBudget::eta_att() const {
    if (eta_att_override) return *eta_att_override;
    return std::pow(10.0, -alpha_att * length_km / 10.0);
}

const char *to_string(CriterionStatus status) {
    switch (status) {
        case CriterionStatus::kPass: return "pass";
        case CriterionStatus::kFail: return "fail";
        case CriterionStatus::kNotApplicable: return "not_applicable";
        case CriterionStatus::kUncertifiable: return "uncertifiable";
        case CriterionStatus::kNoFiniteLifetime: return "no_finite_lifetime";
    }
    return "unknown";
}

double trial_period(const NodeTimings &t) { return 2.0 * t.tau_p + t.tau_swap; }

double intrinsic_rate(const NodeTimings &t) {
    return 0.5 * t.p_e * t.p_e / trial_period(t);
}

double ent_success_prob(const NodeTimings &t, const LinkBudget &l) {
    return 0.5 * t.p_e * t.p_e * l.eta_att() * l.eta_det * l.eta_det * l.eta_misc * l.eta_misc;
}

double link_latency(const LinkBudget &l) { return l.length_km * 1e3 / l.v_g; }

double decision_latency(const NodeTimings &t) { return t.tau_rot + t.tau_meas; }

double occupancy(const NodeTimings &t, const LinkBudget &l) {
    return trial_period(t) + link_latency(l) + decision_latency(t) + t.tau_res;
}

double heg_attempt_rate(const NodeTimings &t, double tau_occ) {
    return std::min(1.0 / trial_period(t), t.n_a / tau_occ);
}

double heg_rate(const NodeTimings &t, const LinkBudget &l) {
    return l.n_ch * ent_success_prob(t, l) * heg_attempt_rate(t, occupancy(t, l));
}

double dark_count_false_positive(const NodeTimings &t, const LinkBudget &l, double p_ent) {
    if (!(p_ent > 0)) throw std::invalid_argument("p_ent must be positive");
    return 4.0 * t.tau_p * l.dark_rate / p_ent;
}

double memory_adjusted_infidelity(double eps_s, double tau_occ, double tau_mem) {
    return eps_s + 2.0 * (-std::expm1(-tau_occ / tau_mem));
}

double min_memory_lifetime(double tau_occ, double eps_th, double eps_meas, double eps_s) {
    const double flip = 1.0 - 2.0 * eps_meas;
    const double bracket =
        0.375 * (1.0 - 4.0 * eps_s / 3.0 - (1.0 - eps_th) / (flip * flip));
    if (!(bracket > 0.0 && bracket < 1.0)) {
        throw std::domain_error(
            "no finite memory lifetime suffices: static infidelity budget exhausted");
    }
    return tau_occ / (-std::log1p(-bracket));
}

PerformanceReport performance_report(const NodeTimings &t, const LinkBudget &l,
                                     const game::NoiseModel &noise) {
    t.validate();
    l.validate();
    PerformanceReport r;
    r.tau_e = trial_period(t);
    r.tau_link = link_latency(l);
    r.tau_dec = decision_latency(t);
    r.tau_occ = occupancy(t, l);
    r.r0 = intrinsic_rate(t);
    r.gamma_heg = heg_attempt_rate(t, r.tau_occ);
    r.p_ent = ent_success_prob(t, l);
    r.r_heg = l.n_ch * r.p_ent * r.gamma_heg;
    r.p_false = dark_count_false_positive(t, l, r.p_ent);
    r.duty = t.n_a * r.tau_e / r.tau_occ;
    const double eps_s_adj = memory_adjusted_infidelity(noise.eps_s, r.tau_occ, t.tau_mem);
    r.eps_budget = game::combined_infidelity_raw(eps_s_adj, noise.eps_meas);
    return r;
}

CriteriaVerdict evaluate_criteria(const game::GameMatrix &m, const game::NoiseModel &noise,
                                  const NodeTimings &t, const LinkBudget &l, double t_loc,
                                  double t_env, double alpha, int64_t n_req_cap) {
    t.validate();
    l.validate();
    if (!(t_loc > 0) || !(t_env > 0)) {
        throw std::invalid_argument("t_loc and t_env must be positive");
    }

    CriteriaVerdict v;
    const double tau_occ = occupancy(t, l);
    const double tau_dec = decision_latency(t);
    const double r_heg = heg_rate(t, l);

    // The same memory-adjusted infidelity budget feeds both the fidelity and
    // the rate criterion.
    const double eps_s_adj = memory_adjusted_infidelity(noise.eps_s, tau_occ, t.tau_mem);
    v.eps = game::combined_infidelity_raw(eps_s_adj, noise.eps_meas);

    double eps_th = 0.0;
    bool degenerate = false;
    try {
        eps_th = game::epsilon_threshold(m);
    } catch (const game::DegenerateGameError &) {
        degenerate = true;
    }
    v.eps_threshold = eps_th;
    v.fidelity_ok = !degenerate && v.eps < eps_th;
    v.fidelity_margin = degenerate ? -kInf : eps_th - v.eps;

    if (v.fidelity_ok) {
        const double omega_c = game::omega_classical(m);
        const double omega_q = game::omega_quantum(v.eps, m);
        try {
            v.n_req = certify::n_required(omega_c, omega_q, alpha, n_req_cap);
            v.r_req = static_cast<double>(v.n_req) / t_env;
            v.rate_ok = r_heg > v.r_req;
            v.rate_margin = r_heg - v.r_req;
            v.rate_status = v.rate_ok ? CriterionStatus::kPass : CriterionStatus::kFail;
        } catch (const certify::UncertifiableError &) {
            v.rate_ok = false;
            v.rate_margin = -kInf;
            v.r_req = kInf;
            v.n_req = 0;
            v.rate_status = CriterionStatus::kUncertifiable;
        }
    } else {
        v.rate_ok = false;
        v.rate_margin = kNaN;
        v.r_req = kNaN;
        v.rate_status = CriterionStatus::kNotApplicable;
    }

    v.decision_ok = tau_dec < t_loc;
    v.decision_margin = t_loc - tau_dec;

    if (degenerate) {
        v.memory_ok = false;
        v.memory_margin = kNaN;
        v.tau_mem_threshold = kNaN;
        v.memory_status = CriterionStatus::kNotApplicable;
    } else {
        try {
            v.tau_mem_threshold = min_memory_lifetime(tau_occ, eps_th, noise.eps_meas, noise.eps_s);
            v.memory_ok = t.tau_mem > v.tau_mem_threshold;
            v.memory_margin = t.tau_mem - v.tau_mem_threshold;
            v.memory_status = v.memory_ok ? CriterionStatus::kPass : CriterionStatus::kFail;
        } catch (const std::domain_error &) {
            v.memory_ok = false;
            v.memory_margin = -kInf;
            v.tau_mem_threshold = kInf;
            v.memory_status = CriterionStatus::kNoFiniteLifetime;
        }
    }
    return v;
}

Table2Report table2_report(const NodeTimings &t, const LinkBudget &l,
                           const game::NoiseModel &noise, const game::GameMatrix &m,
                           double t_loc, double t_env, double alpha) {
    Table2Report report;
    report.performance = performance_report(t, l, noise);
    report.verdict = evaluate_criteria(m, noise, t, l, t_loc, t_env, alpha);
    return report;
}

}  // namespace lctc::hardware
