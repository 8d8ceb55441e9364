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

#include "lctc/certify.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lctc::certify {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Continued fraction for the regularized incomplete beta function
// (Lentz's algorithm). Valid for x < (a + 1)/(a + b + 2).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 600;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction failed to converge");
}

// log of I_x(a, b) on the branch where the continued fraction converges and
// the value may be tiny.
double log_ibeta_small(double a, double b, double x) {
    const double log_prefactor = a * std::log(x) + b * std::log1p(-x) - std::log(a) -
                                 (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    return log_prefactor + std::log(betacf(a, b, x));
}

void check_tail_args(int64_t v, int64_t m, double omega_c) {
    if (m < 1) throw std::invalid_argument("round count m must be >= 1");
    if (v > m) throw std::invalid_argument("win count v exceeds round count m");
    if (!(omega_c >= 0.0 && omega_c <= 1.0)) {
        throw std::invalid_argument("omega_c must lie in [0, 1]");
    }
}

}  // namespace

ScoreBounds::ScoreBounds(double lo, double hi) : u_min(lo), u_max(hi) {
    if (!(lo < hi)) throw std::invalid_argument("score bounds require u_min < u_max");
}

CertificationQuery::CertificationQuery(double wc, double wq, double a, double t)
    : omega_c(wc), omega_q(wq), alpha(a), t_env(t) {
    if (!(wc > 0.0 && wc < wq && wq <= 1.0)) {
        throw std::invalid_argument("certification query requires 0 < omega_c < omega_q <= 1");
    }
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(t > 0.0)) throw std::invalid_argument("t_env must be positive");
}

int64_t expected_win_count(int64_t m, double omega_q) {
    const double x = static_cast<double>(m) * omega_q;
    const double fl = std::floor(x);
    // ceil(x), but values a hair above an integer count as that integer.
    if (x - fl < 1e-9 * std::max(1.0, x)) return static_cast<int64_t>(fl);
    return static_cast<int64_t>(fl) + 1;
}

double log_binomial_pvalue(int64_t v, int64_t m, double omega_c) {
    check_tail_args(v, m, omega_c);
    if (v <= 0) return 0.0;
    if (omega_c == 0.0) return kNegInf;
    if (omega_c == 1.0) return 0.0;

    // P(X >= v) = I_x(v, m - v + 1).
    const double a = static_cast<double>(v);
    const double b = static_cast<double>(m - v) + 1.0;
    const double x = omega_c;
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return log_ibeta_small(a, b, x);
    }
    // Complement branch: the tail is large, so linear-space subtraction is
    // accurate.
    const double complement = std::exp(log_ibeta_small(b, a, 1.0 - x));
    if (complement >= 1.0) return kNegInf;
    return std::log1p(-complement);
}

double binomial_pvalue(int64_t v, int64_t m, double omega_c) {
    return std::exp(log_binomial_pvalue(v, m, omega_c));
}

int64_t n_required(double omega_c, double omega_q, double alpha, int64_t cap) {
    if (!(omega_q > omega_c)) {
        throw std::invalid_argument("n_required needs omega_q > omega_c");
    }
    if (!(omega_c > 0.0 && omega_q <= 1.0)) {
        throw std::invalid_argument("n_required needs 0 < omega_c < omega_q <= 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    const double log_alpha = std::log(alpha);
    for (int64_t m = 1; m <= cap; ++m) {
        const int64_t v = expected_win_count(m, omega_q);
        if (log_binomial_pvalue(v, m, omega_c) < log_alpha) return m;
    }
    throw UncertifiableError("gap too small to certify within " + std::to_string(cap) +
                             " rounds");
}

double rate_required(const CertificationQuery &query) {
    CertificationQuery checked(query.omega_c, query.omega_q, query.alpha, query.t_env);
    return static_cast<double>(n_required(checked.omega_c, checked.omega_q, checked.alpha)) /
           checked.t_env;
}

double score_pvalue_bound(double c, int64_t m, double omega_c, const ScoreBounds &bounds) {
    ScoreBounds checked(bounds.u_min, bounds.u_max);
    if (m < 1) throw std::invalid_argument("round count m must be >= 1");
    const double range = checked.u_max - checked.u_min;
    const double mean_score = c / static_cast<double>(m);
    if (mean_score < checked.u_min - 1e-12 * range || mean_score > checked.u_max + 1e-12 * range) {
        throw std::invalid_argument("total score outside the attainable range");
    }
    const double xi = (omega_c - checked.u_min) / range;
    if (!(xi > 0.0 && xi < 1.0)) {
        throw std::invalid_argument("normalized classical value xi must lie in (0, 1)");
    }
    double mu = (c - static_cast<double>(m) * checked.u_min) / range;
    mu = std::min(std::max(mu, 0.0), static_cast<double>(m));
    const double fl = std::floor(mu);
    const double frac = mu - fl;
    const auto k_lo = static_cast<int64_t>(fl);
    const int64_t k_hi = std::min<int64_t>(k_lo + (frac > 0.0 ? 1 : 0), m);

    const double log_lo = log_binomial_pvalue(k_lo, m, xi);
    const double log_hi = (frac > 0.0) ? log_binomial_pvalue(k_hi, m, xi) : 0.0;
    const double log_bound = 1.0 + (1.0 - frac) * log_lo + frac * log_hi;
    return std::exp(std::min(0.0, log_bound));
}

int64_t n_required_general(double omega_c, double omega_q, double alpha,
                           const ScoreBounds &bounds, int64_t cap) {
    if (!(omega_q > omega_c)) {
        throw std::invalid_argument("n_required_general needs omega_q > omega_c");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    for (int64_t m = 1; m <= cap; ++m) {
        const int64_t raw = expected_win_count(m, omega_q);
        const double c = std::min(static_cast<double>(raw),
                                  static_cast<double>(m) * bounds.u_max);
        if (score_pvalue_bound(c, m, omega_c, bounds) < alpha) return m;
    }
    throw UncertifiableError("gap too small to certify within " + std::to_string(cap) +
                             " rounds (general-score bound)");
}

}  // namespace lctc::certify
