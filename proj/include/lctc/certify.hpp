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

#ifndef LCTC_CERTIFY_HPP
#define LCTC_CERTIFY_HPP

#include <cstdint>
#include <stdexcept>

namespace lctc::certify {

/// Raised when no round count up to the configured cap reaches significance.
struct UncertifiableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Extreme scores a single round can produce in a general (non {0,1}) game.
struct ScoreBounds {
    double u_min = 0.0;
    double u_max = 1.0;

    ScoreBounds() = default;
    ScoreBounds(double lo, double hi);
};

struct CertificationQuery {
    double omega_c = 0.0;
    double omega_q = 0.0;
    double alpha = 0.05;
    double t_env = 1.0;

    CertificationQuery() = default;
    CertificationQuery(double wc, double wq, double a, double t);
};

/// Natural log of the exact upper binomial tail
///   P(X >= v), X ~ Binomial(m, omega_c),
/// evaluated through the regularized incomplete beta function so the result
/// stays accurate for m up to 1e8 and for tails far below double range.
double log_binomial_pvalue(int64_t v, int64_t m, double omega_c);

/// Exact upper binomial tail; underflows to zero for extreme tails.
double binomial_pvalue(int64_t v, int64_t m, double omega_c);

/// Smallest round count m with p(ceil(m omega_q), m) < alpha. The p-value is
/// not monotone in m (ceiling effects), so the search is an exact ascending
/// scan; `cap` bounds it and exceeding the cap raises UncertifiableError.
int64_t n_required(double omega_c, double omega_q, double alpha,
                   int64_t cap = 1000000000LL);

/// n_required(...) / t_env.
double rate_required(const CertificationQuery &query);

/// Upper bound on the p-value of total score c over m rounds of a game with
/// per-round scores in [u_min, u_max]:
///   e * [P_{m,floor(mu)}(B_xi)]^(1-mu+floor(mu)) * [P_{m,ceil(mu)}(B_xi)]^(mu-floor(mu))
/// with mu = (c - m u_min)/(u_max - u_min), xi = (omega_c - u_min)/(u_max - u_min).
/// Computed in log space and clamped to [0, 1].
double score_pvalue_bound(double c, int64_t m, double omega_c, const ScoreBounds &bounds);

/// As n_required but with the general-score bound and c = ceil(m omega_q).
int64_t n_required_general(double omega_c, double omega_q, double alpha,
                           const ScoreBounds &bounds, int64_t cap = 1000000000LL);

/// Expected win count ceil(m * omega_q), guarding against float fuzz at
/// exact integers.
int64_t expected_win_count(int64_t m, double omega_q);

}  // namespace lctc::certify

#endif
