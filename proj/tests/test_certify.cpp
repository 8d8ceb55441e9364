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

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace lctc;

namespace {
constexpr double kOmegaQChsh = 0.85355339059327376220;  // (1 + 1/sqrt(2)) / 2
}

TEST(BinomialPvalue, AllWinsTail) {
    EXPECT_NEAR(certify::binomial_pvalue(10, 10, 0.75), std::pow(0.75, 10), 1e-15);
    EXPECT_NEAR(certify::binomial_pvalue(5, 5, 0.5), std::pow(0.5, 5), 1e-16);
}

TEST(BinomialPvalue, FullTailIsOne) {
    EXPECT_DOUBLE_EQ(certify::binomial_pvalue(0, 100, 0.75), 1.0);
}

TEST(BinomialPvalue, MatchesTermSummation) {
    const double p = certify::binomial_pvalue(85, 100, 0.75);
    const long double ref = oracle::binomial_tail_sum(85, 100, 0.75L);
    EXPECT_NEAR(p / static_cast<double>(ref), 1.0, 1e-12);
}

TEST(BinomialPvalue, ArgumentChecks) {
    EXPECT_THROW(certify::binomial_pvalue(11, 10, 0.5), std::invalid_argument);
    EXPECT_THROW(certify::binomial_pvalue(1, 0, 0.5), std::invalid_argument);
}

TEST(BinomialPvalue, DecreasingInWinCount) {
    double prev = 2.0;
    for (int v = 0; v <= 50; v += 5) {
        const double p = certify::binomial_pvalue(v, 50, 0.6);
        EXPECT_LE(p, prev + 1e-15);
        prev = p;
    }
}

TEST(BinomialPvalue, LogSpaceSurvivesHugeRounds) {
    // m = 1e8: far beyond direct summation, should stay finite and ordered.
    const double lp1 = certify::log_binomial_pvalue(76000000, 100000000, 0.75);
    const double lp2 = certify::log_binomial_pvalue(77000000, 100000000, 0.75);
    EXPECT_TRUE(std::isfinite(lp1));
    EXPECT_LT(lp2, lp1);
    EXPECT_LT(lp1, 0.0);
}

TEST(BinomialPvalue, RelativeAccuracyAgainstSummationGrid) {
    for (double w : {0.6, 0.75, 0.9}) {
        for (int64_t m : {3, 17, 64, 200, 999, 2000}) {
            const auto tails = oracle::binomial_all_tails(m, w);
            for (int64_t v = 0; v <= m; v += std::max<int64_t>(1, m / 37)) {
                const long double ref = tails[v];
                if (ref < 1e-290L) continue;
                const double p = certify::binomial_pvalue(v, m, w);
                EXPECT_NEAR(p / static_cast<double>(ref), 1.0, 1e-10)
                    << "v=" << v << " m=" << m << " w=" << w;
            }
        }
    }
}

TEST(NRequired, GeometricAllWinsCase) {
    // omega_q = 1 means v = m: p = 0.5^m, crossing alpha = 0.05 at m = 5.
    EXPECT_EQ(certify::n_required(0.5, 1.0, 0.05), 5);
}

TEST(NRequired, ChshGoldenValueVerifiedMinimal) {
    const int64_t n = certify::n_required(0.75, kOmegaQChsh, 0.05);
    EXPECT_EQ(n, oracle::n_required_scan(0.75, kOmegaQChsh, 0.05, 1000));
    // Exhaustive minimality by the independent oracle.
    for (int64_t m = 1; m < n; ++m) {
        const int64_t v = oracle::expected_wins(m, kOmegaQChsh);
        EXPECT_GE(oracle::binomial_tail_sum(v, m, 0.75L), 0.05L);
    }
    const int64_t v = oracle::expected_wins(n, kOmegaQChsh);
    EXPECT_LT(oracle::binomial_tail_sum(v, n, 0.75L), 0.05L);
}

TEST(NRequired, SmallGapsNeedMoreRounds) {
    const int64_t slow = certify::n_required(0.75, 0.76, 0.05);
    const int64_t fast = certify::n_required(0.75, 0.80, 0.05);
    EXPECT_GT(slow, fast);
    EXPECT_EQ(slow, oracle::n_required_scan(0.75, 0.76, 0.05, slow + 10));
}

TEST(NRequired, MonotoneOnGrid) {
    // Non-increasing in omega_q, non-decreasing in omega_c, non-increasing
    // in alpha.
    for (double alpha : {0.05, 0.01}) {
        int64_t prev = INT64_MAX;
        for (double wq : {0.80, 0.82, 0.85, 0.88}) {
            const int64_t n = certify::n_required(0.75, wq, alpha);
            EXPECT_LE(n, prev);
            prev = n;
        }
    }
    EXPECT_LE(certify::n_required(0.70, 0.85, 0.05), certify::n_required(0.75, 0.85, 0.05));
    EXPECT_LE(certify::n_required(0.75, 0.85, 0.05), certify::n_required(0.75, 0.85, 0.01));
}

TEST(NRequired, CapRaisesUncertifiable) {
    EXPECT_THROW(certify::n_required(0.75, 0.7500001, 0.05, 2000),
                 certify::UncertifiableError);
}

TEST(NRequired, RejectsNonPositiveGap) {
    EXPECT_THROW(certify::n_required(0.8, 0.75, 0.05), std::invalid_argument);
}

TEST(RateRequired, ScalesInverselyWithWindow) {
    const certify::CertificationQuery q1(0.75, kOmegaQChsh, 0.05, 1.0);
    const certify::CertificationQuery q2(0.75, kOmegaQChsh, 0.05, 2.0);
    EXPECT_DOUBLE_EQ(certify::rate_required(q1), 2.0 * certify::rate_required(q2));
    const int64_t n = certify::n_required(0.75, kOmegaQChsh, 0.05);
    EXPECT_DOUBLE_EQ(certify::rate_required(q1), static_cast<double>(n));
}

TEST(RateRequired, ReferenceHardwareSatisfiable) {
    // Noisy benchmark game, 100 ms window: the required rate stays below the
    // reference supply of 7.9e3 pairs/s.
    const double omega_q = 0.5 * (1.0 + (1.0 - 0.061) / std::sqrt(2.0));
    const certify::CertificationQuery q(0.75, omega_q, 0.05, 0.1);
    EXPECT_LT(certify::rate_required(q), 7.9e3);
}

TEST(ScorePvalueBound, UnitBoundsCollapseToScaledBinomial) {
    const certify::ScoreBounds unit(0.0, 1.0);
    for (int64_t c : {60, 75, 85}) {
        const double bound = certify::score_pvalue_bound(static_cast<double>(c), 100, 0.75, unit);
        const double exact = certify::binomial_pvalue(c, 100, 0.75);
        const double expected = std::min(1.0, std::exp(1.0) * exact);
        EXPECT_NEAR(bound / expected, 1.0, 1e-10);
    }
}

TEST(ScorePvalueBound, FloorScoreClampsToOne) {
    const certify::ScoreBounds unit(0.0, 1.0);
    EXPECT_DOUBLE_EQ(certify::score_pvalue_bound(0.0, 50, 0.6, unit), 1.0);
}

TEST(ScorePvalueBound, GeometricInterpolationAgainstSummation) {
    const certify::ScoreBounds unit(0.0, 1.0);
    const double bound = certify::score_pvalue_bound(80.5, 100, 0.75, unit);
    const long double lo = oracle::binomial_tail_sum(80, 100, 0.75L);
    const long double hi = oracle::binomial_tail_sum(81, 100, 0.75L);
    const double expected =
        std::exp(1.0) * static_cast<double>(std::sqrt(lo * hi));  // equal 1/2 exponents
    EXPECT_NEAR(bound / expected, 1.0, 1e-10);
}

TEST(ScorePvalueBound, RejectsXiOutOfRange) {
    const certify::ScoreBounds bounds(0.0, 2.0);
    EXPECT_THROW(certify::score_pvalue_bound(1.0, 10, -0.1, bounds), std::invalid_argument);
    EXPECT_THROW(certify::score_pvalue_bound(1.0, 10, 2.0, bounds), std::invalid_argument);
}

TEST(ScorePvalueBound, RejectsScoreOutsideRange) {
    const certify::ScoreBounds unit(0.0, 1.0);
    EXPECT_THROW(certify::score_pvalue_bound(120.0, 100, 0.75, unit), std::invalid_argument);
}

TEST(NRequiredGeneral, WeakerThanExactBinomial) {
    const certify::ScoreBounds unit(0.0, 1.0);
    const int64_t general = certify::n_required_general(0.75, kOmegaQChsh, 0.05, unit);
    const int64_t exact = certify::n_required(0.75, kOmegaQChsh, 0.05);
    EXPECT_GE(general, exact);
}

TEST(NRequiredGeneral, WideScoreRange) {
    const certify::ScoreBounds bounds(0.0, 2.0);
    const int64_t n = certify::n_required_general(1.5, 1.7, 0.05, bounds);
    EXPECT_GT(n, 0);
    // Verify by direct evaluation of the bound at and below n.
    EXPECT_LT(certify::score_pvalue_bound(std::ceil(n * 1.7), n, 1.5, bounds), 0.05);
}

TEST(NRequiredGeneral, VanishingGapHitsCap) {
    const certify::ScoreBounds unit(0.0, 1.0);
    EXPECT_THROW(certify::n_required_general(0.75, 0.7500001, 0.05, unit, 2000),
                 certify::UncertifiableError);
}

TEST(CertificationQuery, Validation) {
    EXPECT_THROW(certify::CertificationQuery(0.8, 0.75, 0.05, 1.0), std::invalid_argument);
    EXPECT_THROW(certify::CertificationQuery(0.5, 0.9, 1.5, 1.0), std::invalid_argument);
    EXPECT_THROW(certify::CertificationQuery(0.5, 0.9, 0.05, -1.0), std::invalid_argument);
}
