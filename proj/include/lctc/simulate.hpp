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

#ifndef LCTC_SIMULATE_HPP
#define LCTC_SIMULATE_HPP

#include <cstdint>

#include "lctc/hardware.hpp"
#include "lctc/xor_game.hpp"

namespace lctc::sim {

/// Conditional distribution P(a, b | x, y) realized by a strategy.
struct Behavior {
    // p[x][y][a][b]
    double p[2][2][2][2] = {};

    /// Throws unless every conditional is normalized and the no-signaling
    /// marginals agree within `tol`.
    void validate(double tol = 1e-12) const;
    /// Largest no-signaling violation across marginals.
    double no_signaling_defect() const;
};

/// Quantum behavior of the planar strategy `angles` on a Werner pair with
/// measurement flips: P(a,b|x,y) = (1 + (-1)^(a xor b) E_xy) / 4 with
/// E_xy = -(1 - eps) a_x . b_y. Marginals are uniform by construction.
Behavior behavior_from_strategy(const game::NoiseModel &noise, const game::MeasurementAngles &angles);

/// Deterministic behavior realizing classical_value's maximizing assignment.
Behavior best_classical_behavior(const game::GameMatrix &m);

struct TrialLog {
    int64_t rounds = 0;
    double total_score = 0.0;
    int64_t wins = 0;
    double empirical_omega = 0.0;
    double pvalue = 1.0;
    uint64_t seed = 0;
};

/// Samples `rounds` game rounds: inputs from `dist`, outputs from `behavior`,
/// score from `utility`, win from a Bernoulli(u) draw (u is the win
/// probability the referee assigns). The p-value tests the win count against
/// omega_c. Identical seeds produce identical logs.
TrialLog simulate_rounds(const game::InputDistribution &dist, const game::UtilityTable &utility,
                         const Behavior &behavior, int64_t rounds, uint64_t seed,
                         double omega_c);

enum class TriggerKind {
    kUnlimited,  // consume each pair the instant its herald arrives
    kFixedRate,
    kPoisson,
};

struct TriggerProcess {
    TriggerKind kind = TriggerKind::kUnlimited;
    double rate = 0.0;  // 1/s, used by fixed-rate and Poisson triggers
};

struct PipelineConfig {
    hardware::NodeTimings timings;
    hardware::LinkBudget link;
    TriggerProcess trigger;
    double duration = 1.0;  // s
    uint64_t seed = 0;
};

struct PipelineStats {
    int64_t attempts = 0;
    int64_t heralds = 0;
    int64_t successes = 0;
    int64_t consumed = 0;
    double achieved_pair_rate = 0.0;  // successes / duration
    double mean_buffer = 0.0;
    int64_t max_buffer = 0;
    double channel_idle_fraction = 0.0;  // launch slots with no free memory
    double stall_fraction = 0.0;         // triggers that found an empty buffer
    int64_t in_flight_at_end = 0;
};

/// Event-driven simulation of the time-multiplexed HEG pipeline. Attempts
/// launch every tau_e on the lowest-index free memory; the herald returns
/// tau_e + tau_link after launch and succeeds with probability p_ent.
/// Successful pairs enter a FIFO buffer; consumption holds the memory for
/// tau_dec + tau_res, failures release after tau_res. Simultaneous events
/// process as herald < trigger < launch, then by memory index.
PipelineStats simulate_pipeline(const PipelineConfig &config);

}  // namespace lctc::sim

#endif
