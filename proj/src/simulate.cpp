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

#include "lctc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>
#include <vector>

#include "lctc/certify.hpp"
#include "lctc/rng.hpp"

namespace lctc::sim {

void Behavior::validate(double tol) const {
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    if (p[x][y][a][b] < -tol || p[x][y][a][b] > 1.0 + tol) {
                        throw std::invalid_argument("behavior entries must lie in [0, 1]");
                    }
                    sum += p[x][y][a][b];
                }
            }
            if (std::abs(sum - 1.0) > tol) {
                throw std::invalid_argument("behavior conditionals must be normalized");
            }
        }
    }
    if (no_signaling_defect() > tol) {
        throw std::invalid_argument("behavior violates no-signaling");
    }
}

double Behavior::no_signaling_defect() const {
    double worst = 0.0;
    // Alice's marginal must not depend on y, Bob's must not depend on x.
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            const double m0 = p[x][0][a][0] + p[x][0][a][1];
            const double m1 = p[x][1][a][0] + p[x][1][a][1];
            worst = std::max(worst, std::abs(m0 - m1));
        }
    }
    for (int y = 0; y < 2; ++y) {
        for (int b = 0; b < 2; ++b) {
            const double m0 = p[0][y][0][b] + p[0][y][1][b];
            const double m1 = p[1][y][0][b] + p[1][y][1][b];
            worst = std::max(worst, std::abs(m0 - m1));
        }
    }
    return worst;
}

Behavior behavior_from_strategy(const game::NoiseModel &noise,
                                const game::MeasurementAngles &angles) {
    const double eps = game::combined_infidelity(noise);
    const double ax[2] = {0.0, angles.theta};
    const double by[2] = {angles.phi0, angles.phi1};
    Behavior beh;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double corr = -(1.0 - eps) * std::cos(ax[x] - by[y]);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const double sign = ((a ^ b) == 0) ? 1.0 : -1.0;
                    beh.p[x][y][a][b] = 0.25 * (1.0 + sign * corr);
                }
            }
        }
    }
    return beh;
}

Behavior best_classical_behavior(const game::GameMatrix &m) {
    const game::ClassicalSolution sol = game::classical_value(m);
    Behavior beh{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            // Sign +1 encodes output 0, sign -1 output 1, so the correlator
            // (-1)^(a xor b) equals n_a n_b.
            const int a = sol.a_sign[x] > 0 ? 0 : 1;
            const int b = sol.b_sign[y] > 0 ? 0 : 1;
            beh.p[x][y][a][b] = 1.0;
        }
    }
    return beh;
}

TrialLog simulate_rounds(const game::InputDistribution &dist, const game::UtilityTable &utility,
                         const Behavior &behavior, int64_t rounds, uint64_t seed,
                         double omega_c) {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    behavior.validate(1e-9);

    std::mt19937_64 gen = make_stream(seed, 0);
    TrialLog log;
    log.rounds = rounds;
    log.seed = seed;

    const double cx[4] = {dist.p[0][0], dist.p[0][0] + dist.p[0][1],
                          dist.p[0][0] + dist.p[0][1] + dist.p[1][0], 1.0};
    for (int64_t i = 0; i < rounds; ++i) {
        const double ux = uniform01(gen);
        int cell = 0;
        while (cell < 3 && ux >= cx[cell]) ++cell;
        const int x = cell >> 1;
        const int y = cell & 1;

        const double uo = uniform01(gen);
        double acc = 0.0;
        int out = 3;
        for (int k = 0; k < 4; ++k) {
            acc += behavior.p[x][y][k >> 1][k & 1];
            if (uo < acc) {
                out = k;
                break;
            }
        }
        const int a = out >> 1;
        const int b = out & 1;

        const double score = utility.u[a ^ b][x][y];
        log.total_score += score;
        // The referee judges a win with probability equal to the utility.
        const double uw = uniform01(gen);
        if (uw < score) ++log.wins;
    }
    log.empirical_omega = log.total_score / static_cast<double>(rounds);
    log.pvalue = certify::binomial_pvalue(log.wins, rounds, omega_c);
    return log;
}

namespace {

enum EventType : int {
    kHerald = 0,
    kTrigger = 1,
    kLaunch = 2,
};

struct Event {
    double time;
    int type;
    int memory;  // herald: memory index; launch/trigger: sequence index

    bool operator>(const Event &other) const {
        if (time != other.time) return time > other.time;
        if (type != other.type) return type > other.type;
        return memory > other.memory;
    }
};

}  // namespace

PipelineStats simulate_pipeline(const PipelineConfig &config) {
    config.timings.validate();
    config.link.validate();
    if (!(config.duration > 0)) throw std::invalid_argument("duration must be positive");
    if (config.trigger.kind != TriggerKind::kUnlimited && !(config.trigger.rate > 0)) {
        throw std::invalid_argument("trigger rate must be positive");
    }

    const double tau_e = hardware::trial_period(config.timings);
    const double tau_link = hardware::link_latency(config.link);
    const double tau_dec = hardware::decision_latency(config.timings);
    const double tau_res = config.timings.tau_res;
    const double p_ent = hardware::ent_success_prob(config.timings, config.link);
    const int n_a = config.timings.n_a;

    std::mt19937_64 herald_gen = make_stream(config.seed, 1);
    std::mt19937_64 trigger_gen = make_stream(config.seed, 2);

    std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
    events.push({0.0, kLaunch, 0});
    if (config.trigger.kind == TriggerKind::kFixedRate) {
        events.push({1.0 / config.trigger.rate, kTrigger, 0});
    } else if (config.trigger.kind == TriggerKind::kPoisson) {
        const double gap = -std::log1p(-uniform01(trigger_gen)) / config.trigger.rate;
        events.push({gap, kTrigger, 0});
    }

    std::set<int> free_memories;
    for (int i = 0; i < n_a; ++i) free_memories.insert(i);
    // (release time, memory): memories returning to the free pool.
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>>
        releases;
    std::deque<int> buffer;  // FIFO of memories holding ready pairs

    PipelineStats stats;
    int64_t slots = 0;
    int64_t skipped_slots = 0;
    int64_t triggers = 0;
    int64_t stalled_triggers = 0;
    double buffer_area = 0.0;
    double last_time = 0.0;

    auto reclaim = [&](double now) {
        while (!releases.empty() && releases.top().first <= now) {
            free_memories.insert(releases.top().second);
            releases.pop();
        }
    };
    auto advance_clock = [&](double now) {
        buffer_area += static_cast<double>(buffer.size()) * (now - last_time);
        last_time = now;
    };
    auto consume_oldest = [&](double now) {
        const int mem = buffer.front();
        buffer.pop_front();
        ++stats.consumed;
        releases.push({now + tau_dec + tau_res, mem});
    };

    while (!events.empty()) {
        const Event ev = events.top();
        events.pop();
        if (ev.time >= config.duration) break;
        advance_clock(ev.time);

        switch (ev.type) {
            case kLaunch: {
                reclaim(ev.time);
                ++slots;
                if (free_memories.empty()) {
                    ++skipped_slots;
                } else {
                    const int mem = *free_memories.begin();
                    free_memories.erase(free_memories.begin());
                    ++stats.attempts;
                    events.push({ev.time + tau_e + tau_link, kHerald, mem});
                }
                const int64_t next = ev.memory + 1;
                events.push({static_cast<double>(next) * tau_e, kLaunch, static_cast<int>(next)});
                break;
            }
            case kHerald: {
                ++stats.heralds;
                const bool success = uniform01(herald_gen) < p_ent;
                if (success) {
                    ++stats.successes;
                    buffer.push_back(ev.memory);
                    stats.max_buffer = std::max<int64_t>(stats.max_buffer,
                                                         static_cast<int64_t>(buffer.size()));
                    if (config.trigger.kind == TriggerKind::kUnlimited) {
                        consume_oldest(ev.time);
                    }
                } else {
                    releases.push({ev.time + tau_res, ev.memory});
                }
                break;
            }
            case kTrigger: {
                ++triggers;
                if (buffer.empty()) {
                    ++stalled_triggers;
                } else {
                    consume_oldest(ev.time);
                }
                double next_time;
                if (config.trigger.kind == TriggerKind::kFixedRate) {
                    next_time = static_cast<double>(ev.memory + 2) / config.trigger.rate;
                } else {
                    next_time =
                        ev.time - std::log1p(-uniform01(trigger_gen)) / config.trigger.rate;
                }
                events.push({next_time, kTrigger, ev.memory + 1});
                break;
            }
        }
    }
    advance_clock(config.duration);

    stats.achieved_pair_rate = static_cast<double>(stats.successes) / config.duration;
    stats.mean_buffer = buffer_area / config.duration;
    stats.channel_idle_fraction =
        slots > 0 ? static_cast<double>(skipped_slots) / static_cast<double>(slots) : 0.0;
    stats.stall_fraction =
        triggers > 0 ? static_cast<double>(stalled_triggers) / static_cast<double>(triggers) : 0.0;
    stats.in_flight_at_end = stats.attempts - stats.heralds;
    return stats;
}

}  // namespace lctc::sim
