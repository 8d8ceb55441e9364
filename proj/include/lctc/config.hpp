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

#ifndef LCTC_CONFIG_HPP
#define LCTC_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lctc/hardware.hpp"
#include "lctc/multiparty.hpp"
#include "lctc/simulate.hpp"
#include "lctc/xor_game.hpp"

namespace lctc::cli {

/// Malformed configuration (unknown key, missing unit, bad value). Maps to
/// exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Dimension {
    kDimensionless,
    kTime,        // canonical: s
    kLengthKm,    // canonical: km
    kRate,        // canonical: Hz
    kVelocity,    // canonical: m/s
    kAttenuation  // canonical: dB/km
};

/// Parses "240 ns", "0.58 us", "5.8e-7 s", ... by folding the unit's
/// power-of-ten into the decimal exponent, so equal physical values parse to
/// bit-identical doubles. Physical dimensions require an explicit unit.
double parse_quantity(const std::string &text, Dimension dim, const std::string &key);

/// Canonical "value unit" rendering with 12 significant digits.
std::string format_quantity(double value, Dimension dim);

struct GameSection {
    int parties = 2;
    std::string distribution = "uniform";  // uniform | bernoulli | correlated | explicit
    double p = 0.5;
    double p11 = 0.25;
    std::vector<double> explicit_probs;  // 4 entries (2 parties) or 8 (3 parties)
    double beta1 = 0.0;
    double beta2 = 0.0;
    std::optional<std::array<std::array<std::array<double, 2>, 2>, 2>> utility;  // u[o][x][y]
};

struct NoiseSection {
    double eps_s = 0.0;
    double eps_meas = 0.0;
    double eps_ghz = 0.0;
};

struct CertificationSection {
    double alpha = 0.05;
    double t_env = 0.1;    // s
    double t_loc = 10e-6;  // s
    int64_t n_cap = 50000000;     // round-count search cap
    std::optional<double> u_min;  // presence switches nreq to the score bound
    std::optional<double> u_max;
};

struct SimulationSection {
    uint64_t seed = 1;
    int64_t rounds = 1000000;
    double duration = 1.0;  // s
    std::string trigger = "unlimited";  // unlimited | fixed | poisson
    double trigger_rate = 0.0;          // Hz
};

struct SweepSection {
    std::string parameter = "noise.eps";
    double start = 0.0;
    double stop = 0.28;
    int steps = 29;
    std::string scale = "linear";  // linear | log
    std::vector<double> alphas;    // defaults to the certification alpha
};

struct GridSection {
    double beta_start = 0.0;
    double beta_stop = 1.0;
    int beta_steps = 50;
    double p_start = 0.02;
    double p_stop = 0.98;
    int p_steps = 50;
};

struct CqedSection {
    std::string curve = "point";  // point | ghz | readout
    double c_in = 20.0;
    double c_in_start = 2.0;
    double c_in_stop = 100.0;
    int c_in_steps = 13;
    std::vector<double> sigma_t_gamma = {0.12, 0.34};
    std::vector<double> target_eps_meas = {0.002, 0.01};
    double delta_over_gamma = 100.0;
    double eta_det = 0.9;
    double k_window = 10.0;
    double trace_purity = 0.98;
    double source_emission_prob = 1.0;
    int quad_nodes = 64;
};

struct RunConfig {
    GameSection game;
    NoiseSection noise;
    hardware::NodeTimings timings;
    hardware::LinkBudget link;
    CertificationSection certification;
    SimulationSection simulation;
    SweepSection sweep;
    GridSection grid;
    CqedSection cqed;

    /// Builds the configured two-party input distribution.
    game::InputDistribution input_distribution() const;
    /// Builds the configured game matrix (two-party).
    game::GameMatrix game_matrix() const;
    /// Builds the configured utility table (two-party).
    game::UtilityTable utility_table() const;
    game::NoiseModel noise_model() const;
    /// Three-party distribution from the same section.
    multiparty::MultiInputDistribution input_distribution_three() const;
};

/// Parses config text. Unknown sections or keys raise ConfigError; physical
/// quantities must carry unit suffixes.
RunConfig parse_config_text(const std::string &text);
RunConfig parse_config_file(const std::string &path);

/// Named built-in configurations (chsh, table2, hft, grid, loadbalance).
const std::vector<std::string> &preset_names();
std::string preset_text(const std::string &name);

/// Renders the effective configuration back as parseable config text.
std::string render_config(const RunConfig &config);

}  // namespace lctc::cli

#endif
