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

#include "lctc/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace lctc::cli {

namespace {

std::string trim(const std::string &s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct UnitEntry {
    const char *suffix;
    int exp10;
};

const std::map<Dimension, std::vector<UnitEntry>> &unit_table() {
    static const std::map<Dimension, std::vector<UnitEntry>> table = {
        {Dimension::kTime, {{"ns", -9}, {"us", -6}, {"ms", -3}, {"s", 0}}},
        {Dimension::kLengthKm, {{"km", 0}, {"m", -3}}},
        {Dimension::kRate, {{"Hz", 0}, {"kHz", 3}, {"MHz", 6}, {"GHz", 9}}},
        {Dimension::kVelocity, {{"m/s", 0}, {"km/s", 3}}},
        {Dimension::kAttenuation, {{"dB/km", 0}}},
    };
    return table;
}

const char *canonical_unit(Dimension dim) {
    switch (dim) {
        case Dimension::kTime: return "s";
        case Dimension::kLengthKm: return "km";
        case Dimension::kRate: return "Hz";
        case Dimension::kVelocity: return "m/s";
        case Dimension::kAttenuation: return "dB/km";
        case Dimension::kDimensionless: return "";
    }
    return "";
}

bool is_number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.' ||
           c == 'e' || c == 'E';
}

// Applies a power-of-ten unit by rewriting the decimal exponent, so "580 ns",
// "0.58 us" and "5.8e-7 s" all round to the same double.
double apply_exponent(const std::string &number, int unit_exp, const std::string &key) {
    std::string mantissa = number;
    int exp10 = unit_exp;
    const size_t epos = number.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = number.substr(0, epos);
        try {
            exp10 += std::stoi(number.substr(epos + 1));
        } catch (const std::exception &) {
            throw ConfigError("bad numeric exponent for key '" + key + "': " + number);
        }
    }
    const std::string rebuilt = mantissa + "e" + std::to_string(exp10);
    char *end = nullptr;
    const double value = std::strtod(rebuilt.c_str(), &end);
    if (end == rebuilt.c_str() || *end != '\0') {
        throw ConfigError("bad numeric value for key '" + key + "': " + number);
    }
    return value;
}

}  // namespace

double parse_quantity(const std::string &text, Dimension dim, const std::string &key) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty value for key '" + key + "'");

    size_t split = 0;
    while (split < t.size() && is_number_char(t[split])) ++split;
    const std::string number = trim(t.substr(0, split));
    const std::string unit = trim(t.substr(split));
    if (number.empty()) throw ConfigError("missing number for key '" + key + "': " + text);

    if (dim == Dimension::kDimensionless) {
        if (!unit.empty()) {
            throw ConfigError("key '" + key + "' is dimensionless but has unit '" + unit + "'");
        }
        return apply_exponent(number, 0, key);
    }
    if (unit.empty()) {
        throw ConfigError("key '" + key + "' requires an explicit unit (got '" + text + "')");
    }
    for (const UnitEntry &entry : unit_table().at(dim)) {
        if (unit == entry.suffix) return apply_exponent(number, entry.exp10, key);
    }
    throw ConfigError("unknown unit '" + unit + "' for key '" + key + "'");
}

std::string format_quantity(double value, Dimension dim) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    std::string out = buf;
    const char *unit = canonical_unit(dim);
    if (*unit) {
        out += " ";
        out += unit;
    }
    return out;
}

namespace {

using KeyMap = std::map<std::string, std::string>;
using SectionMap = std::map<std::string, KeyMap>;

SectionMap tokenize(const std::string &text) {
    SectionMap sections;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("malformed section header at line " + std::to_string(lineno));
            }
            current = trim(line.substr(1, line.size() - 2));
            sections[current];
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        }
        if (current.empty()) {
            throw ConfigError("key outside any [section] at line " + std::to_string(lineno));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("empty key or value at line " + std::to_string(lineno));
        }
        auto [it, inserted] = sections[current].emplace(key, value);
        if (!inserted) throw ConfigError("duplicate key '" + key + "' in [" + current + "]");
    }
    return sections;
}

// Consumes keys while tracking unconsumed ones for strict validation.
class SectionReader {
  public:
    SectionReader(SectionMap &sections, const std::string &name) : name_(name) {
        auto it = sections.find(name);
        if (it != sections.end()) keys_ = &it->second;
    }

    std::optional<std::string> take(const std::string &key) {
        if (!keys_) return std::nullopt;
        auto it = keys_->find(key);
        if (it == keys_->end()) return std::nullopt;
        const std::string value = it->second;
        keys_->erase(it);
        return value;
    }

    double number(const std::string &key, Dimension dim, double fallback) {
        auto v = take(key);
        if (!v) return fallback;
        return parse_quantity(*v, dim, name_ + "." + key);
    }

    std::optional<double> number_opt(const std::string &key, Dimension dim) {
        auto v = take(key);
        if (!v) return std::nullopt;
        return parse_quantity(*v, dim, name_ + "." + key);
    }

    int64_t integer(const std::string &key, int64_t fallback) {
        auto v = take(key);
        if (!v) return fallback;
        try {
            size_t pos = 0;
            const int64_t out = std::stoll(*v, &pos);
            if (pos != v->size()) throw std::invalid_argument("trailing");
            return out;
        } catch (const std::exception &) {
            throw ConfigError("key '" + name_ + "." + key + "' must be an integer");
        }
    }

    std::string word(const std::string &key, const std::string &fallback) {
        auto v = take(key);
        return v ? *v : fallback;
    }

    std::vector<double> number_list(const std::string &key, Dimension dim,
                                    std::vector<double> fallback) {
        auto v = take(key);
        if (!v) return fallback;
        std::vector<double> out;
        std::istringstream in(*v);
        std::string item;
        while (std::getline(in, item, ',')) {
            out.push_back(parse_quantity(trim(item), dim, name_ + "." + key));
        }
        if (out.empty()) throw ConfigError("empty list for key '" + name_ + "." + key + "'");
        return out;
    }

  private:
    std::string name_;
    KeyMap *keys_ = nullptr;
};

void check_all_consumed(const SectionMap &sections) {
    static const std::vector<std::string> known = {"game",       "noise", "hardware",
                                                   "certification", "simulation", "sweep",
                                                   "grid",       "cqed"};
    for (const auto &[section, keys] : sections) {
        if (std::find(known.begin(), known.end(), section) == known.end()) {
            throw ConfigError("unknown section [" + section + "]");
        }
        if (!keys.empty()) {
            throw ConfigError("unknown key '" + keys.begin()->first + "' in [" + section + "]");
        }
    }
}

}  // namespace

RunConfig parse_config_text(const std::string &text) {
    SectionMap sections = tokenize(text);
    RunConfig cfg;

    {
        SectionReader game(sections, "game");
        if (auto preset = game.take("preset")) {
            if (*preset != "chsh") {
                throw ConfigError("unknown game preset '" + *preset + "' (expected 'chsh')");
            }
            cfg.game.distribution = "uniform";
            cfg.game.beta1 = cfg.game.beta2 = 0.0;
        }
        cfg.game.parties = static_cast<int>(game.integer("parties", cfg.game.parties));
        if (cfg.game.parties != 2 && cfg.game.parties != 3) {
            throw ConfigError("game.parties must be 2 or 3");
        }
        cfg.game.distribution = game.word("distribution", cfg.game.distribution);
        cfg.game.p = game.number("p", Dimension::kDimensionless, cfg.game.p);
        cfg.game.p11 = game.number("p11", Dimension::kDimensionless, cfg.game.p11);
        if (auto beta = game.number_opt("beta", Dimension::kDimensionless)) {
            cfg.game.beta1 = cfg.game.beta2 = *beta;
        }
        cfg.game.beta1 = game.number("beta1", Dimension::kDimensionless, cfg.game.beta1);
        cfg.game.beta2 = game.number("beta2", Dimension::kDimensionless, cfg.game.beta2);

        if (cfg.game.distribution == "explicit") {
            cfg.game.explicit_probs.clear();
            if (cfg.game.parties == 2) {
                // p11 doubles as the correlated-family parameter and the
                // fourth explicit entry.
                for (const char *key : {"p00", "p01", "p10"}) {
                    auto v = game.number_opt(key, Dimension::kDimensionless);
                    if (!v) throw ConfigError(std::string("explicit distribution needs key ") + key);
                    cfg.game.explicit_probs.push_back(*v);
                }
                cfg.game.explicit_probs.push_back(cfg.game.p11);
            } else {
                for (int idx = 0; idx < 8; ++idx) {
                    char key[8];
                    std::snprintf(key, sizeof(key), "p%d%d%d", (idx >> 2) & 1, (idx >> 1) & 1,
                                  idx & 1);
                    auto v = game.number_opt(key, Dimension::kDimensionless);
                    if (!v) throw ConfigError(std::string("explicit distribution needs key ") + key);
                    cfg.game.explicit_probs.push_back(*v);
                }
            }
        }

        bool any_utility = false;
        std::array<std::array<std::array<double, 2>, 2>, 2> u{};
        for (int o = 0; o < 2; ++o) {
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    char key[8];
                    std::snprintf(key, sizeof(key), "u%d_%d%d", o, x, y);
                    if (auto v = game.number_opt(key, Dimension::kDimensionless)) {
                        u[o][x][y] = *v;
                        any_utility = true;
                    }
                }
            }
        }
        if (any_utility) cfg.game.utility = u;
    }

    {
        SectionReader noise(sections, "noise");
        cfg.noise.eps_s = noise.number("eps_s", Dimension::kDimensionless, cfg.noise.eps_s);
        cfg.noise.eps_meas = noise.number("eps_meas", Dimension::kDimensionless, cfg.noise.eps_meas);
        cfg.noise.eps_ghz = noise.number("eps_ghz", Dimension::kDimensionless, cfg.noise.eps_ghz);
    }

    {
        SectionReader hw(sections, "hardware");
        cfg.timings.tau_p = hw.number("tau_p", Dimension::kTime, cfg.timings.tau_p);
        cfg.timings.tau_swap = hw.number("tau_swap", Dimension::kTime, cfg.timings.tau_swap);
        cfg.timings.tau_rot = hw.number("tau_rot", Dimension::kTime, cfg.timings.tau_rot);
        cfg.timings.tau_meas = hw.number("tau_meas", Dimension::kTime, cfg.timings.tau_meas);
        cfg.timings.tau_res = hw.number("tau_res", Dimension::kTime, cfg.timings.tau_res);
        cfg.timings.tau_mem = hw.number("tau_mem", Dimension::kTime, cfg.timings.tau_mem);
        cfg.timings.n_a = static_cast<int>(hw.integer("n_a", cfg.timings.n_a));
        cfg.timings.p_e = hw.number("p_e", Dimension::kDimensionless, cfg.timings.p_e);
        cfg.link.length_km = hw.number("length", Dimension::kLengthKm, cfg.link.length_km);
        cfg.link.alpha_att = hw.number("alpha_att", Dimension::kAttenuation, cfg.link.alpha_att);
        if (auto v = hw.number_opt("eta_att", Dimension::kDimensionless)) {
            cfg.link.eta_att_override = *v;
        }
        cfg.link.v_g = hw.number("v_g", Dimension::kVelocity, cfg.link.v_g);
        cfg.link.eta_det = hw.number("eta_det", Dimension::kDimensionless, cfg.link.eta_det);
        cfg.link.eta_misc = hw.number("eta_misc", Dimension::kDimensionless, cfg.link.eta_misc);
        cfg.link.dark_rate = hw.number("dark_rate", Dimension::kRate, cfg.link.dark_rate);
        cfg.link.n_ch = static_cast<int>(hw.integer("n_ch", cfg.link.n_ch));
    }

    {
        SectionReader cert(sections, "certification");
        cfg.certification.alpha =
            cert.number("alpha", Dimension::kDimensionless, cfg.certification.alpha);
        cfg.certification.t_env = cert.number("t_env", Dimension::kTime, cfg.certification.t_env);
        cfg.certification.t_loc = cert.number("t_loc", Dimension::kTime, cfg.certification.t_loc);
        cfg.certification.n_cap = cert.integer("n_cap", cfg.certification.n_cap);
        if (cfg.certification.n_cap < 1) throw ConfigError("certification.n_cap must be >= 1");
        if (auto v = cert.number_opt("u_min", Dimension::kDimensionless)) cfg.certification.u_min = *v;
        if (auto v = cert.number_opt("u_max", Dimension::kDimensionless)) cfg.certification.u_max = *v;
    }

    {
        SectionReader sim(sections, "simulation");
        cfg.simulation.seed = static_cast<uint64_t>(sim.integer("seed", cfg.simulation.seed));
        cfg.simulation.rounds = sim.integer("rounds", cfg.simulation.rounds);
        cfg.simulation.duration = sim.number("duration", Dimension::kTime, cfg.simulation.duration);
        cfg.simulation.trigger = sim.word("trigger", cfg.simulation.trigger);
        cfg.simulation.trigger_rate =
            sim.number("trigger_rate", Dimension::kRate, cfg.simulation.trigger_rate);
        if (cfg.simulation.trigger != "unlimited" && cfg.simulation.trigger != "fixed" &&
            cfg.simulation.trigger != "poisson") {
            throw ConfigError("simulation.trigger must be unlimited, fixed or poisson");
        }
    }

    {
        SectionReader sweep(sections, "sweep");
        cfg.sweep.parameter = sweep.word("parameter", cfg.sweep.parameter);
        cfg.sweep.start = sweep.number("start", Dimension::kDimensionless, cfg.sweep.start);
        cfg.sweep.stop = sweep.number("stop", Dimension::kDimensionless, cfg.sweep.stop);
        cfg.sweep.steps = static_cast<int>(sweep.integer("steps", cfg.sweep.steps));
        cfg.sweep.scale = sweep.word("scale", cfg.sweep.scale);
        cfg.sweep.alphas = sweep.number_list("alphas", Dimension::kDimensionless, cfg.sweep.alphas);
        if (cfg.sweep.steps < 2) throw ConfigError("sweep.steps must be >= 2");
        if (cfg.sweep.scale != "linear" && cfg.sweep.scale != "log") {
            throw ConfigError("sweep.scale must be linear or log");
        }
        if (cfg.sweep.scale == "log" && !(cfg.sweep.start > 0 && cfg.sweep.stop > 0)) {
            throw ConfigError("log sweeps require positive bounds");
        }
    }

    {
        SectionReader grid(sections, "grid");
        cfg.grid.beta_start = grid.number("beta_start", Dimension::kDimensionless, cfg.grid.beta_start);
        cfg.grid.beta_stop = grid.number("beta_stop", Dimension::kDimensionless, cfg.grid.beta_stop);
        cfg.grid.beta_steps = static_cast<int>(grid.integer("beta_steps", cfg.grid.beta_steps));
        cfg.grid.p_start = grid.number("p_start", Dimension::kDimensionless, cfg.grid.p_start);
        cfg.grid.p_stop = grid.number("p_stop", Dimension::kDimensionless, cfg.grid.p_stop);
        cfg.grid.p_steps = static_cast<int>(grid.integer("p_steps", cfg.grid.p_steps));
        if (cfg.grid.beta_steps < 2 || cfg.grid.p_steps < 2) {
            throw ConfigError("grid steps must be >= 2");
        }
    }

    {
        SectionReader cq(sections, "cqed");
        cfg.cqed.curve = cq.word("curve", cfg.cqed.curve);
        if (cfg.cqed.curve != "point" && cfg.cqed.curve != "ghz" && cfg.cqed.curve != "readout") {
            throw ConfigError("cqed.curve must be point, ghz or readout");
        }
        cfg.cqed.c_in = cq.number("c_in", Dimension::kDimensionless, cfg.cqed.c_in);
        cfg.cqed.c_in_start = cq.number("c_in_start", Dimension::kDimensionless, cfg.cqed.c_in_start);
        cfg.cqed.c_in_stop = cq.number("c_in_stop", Dimension::kDimensionless, cfg.cqed.c_in_stop);
        cfg.cqed.c_in_steps = static_cast<int>(cq.integer("c_in_steps", cfg.cqed.c_in_steps));
        cfg.cqed.sigma_t_gamma =
            cq.number_list("sigma_t_gamma", Dimension::kDimensionless, cfg.cqed.sigma_t_gamma);
        cfg.cqed.target_eps_meas =
            cq.number_list("target_eps_meas", Dimension::kDimensionless, cfg.cqed.target_eps_meas);
        cfg.cqed.delta_over_gamma =
            cq.number("delta_over_gamma", Dimension::kDimensionless, cfg.cqed.delta_over_gamma);
        cfg.cqed.eta_det = cq.number("eta_det", Dimension::kDimensionless, cfg.cqed.eta_det);
        cfg.cqed.k_window = cq.number("k_window", Dimension::kDimensionless, cfg.cqed.k_window);
        cfg.cqed.trace_purity =
            cq.number("trace_purity", Dimension::kDimensionless, cfg.cqed.trace_purity);
        cfg.cqed.source_emission_prob = cq.number("source_emission_prob", Dimension::kDimensionless,
                                                  cfg.cqed.source_emission_prob);
        cfg.cqed.quad_nodes = static_cast<int>(cq.integer("quad_nodes", cfg.cqed.quad_nodes));
    }

    check_all_consumed(sections);
    return cfg;
}

RunConfig parse_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

game::InputDistribution RunConfig::input_distribution() const {
    if (game.distribution == "uniform") return game::InputDistribution::uniform();
    if (game.distribution == "bernoulli") return game::InputDistribution::bernoulli(game.p);
    if (game.distribution == "correlated") return game::InputDistribution::correlated(game.p11);
    if (game.distribution == "explicit") {
        if (game.explicit_probs.size() != 4) {
            throw ConfigError("explicit two-party distribution needs 4 entries");
        }
        return game::InputDistribution(game.explicit_probs[0], game.explicit_probs[1],
                                       game.explicit_probs[2], game.explicit_probs[3]);
    }
    throw ConfigError("unknown game.distribution '" + game.distribution + "'");
}

game::UtilityTable RunConfig::utility_table() const {
    if (game.utility) {
        game::UtilityTable t;
        t.u = *game.utility;
        return t;
    }
    return game::UtilityTable::load_balancing(game.beta1, game.beta2);
}

game::GameMatrix RunConfig::game_matrix() const {
    return game::build_game_matrix_general(input_distribution(), utility_table());
}

game::NoiseModel RunConfig::noise_model() const {
    return game::NoiseModel(noise.eps_s, noise.eps_meas);
}

multiparty::MultiInputDistribution RunConfig::input_distribution_three() const {
    if (game.distribution == "uniform") return multiparty::MultiInputDistribution::uniform();
    if (game.distribution == "bernoulli") {
        return multiparty::MultiInputDistribution::bernoulli(game.p);
    }
    if (game.distribution == "explicit") {
        if (game.explicit_probs.size() != 8) {
            throw ConfigError("explicit three-party distribution needs 8 entries");
        }
        std::array<double, 8> p{};
        std::copy(game.explicit_probs.begin(), game.explicit_probs.end(), p.begin());
        return multiparty::MultiInputDistribution(p);
    }
    throw ConfigError("three-party games support uniform, bernoulli or explicit distributions");
}

namespace {

const char *kChshPreset = R"(# Canonical two-party benchmark game on reference hardware.
[game]
parties = 2
distribution = uniform
beta = 0

[noise]
eps_s = 0
eps_meas = 0

[hardware]
tau_p = 240 ns
tau_swap = 100 ns
tau_rot = 100 ns
tau_meas = 870 ns
tau_res = 1 us
tau_mem = 7.9 s
n_a = 250
p_e = 0.7
length = 50 km
alpha_att = 0.25 dB/km
eta_att = 0.06
v_g = 2.1e8 m/s
eta_det = 0.9
eta_misc = 0.8
dark_rate = 10 Hz
n_ch = 1

[certification]
alpha = 0.05
t_env = 100 ms
t_loc = 10 us

[simulation]
seed = 1
rounds = 1000000
duration = 2 s
trigger = unlimited
)";

const char *kTable2Preset = R"(# Reference operating point: metropolitan 50 km link, noisy entanglement.
[game]
parties = 2
distribution = uniform
beta = 0

[noise]
eps_s = 0.04
eps_meas = 0.002

[hardware]
tau_p = 240 ns
tau_swap = 100 ns
tau_rot = 100 ns
tau_meas = 870 ns
tau_res = 1 us
tau_mem = 7.9 s
n_a = 250
p_e = 0.7
length = 50 km
alpha_att = 0.25 dB/km
eta_att = 0.06
v_g = 2.1e8 m/s
eta_det = 0.9
eta_misc = 0.8
dark_rate = 10 Hz
n_ch = 1

[certification]
alpha = 0.05
t_env = 100 ms
t_loc = 10 us

[simulation]
seed = 1
rounds = 1000000
duration = 2 s
trigger = unlimited
)";

// Application presets encode representative timescale midpoints of the
// deployment scenarios; see README for the choices.
const char *kHftPreset = R"(# High-frequency trading: microsecond decisions, seconds of stationarity.
[game]
parties = 2
distribution = uniform
beta = 0

[noise]
eps_s = 0.04
eps_meas = 0.002

[hardware]
tau_p = 240 ns
tau_swap = 100 ns
tau_rot = 100 ns
tau_meas = 870 ns
tau_res = 1 us
tau_mem = 7.9 s
n_a = 250
p_e = 0.7
length = 50 km
alpha_att = 0.25 dB/km
eta_att = 0.06
v_g = 2.1e8 m/s
eta_det = 0.9
eta_misc = 0.8
dark_rate = 10 Hz
n_ch = 1

[certification]
alpha = 0.05
t_env = 5.5 s
t_loc = 5.5 us

[simulation]
seed = 1
rounds = 1000000
duration = 2 s
trigger = unlimited
)";

const char *kGridPreset = R"(# Power-grid response: millisecond decisions, minute-scale stationarity.
[game]
parties = 2
distribution = uniform
beta = 0

[noise]
eps_s = 0.04
eps_meas = 0.002

[hardware]
tau_p = 240 ns
tau_swap = 100 ns
tau_rot = 100 ns
tau_meas = 870 ns
tau_res = 1 us
tau_mem = 7.9 s
n_a = 250
p_e = 0.7
length = 50 km
alpha_att = 0.25 dB/km
eta_att = 0.06
v_g = 2.1e8 m/s
eta_det = 0.9
eta_misc = 0.8
dark_rate = 10 Hz
n_ch = 1

[certification]
alpha = 0.05
t_env = 60 s
t_loc = 5.5 ms

[simulation]
seed = 1
rounds = 1000000
duration = 2 s
trigger = unlimited
)";

const char *kLoadBalancePreset = R"(# Network load balancing: asymmetric mismatch penalties.
[game]
parties = 2
distribution = uniform
beta1 = 0.2
beta2 = 0.1

[noise]
eps_s = 0.04
eps_meas = 0.002

[hardware]
tau_p = 240 ns
tau_swap = 100 ns
tau_rot = 100 ns
tau_meas = 870 ns
tau_res = 1 us
tau_mem = 7.9 s
n_a = 250
p_e = 0.7
length = 50 km
alpha_att = 0.25 dB/km
eta_att = 0.06
v_g = 2.1e8 m/s
eta_det = 0.9
eta_misc = 0.8
dark_rate = 10 Hz
n_ch = 1

[certification]
alpha = 0.05
t_env = 5 s
t_loc = 5.5 us

[simulation]
seed = 1
rounds = 1000000
duration = 2 s
trigger = unlimited
)";

}  // namespace

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {"chsh", "table2", "hft", "grid", "loadbalance"};
    return names;
}

std::string preset_text(const std::string &name) {
    if (name == "chsh") return kChshPreset;
    if (name == "table2") return kTable2Preset;
    if (name == "hft") return kHftPreset;
    if (name == "grid") return kGridPreset;
    if (name == "loadbalance") return kLoadBalancePreset;
    throw ConfigError("unknown preset '" + name + "'");
}

std::string render_config(const RunConfig &config) {
    std::ostringstream out;
    auto dimless = [](double v) { return format_quantity(v, Dimension::kDimensionless); };
    out << "[game]\n";
    out << "parties = " << config.game.parties << "\n";
    out << "distribution = " << config.game.distribution << "\n";
    out << "p = " << dimless(config.game.p) << "\n";
    out << "p11 = " << dimless(config.game.p11) << "\n";
    out << "beta1 = " << dimless(config.game.beta1) << "\n";
    out << "beta2 = " << dimless(config.game.beta2) << "\n";
    if (config.game.distribution == "explicit") {
        const auto &probs = config.game.explicit_probs;
        if (config.game.parties == 2 && probs.size() == 4) {
            out << "p00 = " << dimless(probs[0]) << "\n";
            out << "p01 = " << dimless(probs[1]) << "\n";
            out << "p10 = " << dimless(probs[2]) << "\n";
        } else if (config.game.parties == 3 && probs.size() == 8) {
            for (int idx = 0; idx < 8; ++idx) {
                out << "p" << ((idx >> 2) & 1) << ((idx >> 1) & 1) << (idx & 1) << " = "
                    << dimless(probs[idx]) << "\n";
            }
        }
    }
    if (config.game.utility) {
        for (int o = 0; o < 2; ++o) {
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    out << "u" << o << "_" << x << y << " = "
                        << dimless((*config.game.utility)[o][x][y]) << "\n";
                }
            }
        }
    }
    out << "\n[noise]\n";
    out << "eps_s = " << dimless(config.noise.eps_s) << "\n";
    out << "eps_meas = " << dimless(config.noise.eps_meas) << "\n";
    out << "eps_ghz = " << dimless(config.noise.eps_ghz) << "\n";

    out << "\n[hardware]\n";
    auto time_q = [](double v) { return format_quantity(v, Dimension::kTime); };
    out << "tau_p = " << time_q(config.timings.tau_p) << "\n";
    out << "tau_swap = " << time_q(config.timings.tau_swap) << "\n";
    out << "tau_rot = " << time_q(config.timings.tau_rot) << "\n";
    out << "tau_meas = " << time_q(config.timings.tau_meas) << "\n";
    out << "tau_res = " << time_q(config.timings.tau_res) << "\n";
    out << "tau_mem = " << time_q(config.timings.tau_mem) << "\n";
    out << "n_a = " << config.timings.n_a << "\n";
    out << "p_e = " << dimless(config.timings.p_e) << "\n";
    out << "length = " << format_quantity(config.link.length_km, Dimension::kLengthKm) << "\n";
    out << "alpha_att = " << format_quantity(config.link.alpha_att, Dimension::kAttenuation)
        << "\n";
    if (config.link.eta_att_override) {
        out << "eta_att = " << dimless(*config.link.eta_att_override) << "\n";
    }
    out << "v_g = " << format_quantity(config.link.v_g, Dimension::kVelocity) << "\n";
    out << "eta_det = " << dimless(config.link.eta_det) << "\n";
    out << "eta_misc = " << dimless(config.link.eta_misc) << "\n";
    out << "dark_rate = " << format_quantity(config.link.dark_rate, Dimension::kRate) << "\n";
    out << "n_ch = " << config.link.n_ch << "\n";

    out << "\n[certification]\n";
    out << "alpha = " << dimless(config.certification.alpha) << "\n";
    out << "t_env = " << time_q(config.certification.t_env) << "\n";
    out << "t_loc = " << time_q(config.certification.t_loc) << "\n";
    out << "n_cap = " << config.certification.n_cap << "\n";
    if (config.certification.u_min) out << "u_min = " << dimless(*config.certification.u_min) << "\n";
    if (config.certification.u_max) out << "u_max = " << dimless(*config.certification.u_max) << "\n";

    out << "\n[simulation]\n";
    out << "seed = " << config.simulation.seed << "\n";
    out << "rounds = " << config.simulation.rounds << "\n";
    out << "duration = " << time_q(config.simulation.duration) << "\n";
    out << "trigger = " << config.simulation.trigger << "\n";
    if (config.simulation.trigger_rate > 0) {
        out << "trigger_rate = " << format_quantity(config.simulation.trigger_rate, Dimension::kRate)
            << "\n";
    }
    return out.str();
}

}  // namespace lctc::cli
