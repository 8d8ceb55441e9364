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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lctc/certify.hpp"
#include "lctc/commands.hpp"

namespace {

int run(const std::string &command, const std::string &config_path, const std::string &preset,
        const std::string &out_path, const std::string &format_name, int64_t seed_override) {
    using namespace lctc::cli;

    RunConfig config;
    if (!preset.empty()) {
        config = parse_config_text(preset_text(preset));
    }
    if (!config_path.empty()) {
        config = parse_config_file(config_path);
    }
    if (seed_override >= 0) {
        config.simulation.seed = static_cast<uint64_t>(seed_override);
    }
    const Format format = format_name == "csv" ? Format::kCsv : Format::kJson;

    const CommandResult result = run_command(command, config, format);
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return kExitConfigError;
        }
        out << result.output;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lctc: quantum-advantage analysis for latency-constrained tacit coordination"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    std::string out_path;
    std::string format_name = "json";
    int64_t seed_override = -1;

    app.add_option("--config", config_path, "Path to a run configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--preset", preset, "Built-in configuration")
        ->check(CLI::IsMember(lctc::cli::preset_names()));
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed_override, "Override the simulation seed");

    for (const char *name : {"gap", "criteria", "nreq", "sweep", "table2", "simulate",
                             "multiparty", "cqed"}) {
        app.add_subcommand(name)->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    if (config_path.empty() && preset.empty()) {
        std::cerr << "error: provide --config or --preset\n";
        return lctc::cli::kExitConfigError;
    }

    try {
        return run(command, config_path, preset, out_path, format_name, seed_override);
    } catch (const lctc::cli::ConfigError &err) {
        std::cerr << "config error: " << err.what() << "\n";
        return lctc::cli::kExitConfigError;
    } catch (const std::invalid_argument &err) {
        std::cerr << "config error: " << err.what() << "\n";
        return lctc::cli::kExitConfigError;
    } catch (const lctc::certify::UncertifiableError &err) {
        std::cerr << "numeric error: " << err.what() << "\n";
        return lctc::cli::kExitNumeric;
    } catch (const std::exception &err) {
        std::cerr << "numeric error: " << err.what() << "\n";
        return lctc::cli::kExitNumeric;
    }
}
