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

#ifndef LCTC_COMMANDS_HPP
#define LCTC_COMMANDS_HPP

#include <string>

#include "lctc/config.hpp"

namespace lctc::cli {

enum class Format { kJson, kCsv };

struct CommandResult {
    std::string output;
    int exit_code = 0;
};

// Exit codes: 0 success / criteria pass, 1 criteria fail, 2 config error,
// 3 numeric non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCriteriaFail = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumeric = 3;

CommandResult cmd_gap(const RunConfig &config, Format format);
CommandResult cmd_criteria(const RunConfig &config);
CommandResult cmd_nreq(const RunConfig &config);
CommandResult cmd_sweep(const RunConfig &config);
CommandResult cmd_table2(const RunConfig &config);
CommandResult cmd_simulate(const RunConfig &config);
CommandResult cmd_multiparty(const RunConfig &config, Format format);
CommandResult cmd_cqed(const RunConfig &config, Format format);

/// Dispatches by command name; unknown names raise ConfigError.
CommandResult run_command(const std::string &name, const RunConfig &config, Format format);

}  // namespace lctc::cli

#endif
