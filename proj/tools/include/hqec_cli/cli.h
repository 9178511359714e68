// Copyright 2026 The hqec Authors
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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hqec_cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1,
    kExitUsage = 2,
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
};

/// Runs one invocation. `argv` excludes the program name.
CommandResult run_command(const std::vector<std::string>& argv);

/// One "path: value" line per leaf. Strings print bare, other scalars as JSON.
std::string render_human(const nlohmann::ordered_json& doc);

}  // namespace hqec_cli
