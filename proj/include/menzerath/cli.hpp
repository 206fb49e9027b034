/*
   Copyright 2026 The menzerath authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "menzerath/error.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace menzerath {

/// Exit status of the command-line driver.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitFit = 2,
};

/// Input and usage problems map to kExitInput, modelling problems to kExitFit.
int exit_code_for(ErrorKind kind);

/// Runs `menzerath <args...>`; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace menzerath
