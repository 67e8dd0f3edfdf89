//
// Copyright 2026 The VForge Authors
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
//

// The vforge command line: train-lm, modify, extend, eval and serve.

#ifndef VFORGE_CLI_H_
#define VFORGE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "vforge/error.h"

namespace vforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitExternal = 2;
inline constexpr int kExitUsage = 64;

// Exit status for an error escaping a subcommand.
int ExitCodeFor(ErrorCode code);

// `args` excludes the program name.
int RunMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vforge

#endif  // VFORGE_CLI_H_
