// Copyright 2026 The WGP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WGP_TOOLS_CLI_H_
#define WGP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace wgp::cli {

// Process exit codes, one per error class.
enum ExitCode : int {
  kExitOk = 0,
  // compare: a scheduler broke its proven guarantee.
  kExitGuaranteeViolated = 1,
  kExitUsage = 2,
  kExitOracleUnknown = 3,
  kExitScheduleViolation = 4,
  kExitMalformedInput = 5,
  kExitInvalidInstance = 6,
  kExitHorizonExceeded = 7,
  kExitIoError = 8,
  kExitInvalidArgument = 9,
};

// Runs `wgp <args...>`; args excludes the program name. Regular output goes
// to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wgp::cli

#endif  // WGP_TOOLS_CLI_H_
