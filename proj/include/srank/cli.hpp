// Copyright 2026 The srank Authors
//
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

#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: gate, rank, decompose, verify, eval.
 *
 * Exposed as a library entry point so tests can drive the exact production
 * code path, including byte-identical JSON output.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace srank {

inline constexpr std::string_view kToolVersion = "1.0.0";

/** Run one CLI invocation. args excludes the program name. Reports go to
 *  out, error messages to err. Exit codes: 0 success (OPEN-EVIDENCE alone is
 *  success), 1 for FAIL or INCONSISTENT verdicts, 2 for usage errors and
 *  unknown commands, gates, claims, or files. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srank
