// Copyright 2026 The icmforge Authors
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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "icmforge/statevector.hpp"

namespace icmforge {

/// Exit codes of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs one command; `args` excludes the program name. Artifacts go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Resolves t, tdag, s, h, x, z, identity[:k], cv and ht:<n>; anything else
/// is read as a matrix file. `arity` sizes the plain identity.
Matrix resolve_target(std::string_view spec, std::size_t arity);

/// Square complex matrix in text: one row per line, entries `re` or `re,im`,
/// '#' starts a comment. Throws std::invalid_argument when malformed.
Matrix parse_matrix(std::string_view text);

}  // namespace icmforge
