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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "icmforge/circuit.hpp"

namespace icmforge {

/// Syntax or scope error in circuit text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// Message without the position prefix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Line-oriented circuit format ('#' starts a comment):
///
///     qubit <name>
///     init <name> <ZERO|PLUS|Y|A|ADAG|YDAG>
///     gate <X|Z|S|SDAG|T|TDAG|H> <q>
///     cnot <control> <target>
///     cz <a> <b>
///     measure <q> <X|Z> -> <m>
///     measure <q> if <xor>=0 then <X|Z> else <X|Z> -> <m>
///     frame <q> x=<xor> z=<xor> [s=<xor>]
///     output <q>
///
/// An <xor> list is `0`, or outcome names and the constant `1` joined by `^`.
Circuit parse_circuit(std::string_view text);

/// Canonical text: declarations, operations, frames, outputs. Outcomes are
/// renamed m0, m1, ... in measurement order.
std::string serialize_circuit(const Circuit& circuit);

std::string format_xor(const XorForm& form);

}  // namespace icmforge
