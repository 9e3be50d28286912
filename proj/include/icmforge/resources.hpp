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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icmforge/circuit.hpp"
#include "icmforge/resource_report.hpp"

namespace icmforge {

/// Tallies ancilla inits, CNOT, CZ, H and measurements, plus both depths.
ResourceReport count(const Circuit& circuit);

/// round(100 * (baseline - candidate) / baseline), half rounded up.
/// Empty when the baseline is zero.
std::optional<int> reduction_percent(std::size_t baseline, std::size_t candidate);

struct Reductions {
    std::optional<int> ancillae;
    std::optional<int> cnots;
    std::optional<int> czs;
    std::optional<int> hs;
    std::optional<int> measurements;
    bool operator==(const Reductions&) const = default;
};

struct ComparisonReport {
    ResourceReport baseline;
    ResourceReport candidate;
    Reductions reductions;
};

ComparisonReport compare(const ResourceReport& baseline, const ResourceReport& candidate);

/// How T gates are priced when reporting an ICM conversion. The circuit
/// produced by icm_convert is the same either way.
enum class TGadgetPolicy { Compact, LegacyCounts };

/// Structural ICM budget of a measurement-free Clifford+T circuit: each T or
/// Tdag at the policy's gadget price, each H at 3/3/3, each S or Sdag at
/// 1/1/1, each CNOT at face value, plus the circuit's own ancillae.
ResourceReport icm_budget(const Circuit& input, TGadgetPolicy policy,
                          const ResourceReport& legacy_t);

/// Counts model of the five-ancilla-per-step (HT)^n chain used as the
/// baseline of the optimized builder: 5n ancillae, 5n CNOT, n CZ, 2 H, 5n
/// measurements, Clifford depth 4 and measurement depth n + 1.
ResourceReport legacy_htn_counts(std::size_t n);

struct SuiteEntry {
    std::string name;
    ComparisonReport comparison;
    /// Expected ancilla, CNOT and measurement reductions.
    std::array<int, 3> expected{};
    bool passed = false;
};

struct SuiteOptions {
    /// Price of one legacy T gadget; overriding it is the negative control.
    ResourceReport legacy_t;
    std::size_t htn_n = 4;
    SuiteOptions();
};

/// table1, htn, time-optimal and cv-icm comparisons with pass flags. The
/// cv-icm entry also fails unless its structural baseline is 22/28/21.
std::vector<SuiteEntry> paper_reproduction_suite(const SuiteOptions& options = {});

/// One `name: a c m PASS|FAIL` line per entry.
std::string format_suite_text(const std::vector<SuiteEntry>& suite);
std::string format_suite_json(const std::vector<SuiteEntry>& suite);

/// `key=value` lines, one per field.
std::string format_report_text(const ResourceReport& report);
std::string format_report_json(const ResourceReport& report);

}  // namespace icmforge
