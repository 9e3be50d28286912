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
#include <vector>

#include "icmforge/circuit.hpp"

namespace icmforge {

/// Measurement dependency graph. Measurement v depends on u iff u appears in
/// v's basis selector. Selectors are written over physical outcomes, so this
/// covers both in-gadget conditioning and X-frame bits that feed the
/// interpretation of a conditioning outcome; frame-only reinterpretation
/// adds no edge.
struct DependencyDag {
    /// predecessors[v] lists the outcome ids v depends on.
    std::vector<std::vector<std::uint32_t>> predecessors;
    /// 1-based longest-path level of each measurement.
    std::vector<std::size_t> level;
};

/// Throws std::invalid_argument if a selector references a non-earlier outcome.
DependencyDag dependency_dag(const Circuit& circuit);

/// Longest dependency chain, counted in measurements.
std::size_t measurement_depth(const Circuit& circuit);

/// Measurements grouped by DAG level; within a layer ordered by qubit index.
std::vector<std::vector<OutcomeId>> measurement_layers(const Circuit& circuit);

/// ASAP layering of the unitary gates in list order: a gate lands one layer
/// after the latest layer of any of its operands.
std::size_t clifford_depth(const Circuit& circuit);

}  // namespace icmforge
