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
#include <span>
#include <vector>

#include "icmforge/circuit.hpp"

namespace icmforge {

/// Connects output `from` of the first circuit to data input `to` of the second.
struct WirePair {
    QubitId from;
    QubitId to;
};

/// Appends `next` to the circuit under construction, wiring the listed
/// current outputs into every data qubit of `next`.
///
/// Ancillae of `next` become fresh qubits. Its outcomes are renumbered after
/// the existing ones, and the pending frame of the wired qubits is pushed
/// through its gates: every conditional basis and frame formula of `next` is
/// rewritten in terms of physical outcomes. Each wired output is replaced in
/// the output list by the matching output of `next` (data i -> output i).
///
/// Throws std::invalid_argument on a wire-map collision or arity mismatch and
/// std::logic_error when a pending frame cannot be propagated.
void append_circuit(CircuitBuilder& into, const Circuit& next, std::span<const WirePair> wires);

Circuit compose(const Circuit& first, const Circuit& second, std::span<const WirePair> wires);

/// Positional wiring: first.outputs()[i] -> second.data_qubits()[i].
Circuit compose(const Circuit& first, const Circuit& second);

/// `arity` data qubits named q0, q1, ... that are also the outputs.
Circuit identity_circuit(std::size_t arity);

/// Moves every gate ahead of every measurement, preserving relative order
/// within both groups.
Circuit hoist_unitaries(const Circuit& circuit);

}  // namespace icmforge
