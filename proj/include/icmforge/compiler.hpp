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
#include <vector>

#include "icmforge/circuit.hpp"

namespace icmforge {

class UnsupportedGate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lowers a measurement-free circuit over {X, Z, S, Sdag, H, T, Tdag, CNOT}
/// to ICM form. T and Tdag become two-ancilla gadgets, H the three-ancilla
/// |Y> gadget, S a one-ancilla |Y> teleport (Sdag adds a Z to the frame),
/// and X/Z go straight into the frame. Gadgets are instantiated in program
/// order; all CNOTs are hoisted ahead of the time-ordered measurements.
Circuit icm_convert(const Circuit& input);

/// (HT)^n on one data qubit built from chained compact T gadgets.
///
/// With `optimize`, every inter-gadget H is folded into the next gadget by
/// CNOT(c,t) = H_t CZ(c,t) H_t, leaving 2n ancillae, n CNOT, n CZ, two H and
/// 2n measurements with Clifford depth 3. Without it, the plain chain keeps
/// one explicit H after each gadget. Throws std::invalid_argument for n = 0.
Circuit build_htn(std::size_t n, bool optimize = true);

struct TimeOptimalForm {
    /// All unitaries precede the first measurement.
    Circuit circuit;
    /// Measurements grouped by dependency level.
    std::vector<std::vector<OutcomeId>> measurement_layers;
    std::size_t clifford_depth = 0;
    std::size_t t_count = 0;
};

/// Every T (Tdag) becomes a compact gadget followed by a one-bit
/// teleportation; Cliffords stay as gates and run ahead of all measurements,
/// leaving only Pauli-frame updates outcome dependent.
TimeOptimalForm time_optimal_transform(const Circuit& input);

}  // namespace icmforge
