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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "icmforge/circuit.hpp"
#include "icmforge/statevector.hpp"

namespace icmforge {

struct SimOptions {
    /// Branches below this probability are dropped and reported.
    double prune_tol = 1e-14;
    /// Output qubits count as separable when the leading Schmidt weight is
    /// at least 1 - separability_tol.
    double separability_tol = 1e-10;
};

/// Output still entangled with measured or discarded qubits after the frame
/// is applied. Indicates a malformed circuit.
class NonSeparableOutput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BranchResult {
    /// Bit per outcome id.
    std::vector<std::uint8_t> outcomes;
    double probability = 0.0;
    /// Phase of <expected|final_state> when a reference was supplied, else 1.
    Amplitude global_phase{1.0, 0.0};
    /// Normalized state of the output qubits, in output order.
    StateVector final_state;
};

struct PrunedBranch {
    /// Outcomes fixed before the branch was dropped.
    std::vector<std::uint8_t> outcomes;
    double probability = 0.0;
};

struct BranchSet {
    std::vector<BranchResult> branches;
    std::vector<PrunedBranch> pruned;

    double total_probability() const;
};

/// Depth-first expansion over both outcomes of every measurement, outcome 0
/// first. `input` holds the data qubits in index order. The final frame is
/// applied per branch before the outputs are split off.
BranchSet enumerate_branches(const Circuit& circuit, const StateVector& input, const SimOptions& options = {});

/// As above, recording each branch's phase relative to `expected`.
BranchSet enumerate_branches(const Circuit& circuit, const StateVector& input, const StateVector& expected,
                             const SimOptions& options = {});

/// Passes iff |<a|b>| >= 1 - tol. Throws std::invalid_argument on a dimension mismatch.
bool equiv_up_to_phase(const StateVector& a, const StateVector& b, double tol);

/// {|0>, |1>, |+>, |+i>}^(tensor arity), first factor varying slowest.
std::vector<StateVector> informationally_complete_inputs(std::size_t arity);

struct EquivalenceResult {
    bool passed = false;
    /// Smallest |<target * input | branch output>| seen.
    double worst_overlap = 1.0;
    /// Largest difference of one branch's probability between two inputs.
    double max_probability_spread = 0.0;
    std::size_t inputs_checked = 0;
    std::size_t branches_per_input = 0;
    std::vector<std::string> failures;
    /// Branches for the |+>^n input, with phases relative to the target.
    std::vector<BranchResult> reference_branches;
};

/// Checks that every branch maps every informationally complete input to
/// target * input up to a phase, and that branch probabilities do not depend
/// on the input. Throws std::invalid_argument on a dimension mismatch.
EquivalenceResult channel_equiv(const Circuit& circuit, const Matrix& target, double tol = 1e-10,
                                const SimOptions& options = {});

/// Unitary of a circuit whose every input yields a single branch with
/// probability 1, such as a measurement-free circuit whose ancillae return
/// to a fixed state.
Matrix induced_unitary(const Circuit& circuit, const SimOptions& options = {});

}  // namespace icmforge
