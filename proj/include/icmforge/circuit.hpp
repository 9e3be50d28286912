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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "icmforge/types.hpp"

namespace icmforge {

struct QubitDecl {
    std::string name;
    QubitRole role = QubitRole::Data;
    /// Set for every ancilla, empty for data qubits.
    std::optional<InitKind> init;
    bool operator==(const QubitDecl&) const = default;
};

/// Immutable circuit value. Construct through CircuitBuilder.
///
/// Qubit indices are dense; data qubits are the circuit inputs (in index
/// order) and `outputs()` lists the qubits carrying the result. Outcomes are
/// numbered 0..num_outcomes()-1 in measurement order.
class Circuit {
public:
    Circuit() = default;

    std::size_t num_qubits() const { return qubits_.size(); }
    std::size_t num_outcomes() const { return num_outcomes_; }
    const std::vector<QubitDecl>& qubits() const { return qubits_; }
    const QubitDecl& qubit(QubitId q) const { return qubits_.at(q.index); }
    const std::vector<Operation>& ops() const { return ops_; }
    const std::vector<QubitId>& outputs() const { return outputs_; }
    const std::vector<FrameEntry>& frames() const { return frames_; }
    const FrameEntry& frame(QubitId q) const { return frames_.at(q.index); }

    std::vector<QubitId> data_qubits() const;
    std::size_t data_arity() const;
    std::optional<QubitId> find_qubit(std::string_view name) const;
    /// Measurement node producing `outcome`.
    const MeasurementNode& measurement(OutcomeId outcome) const;
    bool is_measured(QubitId q) const;

    /// Same circuit with a different output list.
    Circuit with_outputs(std::vector<QubitId> outputs) const;

    bool operator==(const Circuit&) const = default;

private:
    friend class CircuitBuilder;

    std::vector<QubitDecl> qubits_;
    std::vector<Operation> ops_;
    std::vector<FrameEntry> frames_;
    std::vector<QubitId> outputs_;
    std::size_t num_outcomes_ = 0;
};

/// Incremental constructor enforcing the circuit well-formedness rules:
/// operands exist, two-qubit operands differ, each qubit is measured at most
/// once and never touched afterwards, conditional bases reference strictly
/// earlier outcomes. Violations throw std::invalid_argument.
class CircuitBuilder {
public:
    CircuitBuilder() = default;
    explicit CircuitBuilder(const Circuit& start);

    QubitId add_data(std::string name);
    QubitId add_ancilla(std::string name, InitKind init);
    /// `base` if unused, otherwise `base` followed by the smallest free number.
    std::string unique_name(std::string_view base) const;

    void append(const Gate& gate);
    void gate(GateKind kind, QubitId q) { append(Gate::single(kind, q)); }
    void cnot(QubitId control, QubitId target) { append(Gate::cnot(control, target)); }
    void cz(QubitId a, QubitId b) { append(Gate::cz(a, b)); }

    OutcomeId measure(QubitId q, Basis basis);
    /// Basis is `if0` when `selector` is 0 at run time, `if1` otherwise.
    OutcomeId measure_conditional(QubitId q, XorForm selector, Basis if0, Basis if1);

    void set_frame(QubitId q, FrameEntry entry);
    FrameEntry& frame(QubitId q) { return circuit_.frames_.at(q.index); }
    std::vector<FrameEntry>& frames() { return circuit_.frames_; }

    void add_output(QubitId q);
    void set_outputs(std::vector<QubitId> outputs);
    const std::vector<QubitId>& outputs() const { return circuit_.outputs_; }

    std::size_t num_qubits() const { return circuit_.qubits_.size(); }
    std::size_t num_outcomes() const { return circuit_.num_outcomes_; }
    const QubitDecl& qubit(QubitId q) const { return circuit_.qubits_.at(q.index); }
    bool is_measured(QubitId q) const { return measured_.at(q.index); }

    /// Reorders the operation list; caller guarantees the new order is
    /// physically equivalent. Measurement order must stay unchanged.
    std::vector<Operation>& mutable_ops() { return circuit_.ops_; }

    Circuit build() &&;

private:
    void check_qubit(QubitId q, const char* what) const;
    QubitId add_qubit(QubitDecl decl);

    Circuit circuit_;
    std::vector<bool> measured_;
    std::unordered_set<std::string> names_;
    /// Per base name, the smallest suffix not yet known to be taken.
    mutable std::unordered_map<std::string, std::size_t> next_suffix_;
};

struct IcmOptions {
    /// Accept the conjugate resource states Adag and Ydag.
    bool extended = false;
};

struct IcmViolation {
    std::size_t op_index = 0;
    std::string message;
};

struct IcmVerdict {
    std::vector<IcmViolation> violations;
    bool passed() const { return violations.empty(); }
};

/// Checks the initialization / CNOT / measurement layering discipline.
IcmVerdict validate_icm(const Circuit& circuit, IcmOptions options = {});

}  // namespace icmforge
