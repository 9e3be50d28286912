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


#include "icmforge/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <variant>

namespace icmforge {

std::vector<QubitId> Circuit::data_qubits() const {
    std::vector<QubitId> out;
    for (std::uint32_t i = 0; i < qubits_.size(); ++i) {
        if (qubits_[i].role == QubitRole::Data) out.push_back({i});
    }
    return out;
}

std::size_t Circuit::data_arity() const {
    return static_cast<std::size_t>(std::count_if(
        qubits_.begin(), qubits_.end(), [](const QubitDecl& d) { return d.role == QubitRole::Data; }));
}

std::optional<QubitId> Circuit::find_qubit(std::string_view name) const {
    for (std::uint32_t i = 0; i < qubits_.size(); ++i) {
        if (qubits_[i].name == name) return QubitId{i};
    }
    return std::nullopt;
}

const MeasurementNode& Circuit::measurement(OutcomeId outcome) const {
    for (const auto& op : ops_) {
        if (const auto* m = std::get_if<MeasurementNode>(&op); m && m->outcome == outcome) return *m;
    }
    throw std::out_of_range("Circuit::measurement: unknown outcome");
}

bool Circuit::is_measured(QubitId q) const {
    return std::any_of(ops_.begin(), ops_.end(), [&](const Operation& op) {
        const auto* m = std::get_if<MeasurementNode>(&op);
        return m && m->qubit == q;
    });
}

Circuit Circuit::with_outputs(std::vector<QubitId> outputs) const {
    CircuitBuilder b(*this);
    b.set_outputs(std::move(outputs));
    return std::move(b).build();
}

CircuitBuilder::CircuitBuilder(const Circuit& start) : circuit_(start), measured_(start.num_qubits()) {
    for (const auto& op : start.ops()) {
        if (const auto* m = std::get_if<MeasurementNode>(&op)) measured_[m->qubit.index] = true;
    }
    for (const auto& q : start.qubits()) names_.insert(q.name);
}

QubitId CircuitBuilder::add_qubit(QubitDecl decl) {
    if (decl.name.empty()) throw std::invalid_argument("qubit name must not be empty");
    if (!names_.insert(decl.name).second) {
        throw std::invalid_argument("duplicate qubit name '" + decl.name + "'");
    }
    QubitId id{static_cast<std::uint32_t>(circuit_.qubits_.size())};
    circuit_.qubits_.push_back(std::move(decl));
    circuit_.frames_.emplace_back();
    measured_.push_back(false);
    return id;
}

QubitId CircuitBuilder::add_data(std::string name) {
    return add_qubit({std::move(name), QubitRole::Data, std::nullopt});
}

QubitId CircuitBuilder::add_ancilla(std::string name, InitKind init) {
    return add_qubit({std::move(name), QubitRole::Ancilla, init});
}

std::string CircuitBuilder::unique_name(std::string_view base) const {
    std::string candidate(base);
    if (names_.count(candidate) == 0) return candidate;
    auto& k = next_suffix_.try_emplace(candidate, 1).first->second;
    while (names_.count(std::string(base) + std::to_string(k)) != 0) ++k;
    return std::string(base) + std::to_string(k);
}

void CircuitBuilder::check_qubit(QubitId q, const char* what) const {
    if (q.index >= circuit_.qubits_.size()) {
        throw std::invalid_argument(std::string(what) + ": qubit index " + std::to_string(q.index) +
                                    " out of range");
    }
    if (measured_[q.index]) {
        throw std::invalid_argument(std::string(what) + ": qubit '" + circuit_.qubits_[q.index].name +
                                    "' used after its measurement");
    }
}

void CircuitBuilder::append(const Gate& gate) {
    check_qubit(gate.q0, "gate");
    if (gate.two_qubit()) {
        check_qubit(gate.q1, "gate");
        if (gate.q0 == gate.q1) throw std::invalid_argument("two-qubit gate operands must be distinct");
    }
    Gate stored = gate;
    if (!stored.two_qubit()) stored.q1 = stored.q0;
    circuit_.ops_.emplace_back(stored);
}

OutcomeId CircuitBuilder::measure(QubitId q, Basis basis) {
    return measure_conditional(q, XorForm{}, basis, basis);
}

OutcomeId CircuitBuilder::measure_conditional(QubitId q, XorForm selector, Basis if0, Basis if1) {
    check_qubit(q, "measure");
    if (auto max = selector.max_term(); max && *max >= circuit_.num_outcomes_) {
        throw std::invalid_argument("conditional basis references outcome m" + std::to_string(*max) +
                                    " which is not produced earlier");
    }
    MeasurementNode node;
    node.qubit = q;
    node.outcome = OutcomeId{static_cast<std::uint32_t>(circuit_.num_outcomes_)};
    if (if0 == if1 || selector.is_constant()) {
        Basis fixed = selector.constant_term() ? if1 : if0;
        node.if0 = node.if1 = fixed;
    } else {
        node.selector = std::move(selector);
        node.if0 = if0;
        node.if1 = if1;
    }
    circuit_.ops_.emplace_back(node);
    measured_[q.index] = true;
    ++circuit_.num_outcomes_;
    return node.outcome;
}

void CircuitBuilder::set_frame(QubitId q, FrameEntry entry) {
    if (q.index >= circuit_.qubits_.size()) throw std::invalid_argument("frame: qubit out of range");
    circuit_.frames_[q.index] = std::move(entry);
}

void CircuitBuilder::add_output(QubitId q) {
    if (q.index >= circuit_.qubits_.size()) throw std::invalid_argument("output: qubit out of range");
    circuit_.outputs_.push_back(q);
}

void CircuitBuilder::set_outputs(std::vector<QubitId> outputs) {
    circuit_.outputs_.clear();
    for (auto q : outputs) add_output(q);
}

Circuit CircuitBuilder::build() && {
    std::set<QubitId> seen;
    for (auto q : circuit_.outputs_) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument("qubit '" + circuit_.qubits_[q.index].name + "' listed as output twice");
        }
        if (measured_[q.index]) {
            throw std::invalid_argument("output qubit '" + circuit_.qubits_[q.index].name + "' is measured");
        }
    }
    for (std::size_t i = 0; i < circuit_.frames_.size(); ++i) {
        const auto& f = circuit_.frames_[i];
        if (f.is_identity()) continue;
        if (measured_[i]) {
            throw std::invalid_argument("frame on measured qubit '" + circuit_.qubits_[i].name + "'");
        }
        for (const XorForm* part : {&f.x, &f.z, &f.s}) {
            if (auto max = part->max_term(); max && *max >= circuit_.num_outcomes_) {
                throw std::invalid_argument("frame references unknown outcome m" + std::to_string(*max));
            }
        }
    }
    return std::move(circuit_);
}

IcmVerdict validate_icm(const Circuit& circuit, IcmOptions options) {
    IcmVerdict verdict;
    auto add = [&](std::size_t index, std::string message) {
        verdict.violations.push_back({index, std::move(message)});
    };

    for (const auto& q : circuit.qubits()) {
        if (!q.init) continue;
        const bool strict_ok = *q.init == InitKind::Zero || *q.init == InitKind::Plus ||
                               *q.init == InitKind::Y || *q.init == InitKind::A;
        if (!strict_ok && !options.extended) {
            add(0, "init kind " + std::string(to_string(*q.init)) + " on '" + q.name +
                       "' outside the allowed set");
        }
    }

    bool seen_measurement = false;
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        const auto& op = circuit.ops()[i];
        if (const auto* g = std::get_if<Gate>(&op)) {
            if (g->kind != GateKind::CNOT) {
                add(i, "non-CNOT unitary " + std::string(to_string(g->kind)) + " in gate layer");
            }
            if (seen_measurement) add(i, "measurement preceding a gate");
        } else {
            const auto& m = std::get<MeasurementNode>(op);
            seen_measurement = true;
            if (auto max = m.selector.max_term(); max && *max >= m.outcome.index) {
                add(i, "conditional basis references a later outcome");
            }
        }
    }

    for (std::size_t q = 0; q < circuit.frames().size(); ++q) {
        if (!circuit.frames()[q].is_pauli()) {
            add(circuit.ops().size(), "non-Pauli correction on '" + circuit.qubits()[q].name + "'");
        }
    }
    return verdict;
}

}  // namespace icmforge
