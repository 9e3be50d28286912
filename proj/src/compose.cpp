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


#include "icmforge/compose.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "icmforge/frame.hpp"

namespace icmforge {

void append_circuit(CircuitBuilder& into, const Circuit& next, std::span<const WirePair> wires) {
    const auto data = next.data_qubits();
    if (next.outputs().size() != data.size()) {
        throw std::invalid_argument("arity mismatch: appended circuit has " + std::to_string(data.size()) +
                                    " inputs but " + std::to_string(next.outputs().size()) + " outputs");
    }
    if (wires.size() != data.size()) {
        throw std::invalid_argument("arity mismatch: " + std::to_string(wires.size()) + " wires for " +
                                    std::to_string(data.size()) + " data inputs");
    }

    constexpr std::uint32_t kUnmapped = ~std::uint32_t{0};
    std::vector<QubitId> qubit_map(next.num_qubits(), QubitId{kUnmapped});
    std::vector<std::size_t> output_slot(next.num_qubits(), 0);
    std::vector<bool> from_used(into.num_qubits(), false);
    const auto& current_outputs = into.outputs();
    for (const auto& w : wires) {
        auto slot = std::find(current_outputs.begin(), current_outputs.end(), w.from);
        if (slot == current_outputs.end()) {
            throw std::invalid_argument("wire source qubit " + std::to_string(w.from.index) + " is not an output");
        }
        if (w.to.index >= next.num_qubits() || next.qubit(w.to).role != QubitRole::Data) {
            throw std::invalid_argument("wire destination qubit " + std::to_string(w.to.index) +
                                        " is not a data input");
        }
        if (from_used[w.from.index] || qubit_map[w.to.index].index != kUnmapped) {
            throw std::invalid_argument("wire map collision");
        }
        from_used[w.from.index] = true;
        qubit_map[w.to.index] = w.from;
        output_slot[w.to.index] = static_cast<std::size_t>(slot - current_outputs.begin());
    }

    for (std::uint32_t i = 0; i < next.num_qubits(); ++i) {
        const auto& decl = next.qubits()[i];
        if (decl.role == QubitRole::Ancilla) {
            qubit_map[i] = into.add_ancilla(into.unique_name(decl.name), *decl.init);
        }
    }
    auto map = [&](QubitId q) { return qubit_map[q.index]; };

    std::vector<XorForm> interpreted(next.num_outcomes());
    for (const auto& op : next.ops()) {
        if (const auto* g = std::get_if<Gate>(&op)) {
            Gate mapped{g->kind, map(g->q0), map(g->q1)};
            conjugate_frame(into.frames(), mapped);
            into.append(mapped);
            continue;
        }
        const auto& m = std::get<MeasurementNode>(op);
        const auto q = map(m.qubit);
        auto selector = m.selector.substitute(interpreted);
        const auto id = into.measure_conditional(q, std::move(selector), m.if0, m.if1);
        const auto& emitted = std::get<MeasurementNode>(into.mutable_ops().back());
        interpreted[m.outcome.index] = XorForm::of(id) ^ measurement_flip(into.frame(q), emitted);
        into.frame(q) = FrameEntry{};
    }

    for (std::uint32_t i = 0; i < next.num_qubits(); ++i) {
        const auto& f = next.frames()[i];
        if (f.is_identity()) continue;
        auto& target = into.frame(qubit_map[i]);
        auto s = f.s.substitute(interpreted);
        if (!s.is_zero() && !(target.x.is_zero() && target.z.is_zero())) {
            throw std::logic_error("non-Pauli correction cannot absorb a pending frame");
        }
        target.x ^= f.x.substitute(interpreted);
        target.z ^= f.z.substitute(interpreted);
        target.s ^= s;
    }

    auto outputs = into.outputs();
    for (std::size_t j = 0; j < data.size(); ++j) {
        outputs[output_slot[data[j].index]] = map(next.outputs()[j]);
    }
    into.set_outputs(std::move(outputs));
}

Circuit compose(const Circuit& first, const Circuit& second, std::span<const WirePair> wires) {
    CircuitBuilder builder(first);
    append_circuit(builder, second, wires);
    return std::move(builder).build();
}

Circuit compose(const Circuit& first, const Circuit& second) {
    const auto data = second.data_qubits();
    if (first.outputs().size() != data.size()) {
        throw std::invalid_argument("arity mismatch: " + std::to_string(first.outputs().size()) +
                                    " outputs feed " + std::to_string(data.size()) + " data inputs");
    }
    std::vector<WirePair> wires;
    for (std::size_t i = 0; i < data.size(); ++i) wires.push_back({first.outputs()[i], data[i]});
    return compose(first, second, wires);
}

Circuit identity_circuit(std::size_t arity) {
    CircuitBuilder b;
    for (std::size_t i = 0; i < arity; ++i) b.add_output(b.add_data("q" + std::to_string(i)));
    return std::move(b).build();
}

Circuit hoist_unitaries(const Circuit& circuit) {
    CircuitBuilder b(circuit);
    auto& ops = b.mutable_ops();
    std::stable_partition(ops.begin(), ops.end(),
                          [](const Operation& op) { return std::holds_alternative<Gate>(op); });
    return std::move(b).build();
}

}  // namespace icmforge
