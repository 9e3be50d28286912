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


#include "icmforge/compiler.hpp"

#include <algorithm>
#include <string>

#include "icmforge/compose.hpp"
#include "icmforge/depth.hpp"
#include "icmforge/frame.hpp"
#include "icmforge/gadgets.hpp"

namespace icmforge {

namespace {

/// Builder that starts with the input's qubits declared and every qubit
/// listed as an output, so output slot k always tracks input qubit k.
CircuitBuilder start_from_declarations(const Circuit& input) {
    CircuitBuilder b;
    for (const auto& decl : input.qubits()) {
        if (decl.role == QubitRole::Data) {
            b.add_data(decl.name);
        } else {
            b.add_ancilla(decl.name, *decl.init);
        }
    }
    std::vector<QubitId> all;
    for (std::uint32_t i = 0; i < input.num_qubits(); ++i) all.push_back(QubitId{i});
    b.set_outputs(std::move(all));
    return b;
}

void reject_measurements(const Circuit& input, const char* pass) {
    for (const auto& op : input.ops()) {
        if (std::holds_alternative<MeasurementNode>(op)) {
            throw std::invalid_argument(std::string(pass) + " expects a measurement-free circuit");
        }
    }
}

void append_on(CircuitBuilder& b, const Circuit& gadget, QubitId logical) {
    const WirePair w{b.outputs()[logical.index], gadget.data_qubits().front()};
    append_circuit(b, gadget, std::span<const WirePair>(&w, 1));
}

/// Applies a Clifford gate to the current carriers, updating the frame.
void apply_direct(CircuitBuilder& b, const Gate& g) {
    const auto& cur = b.outputs();
    Gate mapped{g.kind, cur[g.q0.index], cur[g.q1.index]};
    conjugate_frame(b.frames(), mapped);
    b.append(mapped);
}

/// Restores the input's output list and folds in its constant frame.
Circuit finish(CircuitBuilder b, const Circuit& input) {
    const auto carriers = b.outputs();
    for (std::uint32_t i = 0; i < input.num_qubits(); ++i) {
        const auto& f = input.frames()[i];
        if (f.is_identity()) continue;
        if (!f.x.is_constant() || !f.z.is_constant() || !f.is_pauli()) {
            throw std::invalid_argument("input frame must be a constant Pauli");
        }
        auto& target = b.frame(carriers[i]);
        target.x ^= f.x;
        target.z ^= f.z;
    }
    std::vector<QubitId> outs;
    for (auto q : input.outputs()) outs.push_back(carriers[q.index]);
    b.set_outputs(std::move(outs));
    return hoist_unitaries(std::move(b).build());
}

Circuit single_gate_circuit(GateKind kind) {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    b.gate(kind, q);
    b.add_output(q);
    return std::move(b).build();
}

}  // namespace

Circuit icm_convert(const Circuit& input) {
    reject_measurements(input, "icm_convert");
    auto b = start_from_declarations(input);
    for (const auto& op : input.ops()) {
        const auto& g = std::get<Gate>(op);
        switch (g.kind) {
            case GateKind::X: append_on(b, pauli_frame_circuit(true, false), g.q0); break;
            case GateKind::Z: append_on(b, pauli_frame_circuit(false, true), g.q0); break;
            case GateKind::S: append_on(b, s_teleport(), g.q0); break;
            case GateKind::Sdag:
                append_on(b, s_teleport(), g.q0);
                append_on(b, pauli_frame_circuit(false, true), g.q0);
                break;
            case GateKind::H: append_on(b, h_icm_gadget(), g.q0); break;
            case GateKind::T: append_on(b, compact_t(), g.q0); break;
            case GateKind::Tdag: append_on(b, compact_t_dagger(), g.q0); break;
            case GateKind::CNOT: apply_direct(b, g); break;
            default:
                throw UnsupportedGate("icm_convert: unsupported gate " + std::string(to_string(g.kind)));
        }
    }
    return finish(std::move(b), input);
}

Circuit build_htn(std::size_t n, bool optimize) {
    if (n == 0) throw std::invalid_argument("build_htn: n must be at least 1");
    const auto h = single_gate_circuit(GateKind::H);
    CircuitBuilder b(identity_circuit(1));
    const QubitId data{0};
    if (!optimize) {
        const auto t = compact_t();
        for (std::size_t i = 0; i < n; ++i) {
            append_on(b, t, data);
            append_on(b, h, data);
        }
        return std::move(b).build();
    }

    append_on(b, h, data);
    const auto t = compact_t_after_h();
    for (std::size_t i = 0; i < n; ++i) append_on(b, t, data);
    append_on(b, h, data);

    // Layer 1: input H and all gadget CNOTs. The CZ chain alternates between
    // layers 2 and 3, anchored so the last CZ shares layer 2 with nothing
    // that blocks the closing H.
    auto& ops = b.mutable_ops();
    std::stable_partition(ops.begin(), ops.end(), [](const Operation& op) { return std::holds_alternative<Gate>(op); });
    std::size_t cz_seen = 0;
    std::vector<std::pair<int, Operation>> ranked;
    for (auto& op : ops) {
        const auto* g = std::get_if<Gate>(&op);
        int rank = 5;
        if (g != nullptr) {
            switch (g->kind) {
                case GateKind::H: rank = g->q0 == data ? 0 : 4; break;
                case GateKind::CNOT: rank = 1; break;
                case GateKind::CZ: rank = ((n - ++cz_seen) % 2 == 0) ? 2 : 3; break;
                default: rank = 4; break;
            }
        }
        ranked.emplace_back(rank, std::move(op));
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 0; i < ops.size(); ++i) ops[i] = std::move(ranked[i].second);
    return std::move(b).build();
}

TimeOptimalForm time_optimal_transform(const Circuit& input) {
    reject_measurements(input, "time_optimal_transform");
    auto b = start_from_declarations(input);
    const auto teleport = one_bit_teleport();
    std::size_t t_count = 0;
    for (const auto& op : input.ops()) {
        const auto& g = std::get<Gate>(op);
        switch (g.kind) {
            case GateKind::T:
            case GateKind::Tdag:
                append_on(b, g.kind == GateKind::T ? compact_t() : compact_t_dagger(), g.q0);
                append_on(b, teleport, g.q0);
                ++t_count;
                break;
            case GateKind::X: append_on(b, pauli_frame_circuit(true, false), g.q0); break;
            case GateKind::Z: append_on(b, pauli_frame_circuit(false, true), g.q0); break;
            case GateKind::S:
            case GateKind::Sdag:
            case GateKind::H:
            case GateKind::CNOT:
            case GateKind::CZ: apply_direct(b, g); break;
        }
    }
    TimeOptimalForm form;
    form.circuit = finish(std::move(b), input);
    form.measurement_layers = measurement_layers(form.circuit);
    form.clifford_depth = clifford_depth(form.circuit);
    form.t_count = t_count;
    return form;
}

}  // namespace icmforge
