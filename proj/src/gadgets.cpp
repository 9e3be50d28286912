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


#include "icmforge/gadgets.hpp"

#include <map>
#include <optional>

#include "icmforge/branch.hpp"
#include "icmforge/compose.hpp"

namespace icmforge {

namespace {

/// Shared wiring of the two-ancilla T and T-dagger gadgets.
Circuit two_ancilla_topology(InitKind y_state, InitKind a_state, bool after_h) {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    const auto y = b.add_ancilla("y", y_state);
    const auto a = b.add_ancilla("a", a_state);
    if (after_h) {
        b.cz(a, q);
    } else {
        b.cnot(a, q);
    }
    b.cnot(a, y);
    const auto m0 = b.measure(q, after_h ? Basis::X : Basis::Z);
    b.measure_conditional(y, XorForm::of(m0), Basis::X, Basis::Z);
    b.add_output(a);
    return std::move(b).build();
}

Circuit with_frame(const Circuit& c, QubitId q, FrameEntry f) {
    CircuitBuilder b(c);
    b.set_frame(q, std::move(f));
    return std::move(b).build();
}

FrameEntry compact_frame() {
    const auto m0 = XorForm::of(OutcomeId{0});
    const auto m1 = XorForm::of(OutcomeId{1});
    return FrameEntry{m0, m0 ^ m1, {}};
}

/// Fits bit = c ^ sum(coef_i * m_i) over all recorded outcome vectors.
std::optional<XorForm> fit_affine(const std::map<std::vector<std::uint8_t>, bool>& table, std::size_t outcomes) {
    const std::uint64_t combos = std::uint64_t{1} << (outcomes + 1);
    for (std::uint64_t code = 0; code < combos; ++code) {
        XorForm f = XorForm::constant(code & 1U);
        for (std::size_t i = 0; i < outcomes; ++i) {
            if ((code >> (i + 1)) & 1U) f ^= XorForm::of(OutcomeId{static_cast<std::uint32_t>(i)});
        }
        bool ok = true;
        for (const auto& [bits, value] : table) {
            if (f.evaluate(bits) != value) {
                ok = false;
                break;
            }
        }
        if (ok) return f;
    }
    return std::nullopt;
}

}  // namespace

Circuit compact_t() {
    auto c = two_ancilla_topology(InitKind::Y, InitKind::A, false);
    return with_frame(c, QubitId{2}, compact_frame());
}

Circuit compact_t_dagger() {
    static const Circuit cached = [] {
        auto c = two_ancilla_topology(InitKind::Ydag, InitKind::Adag, false);
        return with_frame(c, QubitId{2}, derive_pauli_frame(c, unitaries::tdag()));
    }();
    return cached;
}

Circuit compact_t_after_h() {
    auto c = two_ancilla_topology(InitKind::Y, InitKind::A, true);
    return with_frame(c, QubitId{2}, compact_frame());
}

Circuit legacy_t_probabilistic() {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    const auto a = b.add_ancilla("a", InitKind::A);
    b.cnot(a, q);
    const auto m = XorForm::of(b.measure(q, Basis::Z));
    b.set_frame(a, FrameEntry{m, {}, m});
    b.add_output(a);
    return std::move(b).build();
}

Circuit s_teleport() {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    const auto y = b.add_ancilla("y", InitKind::Y);
    b.cnot(y, q);
    const auto m = XorForm::of(b.measure(q, Basis::Z));
    b.set_frame(y, FrameEntry{m, m, {}});
    b.add_output(y);
    return std::move(b).build();
}

Circuit sqrt_x_dagger_teleport() {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    const auto y = b.add_ancilla("y", InitKind::Y);
    b.cnot(q, y);
    const auto m = XorForm::of(b.measure(q, Basis::X));
    b.set_frame(y, FrameEntry{m, m, {}});
    b.add_output(y);
    return std::move(b).build();
}

Circuit pauli_frame_circuit(bool x, bool z) {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    b.set_frame(q, FrameEntry{XorForm::constant(x), XorForm::constant(z), {}});
    b.add_output(q);
    return std::move(b).build();
}

Circuit h_icm_gadget() {
    // H = S sqrt(X) S and sqrt(X) = X sqrt(X)^dagger, all up to phase.
    auto c = compose(s_teleport(), sqrt_x_dagger_teleport());
    c = compose(c, pauli_frame_circuit(true, false));
    c = compose(c, s_teleport());
    return hoist_unitaries(c);
}

Circuit one_bit_teleport() {
    CircuitBuilder b;
    const auto q = b.add_data("q");
    const auto a = b.add_ancilla("a", InitKind::Zero);
    b.cnot(q, a);
    const auto m = XorForm::of(b.measure(q, Basis::X));
    b.set_frame(a, FrameEntry{{}, m, {}});
    b.add_output(a);
    return std::move(b).build();
}

Circuit controlled_v_decomposition() {
    // CS = T_c T_t e^{-i pi/4 (c xor t)}; the parity lives on the ancilla.
    CircuitBuilder b;
    const auto c = b.add_data("c");
    const auto t = b.add_data("t");
    const auto anc = b.add_ancilla("anc", InitKind::Zero);
    b.gate(GateKind::H, t);
    b.gate(GateKind::T, c);
    b.gate(GateKind::T, t);
    b.cnot(c, anc);
    b.cnot(t, anc);
    b.gate(GateKind::Tdag, anc);
    b.cnot(t, anc);
    b.cnot(c, anc);
    b.gate(GateKind::H, t);
    b.add_output(c);
    b.add_output(t);
    return std::move(b).build();
}

FrameEntry derive_pauli_frame(const Circuit& frameless, const Matrix& target) {
    if (frameless.data_arity() != 1 || frameless.outputs().size() != 1) {
        throw GadgetDerivationError("frame derivation needs a single-input single-output gadget");
    }
    const auto inputs = informationally_complete_inputs(1);
    std::vector<BranchSet> runs;
    for (const auto& in : inputs) runs.push_back(enumerate_branches(frameless, in));

    std::map<std::vector<std::uint8_t>, bool> x_table;
    std::map<std::vector<std::uint8_t>, bool> z_table;
    for (std::size_t b = 0; b < runs[0].branches.size(); ++b) {
        const auto& key = runs[0].branches[b].outcomes;
        bool found = false;
        for (int x = 0; x < 2 && !found; ++x) {
            for (int z = 0; z < 2 && !found; ++z) {
                bool all = true;
                for (std::size_t i = 0; i < inputs.size() && all; ++i) {
                    const BranchResult* match = nullptr;
                    for (const auto& br : runs[i].branches) {
                        if (br.outcomes == key) match = &br;
                    }
                    if (match == nullptr) {
                        all = false;
                        break;
                    }
                    auto out = match->final_state;
                    if (x) out.apply_1q(gate_matrix(GateKind::X), 0);
                    if (z) out.apply_1q(gate_matrix(GateKind::Z), 0);
                    all = equiv_up_to_phase(inputs[i].transformed(target), out, 1e-9);
                }
                if (all) {
                    x_table[key] = x != 0;
                    z_table[key] = z != 0;
                    found = true;
                }
            }
        }
        if (!found) throw GadgetDerivationError("no Pauli correction fits one branch");
    }
    auto fx = fit_affine(x_table, frameless.num_outcomes());
    auto fz = fit_affine(z_table, frameless.num_outcomes());
    if (!fx || !fz) throw GadgetDerivationError("corrections are not affine in the outcomes");
    return FrameEntry{*fx, *fz, {}};
}

ResourceReport legacy_t_counts() {
    ResourceReport r;
    r.ancillae = 5;
    r.cnots = 6;
    r.measurements = 5;
    return r;
}

const std::vector<GadgetSpec>& gadget_catalog() {
    static const std::vector<GadgetSpec> catalog = [] {
        std::vector<GadgetSpec> c;
        c.push_back({"compact-t", 1, {InitKind::Y, InitKind::A}, {2, 2, 2}, unitaries::t(), IcmClass::Strict,
                     compact_t});
        c.push_back({"compact-tdag", 1, {InitKind::Ydag, InitKind::Adag}, {2, 2, 2}, unitaries::tdag(),
                     IcmClass::Extended, compact_t_dagger});
        c.push_back({"legacy-t-prob", 1, {InitKind::A}, {1, 1, 1}, unitaries::t(), IcmClass::NotIcm,
                     legacy_t_probabilistic});
        c.push_back({"h-icm", 1, {InitKind::Y, InitKind::Y, InitKind::Y}, {3, 3, 3}, unitaries::h(),
                     IcmClass::Strict, h_icm_gadget});
        c.push_back({"teleport", 1, {InitKind::Zero}, {1, 1, 1}, unitaries::identity(1), IcmClass::Strict,
                     one_bit_teleport});
        c.push_back({"cv-decomp", 2, {InitKind::Zero}, {1, 4, 0}, unitaries::controlled_sqrt_x(), IcmClass::NotIcm,
                     controlled_v_decomposition});
        c.push_back({"s-icm", 1, {InitKind::Y}, {1, 1, 1}, unitaries::s(), IcmClass::Strict, s_teleport});
        return c;
    }();
    return catalog;
}

const GadgetSpec* find_gadget(std::string_view name) {
    for (const auto& g : gadget_catalog()) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

}  // namespace icmforge
