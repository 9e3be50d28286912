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


#include <gtest/gtest.h>

#include "icmforge/branch.hpp"
#include "icmforge/compose.hpp"
#include "icmforge/frame.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"
#include "icmforge/text_format.hpp"
#include "test_util.hpp"

namespace icmforge {
namespace {

using testing::single_gate;

FrameEntry bits(bool x, bool z) { return {XorForm::constant(x), XorForm::constant(z), {}}; }

/// Pushes a constant frame through `g` and checks it against conjugation by
/// the gate's matrix: U P U^dagger must equal the new Pauli up to phase.
void expect_conjugation_law(const Gate& g, std::size_t arity) {
    const Matrix x = unitaries::single(GateKind::X);
    const Matrix z = unitaries::single(GateKind::Z);
    const Matrix u = unitaries::of_gates(arity, std::span<const Gate>(&g, 1));
    auto pauli = [&](const std::vector<FrameEntry>& f) {
        Matrix p = unitaries::identity(arity);
        for (std::size_t q = 0; q < arity; ++q) {
            if (f[q].x.constant_term()) p = testing::embed(x, q, arity) * p;
            if (f[q].z.constant_term()) p = testing::embed(z, q, arity) * p;
        }
        return p;
    };
    for (std::uint32_t mask = 0; mask < (1U << (2 * arity)); ++mask) {
        std::vector<FrameEntry> f(arity);
        for (std::size_t q = 0; q < arity; ++q) f[q] = bits((mask >> (2 * q)) & 1U, (mask >> (2 * q + 1)) & 1U);
        const Matrix before = pauli(f);
        conjugate_frame(f, g);
        const Matrix expected = u * before * u.adjoint();
        const Matrix after = pauli(f);
        const auto overlap = std::abs((after.adjoint() * expected).trace()) / static_cast<double>(after.rows());
        EXPECT_NEAR(overlap, 1.0, 1e-12) << "gate " << to_string(g.kind) << " mask " << mask;
    }
}

TEST(FrameTracking, CliffordConjugationTable) {
    for (auto k : {GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdag, GateKind::H}) {
        expect_conjugation_law(Gate::single(k, QubitId{0}), 1);
    }
    expect_conjugation_law(Gate::cnot(QubitId{0}, QubitId{1}), 2);
    expect_conjugation_law(Gate::cnot(QubitId{1}, QubitId{0}), 2);
    expect_conjugation_law(Gate::cz(QubitId{0}, QubitId{1}), 2);
}

TEST(FrameTracking, TWithXFrameIsRejected) {
    std::vector<FrameEntry> f = {bits(true, false)};
    EXPECT_THROW(conjugate_frame(f, Gate::single(GateKind::T, QubitId{0})), std::logic_error);
    std::vector<FrameEntry> zonly = {bits(false, true)};
    EXPECT_NO_THROW(conjugate_frame(zonly, Gate::single(GateKind::Tdag, QubitId{0})));
    EXPECT_EQ(zonly[0], bits(false, true));
}

TEST(FrameTracking, MeasurementFlip) {
    const FrameEntry f{XorForm::of(OutcomeId{0}), XorForm::of(OutcomeId{1}), {}};
    EXPECT_EQ(measurement_flip(f, Basis::Z), XorForm::of(OutcomeId{0}));
    EXPECT_EQ(measurement_flip(f, Basis::X), XorForm::of(OutcomeId{1}));
}

TEST(Compose, PositionalComposeMatchesProductChannel) {
    const auto c = compose(compact_t(), compact_t());
    const auto eq = channel_equiv(c, unitaries::s(), 1e-10);
    EXPECT_TRUE(eq.passed) << eq.worst_overlap;
    EXPECT_EQ(eq.branches_per_input, 16u);
}

TEST(Compose, XFrameEntersSelectorAsInterpretedOutcome) {
    const auto c = compose(pauli_frame_circuit(true, false), compact_t());
    const auto& sel = std::get<MeasurementNode>(c.ops()[3]);
    EXPECT_EQ(sel.selector, XorForm::of(OutcomeId{0}) ^ XorForm::constant(true));
    EXPECT_TRUE(channel_equiv(c, unitaries::t() * unitaries::single(GateKind::X), 1e-10).passed);
}

TEST(Compose, ArityMismatchAndCollisionsThrow) {
    EXPECT_THROW(compose(identity_circuit(2), compact_t()), std::invalid_argument);
    const auto two = identity_circuit(2);
    const auto cnot = testing::program(2, {Gate::cnot(QubitId{0}, QubitId{1})});
    const WirePair dup[2] = {{QubitId{0}, QubitId{0}}, {QubitId{0}, QubitId{1}}};
    EXPECT_THROW(compose(two, cnot, dup), std::invalid_argument);
    const WirePair bad[1] = {{QubitId{0}, QubitId{1}}};
    EXPECT_THROW(compose(identity_circuit(1), compact_t(), bad), std::invalid_argument);
}

TEST(Compose, XFrameCannotPassThroughT) {
    const auto c = compose(pauli_frame_circuit(true, false), single_gate(GateKind::H));
    EXPECT_NO_THROW(compose(c, compact_t()));
    EXPECT_THROW(compose(pauli_frame_circuit(true, false), single_gate(GateKind::T)), std::logic_error);
}

TEST(Compose, IdentityIsNeutral) {
    const auto t = compact_t();
    const auto left = compose(identity_circuit(1), t);
    EXPECT_EQ(count(left), count(t));
    EXPECT_TRUE(channel_equiv(left, unitaries::t(), 1e-10).passed);
    EXPECT_EQ(serialize_circuit(compose(t, identity_circuit(1))), serialize_circuit(t));
}

TEST(Compose, HoistKeepsRelativeOrderAndChannel) {
    const auto c = compose(compact_t(), one_bit_teleport());
    const auto h = hoist_unitaries(c);
    bool seen_measure = false;
    for (const auto& op : h.ops()) {
        if (std::holds_alternative<MeasurementNode>(op)) seen_measure = true;
        else EXPECT_FALSE(seen_measure);
    }
    EXPECT_TRUE(channel_equiv(h, unitaries::t(), 1e-10).passed);
}

}  // namespace
}  // namespace icmforge
