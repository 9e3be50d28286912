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

#include <cmath>
#include <numbers>

#include "icmforge/branch.hpp"
#include "icmforge/compose.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"

namespace icmforge {
namespace {

constexpr double kTol = 1e-10;

GadgetCounts counts_of(const Circuit& c) {
    const auto r = count(c);
    return {r.ancillae, r.cnots, r.measurements};
}

Amplitude phase(double eighths) { return std::polar(1.0, eighths * std::numbers::pi / 4); }

TEST(CompactT, ChannelMatchesT) {
    const auto eq = channel_equiv(compact_t(), unitaries::t(), kTol);
    EXPECT_TRUE(eq.passed) << eq.worst_overlap;
    EXPECT_EQ(eq.inputs_checked, 4u);
    EXPECT_EQ(eq.branches_per_input, 4u);
    EXPECT_LT(eq.max_probability_spread, kTol);
}

TEST(CompactT, CorrectionTableMatchesCaseAnalysis) {
    // (m0, m1) -> (x, z): 00 -> I, 01 -> Z, 10 -> ZX, 11 -> X.
    const auto c = compact_t();
    const auto& f = c.frame(c.outputs()[0]);
    const int expected[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    for (int k = 0; k < 4; ++k) {
        const std::vector<std::uint8_t> bits = {static_cast<std::uint8_t>(k >> 1), static_cast<std::uint8_t>(k & 1)};
        EXPECT_EQ(f.x.evaluate(bits), expected[k][0] != 0) << k;
        EXPECT_EQ(f.z.evaluate(bits), expected[k][1] != 0) << k;
    }
}

TEST(CompactT, BranchesAreUniformWithPinnedPhases) {
    StateVector plus(1);
    plus.apply_1q(gate_matrix(GateKind::H), 0);
    const auto set = enumerate_branches(compact_t(), plus, plus.transformed(unitaries::t()));
    ASSERT_EQ(set.branches.size(), 4u);
    const double eighths[4] = {1, -1, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& b = set.branches[i];
        EXPECT_EQ(b.outcomes, (std::vector<std::uint8_t>{static_cast<std::uint8_t>(i >> 1),
                                                         static_cast<std::uint8_t>(i & 1)}));
        EXPECT_NEAR(b.probability, 0.25, kTol);
        EXPECT_NEAR(std::abs(b.global_phase - phase(eighths[i])), 0.0, 1e-9) << i;
    }
}

TEST(CompactT, DerivedFrameAgreesWithClosedForm) {
    CircuitBuilder b(compact_t());
    b.set_frame(QubitId{2}, FrameEntry{});
    const auto derived = derive_pauli_frame(std::move(b).build(), unitaries::t());
    EXPECT_EQ(derived, compact_t().frame(QubitId{2}));
}

TEST(CompactT, ConditionalBasisDependsOnFirstOutcome) {
    const auto c = compact_t();
    const auto& m1 = std::get<MeasurementNode>(c.ops()[3]);
    EXPECT_TRUE(m1.conditional());
    EXPECT_EQ(m1.selector, XorForm::of(OutcomeId{0}));
    EXPECT_EQ(m1.if0, Basis::X);
    EXPECT_EQ(m1.if1, Basis::Z);
}

TEST(CompactTDagger, ChannelAndCounts) {
    const auto c = compact_t_dagger();
    EXPECT_EQ(counts_of(c), (GadgetCounts{2, 2, 2}));
    EXPECT_TRUE(channel_equiv(c, unitaries::tdag(), kTol).passed);
    EXPECT_TRUE(validate_icm(c, IcmOptions{true}).passed());
}

TEST(CompactTDagger, CancelsCompactT) {
    EXPECT_TRUE(channel_equiv(compose(compact_t(), compact_t_dagger()), unitaries::identity(1), kTol).passed);
    EXPECT_TRUE(channel_equiv(compose(compact_t_dagger(), compact_t()), unitaries::identity(1), kTol).passed);
}

TEST(CompactTAfterH, ImplementsTH) {
    const auto c = compact_t_after_h();
    EXPECT_TRUE(channel_equiv(c, unitaries::t() * unitaries::h(), kTol).passed);
    EXPECT_EQ(count(c).czs, 1u);
    EXPECT_EQ(count(c).cnots, 1u);
}

TEST(LegacyT, ProbabilisticGadgetNeedsSCorrection) {
    const auto c = legacy_t_probabilistic();
    EXPECT_TRUE(channel_equiv(c, unitaries::t(), kTol).passed);
    EXPECT_FALSE(c.frame(c.outputs()[0]).is_pauli());
    EXPECT_FALSE(validate_icm(c, IcmOptions{true}).passed());
    EXPECT_EQ(legacy_t_counts().ancillae, 5u);
    EXPECT_EQ(legacy_t_counts().cnots, 6u);
    EXPECT_EQ(legacy_t_counts().measurements, 5u);
}

TEST(HGadget, CountsIcmAndChannel) {
    const auto c = h_icm_gadget();
    EXPECT_EQ(counts_of(c), (GadgetCounts{3, 3, 3}));
    EXPECT_TRUE(validate_icm(c).passed());
    EXPECT_TRUE(channel_equiv(c, unitaries::h(), kTol).passed);
}

TEST(SGadget, TeleportsS) {
    EXPECT_TRUE(channel_equiv(s_teleport(), unitaries::s(), kTol).passed);
    const Matrix sx_dag = (unitaries::h() * unitaries::s() * unitaries::h()).adjoint();
    EXPECT_TRUE(channel_equiv(sqrt_x_dagger_teleport(), sx_dag, kTol).passed);
}

TEST(OneBitTeleport, IsIdentity) {
    const auto c = one_bit_teleport();
    EXPECT_EQ(counts_of(c), (GadgetCounts{1, 1, 1}));
    EXPECT_TRUE(channel_equiv(c, unitaries::identity(1), kTol).passed);
}

TEST(PauliFrameCircuit, AppliesConstantPauli) {
    const Matrix x = unitaries::single(GateKind::X);
    const Matrix z = unitaries::single(GateKind::Z);
    EXPECT_TRUE(channel_equiv(pauli_frame_circuit(true, false), x, kTol).passed);
    EXPECT_TRUE(channel_equiv(pauli_frame_circuit(true, true), z * x, kTol).passed);
}

TEST(ControlledV, DecompositionShape) {
    const auto c = controlled_v_decomposition();
    const auto r = count(c);
    EXPECT_EQ(r.ancillae, 1u);
    EXPECT_EQ(r.cnots, 4u);
    EXPECT_EQ(r.hs, 2u);
    std::size_t t_like = 0;
    for (const auto& op : c.ops()) {
        const auto& g = std::get<Gate>(op);
        if (g.kind == GateKind::T || g.kind == GateKind::Tdag) ++t_like;
    }
    EXPECT_EQ(t_like, 3u);
    EXPECT_TRUE(channel_equiv(c, unitaries::controlled_sqrt_x(), kTol).passed);
}

TEST(DeriveFrame, RejectsMultiQubitGadget) {
    EXPECT_THROW(derive_pauli_frame(controlled_v_decomposition(), unitaries::controlled_sqrt_x()),
                 GadgetDerivationError);
}

TEST(DeriveFrame, RejectsImpossibleTarget) {
    CircuitBuilder b(compact_t());
    b.set_frame(QubitId{2}, FrameEntry{});
    EXPECT_THROW(derive_pauli_frame(std::move(b).build(), unitaries::h()), GadgetDerivationError);
}

TEST(Catalog, EveryEntryMatchesItsTarget) {
    for (const auto& g : gadget_catalog()) {
        SCOPED_TRACE(g.name);
        const auto c = g.build();
        EXPECT_EQ(c.data_arity(), g.data_arity);
        EXPECT_EQ(counts_of(c), g.expected_counts);
        std::vector<InitKind> inits;
        for (const auto& d : c.qubits()) {
            if (d.init) inits.push_back(*d.init);
        }
        EXPECT_EQ(inits, g.ancilla_inits);
        EXPECT_TRUE(channel_equiv(c, g.target, kTol).passed);
        const bool strict = validate_icm(c).passed();
        const bool extended = validate_icm(c, IcmOptions{true}).passed();
        switch (g.icm) {
            case IcmClass::Strict: EXPECT_TRUE(strict); break;
            case IcmClass::Extended: EXPECT_TRUE(extended && !strict); break;
            case IcmClass::NotIcm: EXPECT_FALSE(extended); break;
        }
    }
    EXPECT_EQ(find_gadget("nope"), nullptr);
    ASSERT_NE(find_gadget("h-icm"), nullptr);
}

}  // namespace
}  // namespace icmforge
