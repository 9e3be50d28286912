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

#include <random>

#include "icmforge/branch.hpp"
#include "icmforge/compiler.hpp"
#include "icmforge/compose.hpp"
#include "icmforge/depth.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"
#include "test_util.hpp"

namespace icmforge {
namespace {

using testing::program;

constexpr double kTol = 1e-10;

bool no_gate_after_measurement(const Circuit& c) {
    bool measured = false;
    for (const auto& op : c.ops()) {
        if (std::holds_alternative<MeasurementNode>(op)) {
            measured = true;
        } else if (measured) {
            return false;
        }
    }
    return true;
}

TEST(IcmConvert, SingleTUsesCompactGadget) {
    const auto c = icm_convert(program(1, {Gate::single(GateKind::T, QubitId{0})}));
    const auto r = count(c);
    EXPECT_EQ(r.ancillae, 2u);
    EXPECT_EQ(r.cnots, 2u);
    EXPECT_EQ(r.measurements, 2u);
    EXPECT_TRUE(validate_icm(c).passed());
    EXPECT_TRUE(channel_equiv(c, unitaries::t(), kTol).passed);
}

TEST(IcmConvert, EmptyCircuitStaysEmpty) {
    EXPECT_EQ(icm_convert(Circuit{}), Circuit{});
    const auto id = icm_convert(identity_circuit(2));
    EXPECT_EQ(id, identity_circuit(2));
}

TEST(IcmConvert, ControlledVCounts) {
    const auto c = icm_convert(controlled_v_decomposition());
    const auto r = count(c);
    EXPECT_EQ(r.ancillae, 13u);
    EXPECT_EQ(r.cnots, 16u);
    EXPECT_EQ(r.measurements, 12u);
    EXPECT_TRUE(validate_icm(c, IcmOptions{true}).passed());
}

TEST(IcmConvert, PaulisGoToTheFrame) {
    const auto c = icm_convert(program(1, {Gate::single(GateKind::X, QubitId{0}), Gate::single(GateKind::Z, QubitId{0})}));
    EXPECT_EQ(count(c), ResourceReport{});
    EXPECT_EQ(c.frame(QubitId{0}).x, XorForm::constant(true));
    EXPECT_EQ(c.frame(QubitId{0}).z, XorForm::constant(true));
}

TEST(IcmConvert, SandSdagLowering) {
    const auto s = icm_convert(program(1, {Gate::single(GateKind::S, QubitId{0})}));
    EXPECT_EQ(count(s).ancillae, 1u);
    EXPECT_TRUE(channel_equiv(s, unitaries::s(), kTol).passed);
    const auto sd = icm_convert(program(1, {Gate::single(GateKind::Sdag, QubitId{0})}));
    EXPECT_TRUE(channel_equiv(sd, unitaries::s().adjoint(), kTol).passed);
}

TEST(IcmConvert, RejectsUnsupportedInput) {
    EXPECT_THROW(icm_convert(program(2, {Gate::cz(QubitId{0}, QubitId{1})})), UnsupportedGate);
    EXPECT_THROW(icm_convert(compact_t()), std::invalid_argument);
}

TEST(IcmConvert, RandomProgramsKeepTheirChannel) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 12; ++i) {
        const std::size_t arity = 1 + static_cast<std::size_t>(i % 2);
        const auto input = testing::random_clifford_t(rng, arity, 4, 2, false);
        const auto out = icm_convert(input);
        SCOPED_TRACE(i);
        EXPECT_TRUE(validate_icm(out, IcmOptions{true}).passed());
        EXPECT_TRUE(channel_equiv(out, induced_unitary(input), kTol).passed);
    }
}

TEST(BuildHtn, OptimizedCountsAndDepths) {
    for (std::size_t n : {1, 2, 3, 5, 17}) {
        const auto c = build_htn(n);
        const auto r = count(c);
        EXPECT_EQ(r.ancillae, 2 * n);
        EXPECT_EQ(r.cnots, n);
        EXPECT_EQ(r.czs, n);
        EXPECT_EQ(r.hs, 2u);
        EXPECT_EQ(r.measurements, 2 * n);
        EXPECT_EQ(r.clifford_depth, 3u) << n;
        EXPECT_EQ(r.measurement_depth, n + 1) << n;
        EXPECT_TRUE(no_gate_after_measurement(c));
    }
    const auto r4 = count(build_htn(4));
    EXPECT_EQ(r4.clifford_depth + r4.measurement_depth, 8u);
}

TEST(BuildHtn, ChannelForSmallN) {
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_TRUE(channel_equiv(build_htn(n, true), unitaries::ht_power(n), kTol).passed) << n;
        EXPECT_TRUE(channel_equiv(build_htn(n, false), unitaries::ht_power(n), kTol).passed) << n;
    }
}

TEST(BuildHtn, UnoptimizedChain) {
    const auto c = build_htn(3, false);
    const auto r = count(c);
    EXPECT_EQ(r.ancillae, 6u);
    EXPECT_EQ(r.cnots, 6u);
    EXPECT_EQ(r.hs, 3u);
    EXPECT_EQ(r.czs, 0u);
}

TEST(BuildHtn, RejectsZero) { EXPECT_THROW(build_htn(0), std::invalid_argument); }

TEST(TimeOptimal, PerTResources) {
    const auto form = time_optimal_transform(program(1, {Gate::single(GateKind::T, QubitId{0})}));
    const auto r = count(form.circuit);
    EXPECT_EQ(r.ancillae, 3u);
    EXPECT_EQ(r.cnots, 3u);
    EXPECT_EQ(r.measurements, 3u);
    EXPECT_EQ(form.t_count, 1u);
    EXPECT_TRUE(no_gate_after_measurement(form.circuit));
    EXPECT_TRUE(channel_equiv(form.circuit, unitaries::t(), kTol).passed);
}

TEST(TimeOptimal, CliffordOnlyAddsNoAncillae) {
    const auto in = program(2, {Gate::single(GateKind::H, QubitId{0}), Gate::cnot(QubitId{0}, QubitId{1}),
                                Gate::cz(QubitId{1}, QubitId{0}), Gate::single(GateKind::S, QubitId{1})});
    const auto form = time_optimal_transform(in);
    EXPECT_EQ(count(form.circuit).ancillae, 0u);
    EXPECT_TRUE(form.measurement_layers.empty());
    EXPECT_TRUE(channel_equiv(form.circuit, induced_unitary(in), kTol).passed);
}

TEST(TimeOptimal, LayersAreOrderedByQubitIndex) {
    const auto in = program(2, {Gate::single(GateKind::T, QubitId{1}), Gate::single(GateKind::T, QubitId{0})});
    const auto form = time_optimal_transform(in);
    ASSERT_EQ(form.measurement_layers.size(), 2u);
    std::uint32_t last = 0;
    for (auto id : form.measurement_layers[0]) {
        const auto q = form.circuit.measurement(id).qubit.index;
        EXPECT_GE(q, last);
        last = q;
    }
}

TEST(TimeOptimal, RandomProgramsKeepTheirChannel) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 8; ++i) {
        const std::size_t arity = 1 + static_cast<std::size_t>(i % 2);
        const auto input = testing::random_clifford_t(rng, arity, 5, 2, true);
        const auto form = time_optimal_transform(input);
        SCOPED_TRACE(i);
        EXPECT_TRUE(no_gate_after_measurement(form.circuit));
        EXPECT_TRUE(channel_equiv(form.circuit, induced_unitary(input), kTol).passed);
    }
}

TEST(Depth, EmptyAndSingleGadget) {
    EXPECT_EQ(clifford_depth(Circuit{}), 0u);
    EXPECT_EQ(measurement_depth(Circuit{}), 0u);
    EXPECT_EQ(measurement_depth(compact_t()), 2u);
}

TEST(Depth, ParallelGadgetsStayAtTwo) {
    CircuitBuilder b(identity_circuit(3));
    for (std::uint32_t q = 0; q < 3; ++q) {
        const auto g = compact_t();
        const WirePair w{b.outputs()[q], QubitId{0}};
        append_circuit(b, g, std::span<const WirePair>(&w, 1));
    }
    const auto c = std::move(b).build();
    EXPECT_EQ(measurement_depth(c), 2u);
    EXPECT_EQ(measurement_layers(c).size(), 2u);
    EXPECT_EQ(measurement_layers(c)[0].size(), 3u);
}

TEST(Depth, FrameOnlyReinterpretationAddsNoEdge) {
    // The first gadget's X frame reinterprets the second gadget's Z outcome;
    // that reinterpretation alone creates no edge.
    const auto c = compose(compact_t(), compact_t());
    const auto dag = dependency_dag(c);
    EXPECT_TRUE(dag.predecessors[2].empty());
    EXPECT_EQ(measurement_depth(c), 2u);
}

TEST(Depth, HtnChainFollowsSelectors) {
    const auto dag = dependency_dag(build_htn(3));
    std::size_t max_level = 0;
    for (auto l : dag.level) max_level = std::max(max_level, l);
    EXPECT_EQ(max_level, 4u);
}

TEST(Depth, GreedyLayering) {
    const auto c = program(3, {Gate::cnot(QubitId{0}, QubitId{1}), Gate::single(GateKind::H, QubitId{2}),
                               Gate::cnot(QubitId{1}, QubitId{2}), Gate::single(GateKind::H, QubitId{0})});
    EXPECT_EQ(clifford_depth(c), 2u);
}

TEST(Depth, LegacyHtnModel) {
    const auto r = legacy_htn_counts(4);
    EXPECT_EQ(r.clifford_depth, 4u);
    EXPECT_EQ(r.measurement_depth, 5u);
}

}  // namespace
}  // namespace icmforge
