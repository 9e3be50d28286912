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


// Acceptance gate: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget. Exit code is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icmforge/branch.hpp"
#include "icmforge/compiler.hpp"
#include "icmforge/compose.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"
#include "icmforge/text_format.hpp"
#include "test_util.hpp"

namespace {

using namespace icmforge;

constexpr double kTol = 1e-10;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

ResourceReport acm(std::size_t a, std::size_t c, std::size_t m) {
    ResourceReport r;
    r.ancillae = a;
    r.cnots = c;
    r.measurements = m;
    return r;
}

bool acm_equal(const ResourceReport& r, std::size_t a, std::size_t c, std::size_t m) {
    return r.ancillae == a && r.cnots == c && r.measurements == m;
}

bool reductions_are(const ComparisonReport& c, int a, int n, int m) {
    return c.reductions.ancillae == a && c.reductions.cnots == n && c.reductions.measurements == m;
}

bool unitaries_first(const Circuit& c) {
    bool measured = false;
    for (const auto& op : c.ops()) {
        if (std::holds_alternative<MeasurementNode>(op)) measured = true;
        else if (measured) return false;
    }
    return true;
}

void criterion1(Check& c) {
    const auto gadget = compact_t();
    const auto eq = channel_equiv(gadget, unitaries::t(), kTol);
    c.expect(eq.passed, "channel_equiv(compact_t, T) failed; ");
    for (const auto& in : informationally_complete_inputs(1)) {
        const auto set = enumerate_branches(gadget, in);
        c.expect(set.branches.size() == 4, "expected 4 branches; ");
        for (const auto& b : set.branches) c.expect(std::abs(b.probability - 0.25) <= kTol, "branch p != 0.25; ");
    }
    // (m0, m1) -> (x, z): 00 -> I, 01 -> Z, 10 -> ZX, 11 -> X.
    const auto& f = gadget.frame(gadget.outputs()[0]);
    const bool table[4][2] = {{false, false}, {false, true}, {true, true}, {true, false}};
    for (int k = 0; k < 4; ++k) {
        const std::vector<std::uint8_t> bits = {static_cast<std::uint8_t>(k >> 1), static_cast<std::uint8_t>(k & 1)};
        c.expect(f.x.evaluate(bits) == table[k][0] && f.z.evaluate(bits) == table[k][1], "correction table; ");
    }
}

void criterion2(Check& c) {
    const auto cmp = compare(acm(5, 6, 5), acm(2, 2, 2));
    c.expect(reductions_are(cmp, 60, 67, 60), "reductions != 60/67/60; ");
    c.expect(reductions_are(compare(legacy_t_counts(), count(compact_t())), 60, 67, 60), "catalog counts; ");
}

void criterion3(Check& c) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto circuit = build_htn(n);
        c.expect(circuit.num_qubits() <= 14, "too many qubits; ");
        const auto eq = channel_equiv(circuit, unitaries::ht_power(n), kTol);
        c.expect(eq.passed, "htn channel n=" + std::to_string(n) + "; ");
        c.expect(eq.branches_per_input <= 4096, "too many branches; ");
    }
    for (std::size_t n = 1; n <= 1000; ++n) {
        const auto r = count(build_htn(n));
        const bool ok = r.ancillae == 2 * n && r.cnots == n && r.czs == n && r.hs == 2 && r.measurements == 2 * n &&
                        r.clifford_depth == 3 && r.measurement_depth == n + 1 &&
                        r.clifford_depth + r.measurement_depth == n + 4;
        c.expect(ok, "counts or depths at n=" + std::to_string(n) + "; ");
        if (!ok) break;
    }
}

void criterion4(Check& c) {
    auto single_t = testing::program(1, {Gate::single(GateKind::T, QubitId{0})});
    const auto form = time_optimal_transform(single_t);
    const auto per_t = count(form.circuit);
    c.expect(acm_equal(per_t, 3, 3, 3), "per-T != (3,3,3); ");
    c.expect(reductions_are(compare(acm(5, 6, 5), per_t), 40, 50, 40), "reductions != 40/50/40; ");

    std::vector<Circuit> programs;
    using G = Gate;
    const QubitId a{0};
    const QubitId b{1};
    programs.push_back(single_t);
    programs.push_back(testing::program(1, {G::single(GateKind::H, a), G::single(GateKind::T, a),
                                            G::single(GateKind::S, a), G::single(GateKind::Tdag, a),
                                            G::single(GateKind::H, a), G::single(GateKind::T, a)}));
    programs.push_back(testing::program(2, {G::single(GateKind::T, a), G::cnot(a, b), G::single(GateKind::T, b),
                                            G::single(GateKind::H, a), G::cz(a, b), G::single(GateKind::Tdag, a),
                                            G::single(GateKind::X, b), G::single(GateKind::T, b)}));
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 12; ++i) {
        programs.push_back(testing::random_clifford_t(rng, 1 + static_cast<std::size_t>(i % 2), 8, 4, true));
    }
    for (const auto& p : programs) {
        const auto f = time_optimal_transform(p);
        c.expect(unitaries_first(f.circuit), "unitary after first measurement; ");
        const auto r = count(f.circuit);
        const auto in = count(p);
        c.expect(acm_equal(r, 3 * f.t_count, in.cnots + 3 * f.t_count, 3 * f.t_count), "per-T budget; ");
        c.expect(channel_equiv(f.circuit, induced_unitary(p), kTol).passed, "time-optimal channel; ");
    }
}

void criterion5(Check& c) {
    const auto cv = controlled_v_decomposition();
    const auto converted = icm_convert(cv);
    const auto r = count(converted);
    c.expect(acm_equal(r, 13, 16, 12), "converted counts != 13/16/12; ");
    const auto legacy = icm_budget(cv, TGadgetPolicy::LegacyCounts, legacy_t_counts());
    c.expect(acm_equal(legacy, 22, 28, 21), "structural baseline != 22/28/21; ");
    c.expect(reductions_are(compare(legacy, r), 41, 43, 43), "reductions != 41/43/43; ");
    c.expect(converted.num_qubits() == 15, "expected 15 qubits; ");
    const auto eq = channel_equiv(converted, unitaries::controlled_sqrt_x(), kTol);
    c.expect(eq.passed, "controlled-V channel; ");
    c.expect(eq.branches_per_input == 4096, "expected 2^12 branches; ");
}

void criterion6(Check& c) {
    const auto g = compact_t_dagger();
    c.expect(acm_equal(count(g), 2, 2, 2), "T-dagger counts; ");
    c.expect(channel_equiv(g, unitaries::tdag(), kTol).passed, "T-dagger channel; ");
    c.expect(channel_equiv(compose(compact_t(), g), unitaries::identity(1), kTol).passed, "T then T-dagger; ");
}

void criterion7(Check& c) {
    const auto g = h_icm_gadget();
    c.expect(acm_equal(count(g), 3, 3, 3), "H counts; ");
    c.expect(validate_icm(g).passed(), "H gadget not ICM; ");
    c.expect(channel_equiv(g, unitaries::h(), kTol).passed, "H channel; ");
}

void criterion8(Check& c) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto chain = testing::random_gadget_chain(rng);
        for (const auto& in : informationally_complete_inputs(2)) {
            const auto p = enumerate_branches(chain.circuit, in).total_probability();
            c.expect(std::abs(p - 1.0) <= kTol, "probability sum; ");
        }
        const auto text = serialize_circuit(chain.circuit);
        const auto back = parse_circuit(text);
        c.expect(back == chain.circuit && serialize_circuit(back) == text, "round trip; ");
        ResourceReport sum;
        for (const auto& part : chain.parts) sum += count(part);
        auto whole = count(chain.circuit);
        whole.clifford_depth = whole.measurement_depth = 0;
        c.expect(whole == sum, "count additivity; ");
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "compact T gadget correctness", 1.0, criterion1},
        {2, "single-T comparison 60/67/60", 1.0, criterion2},
        {3, "(HT)^n counts, depths and channel", 60.0, criterion3},
        {4, "time-optimal transform", 120.0, criterion4},
        {5, "controlled-V ICM conversion", 300.0, criterion5},
        {6, "T-dagger gadget", 5.0, criterion6},
        {7, "H ICM gadget", 5.0, criterion7},
        {8, "property suites", 120.0, criterion8},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.budget_seconds) {
            check.expect(false, "over budget; ");
        }
        std::printf("ACCEPTANCE %d %s: %s (%.3f s, budget %.0f s)%s%s\n", cr.id, cr.name, check.ok ? "PASS" : "FAIL",
                    secs, cr.budget_seconds, check.ok ? "" : " ", check.why.str().c_str());
        if (!check.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
