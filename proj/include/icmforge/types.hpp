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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace icmforge {

/// Dense index of a qubit inside one circuit.
struct QubitId {
    std::uint32_t index = 0;
    auto operator<=>(const QubitId&) const = default;
};

/// Index of a measurement outcome; outcomes are numbered in measurement order.
struct OutcomeId {
    std::uint32_t index = 0;
    auto operator<=>(const OutcomeId&) const = default;
};

enum class QubitRole : std::uint8_t { Data, Ancilla };

/// Ancilla preparations. Adag and Ydag are the conjugate resource states
/// needed by the T-dagger gadget and are only accepted in extended ICM mode.
enum class InitKind : std::uint8_t { Zero, Plus, Y, A, Adag, Ydag };

enum class GateKind : std::uint8_t { X, Z, S, Sdag, T, Tdag, H, CNOT, CZ };

enum class Basis : std::uint8_t { X, Z };

std::string_view to_string(InitKind kind);
std::string_view to_string(GateKind kind);
std::string_view to_string(Basis basis);
std::optional<InitKind> init_kind_from_string(std::string_view text);
std::optional<GateKind> gate_kind_from_string(std::string_view text);
std::optional<Basis> basis_from_string(std::string_view text);

bool is_two_qubit(GateKind kind);
bool is_clifford(GateKind kind);

/// Affine XOR formula over measurement outcomes: c ^ m_i ^ m_j ^ ...
///
/// Terms are kept sorted and unique, so equality is structural.
class XorForm {
public:
    XorForm() = default;

    static XorForm constant(bool value);
    static XorForm of(OutcomeId outcome);

    bool constant_term() const { return constant_; }
    std::span<const std::uint32_t> terms() const { return terms_; }
    bool is_zero() const { return !constant_ && terms_.empty(); }
    bool is_constant() const { return terms_.empty(); }
    bool contains(OutcomeId outcome) const;
    /// Largest referenced outcome index, if any.
    std::optional<std::uint32_t> max_term() const;

    XorForm& operator^=(const XorForm& other);
    friend XorForm operator^(XorForm lhs, const XorForm& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const XorForm&) const = default;

    /// Evaluates with `bits[i]` as the value of outcome i.
    bool evaluate(std::span<const std::uint8_t> bits) const;

    /// Replaces every outcome i by `mapping[i]`.
    XorForm substitute(std::span<const XorForm> mapping) const;

    /// Adds `offset` to every outcome index.
    XorForm shifted(std::uint32_t offset) const;

private:
    std::vector<std::uint32_t> terms_;
    bool constant_ = false;
};

struct Gate {
    GateKind kind = GateKind::X;
    QubitId q0{};
    /// Second operand of CNOT (target) and CZ; unused otherwise.
    QubitId q1{};

    static Gate single(GateKind kind, QubitId q) { return {kind, q, q}; }
    static Gate cnot(QubitId control, QubitId target) { return {GateKind::CNOT, control, target}; }
    static Gate cz(QubitId a, QubitId b) { return {GateKind::CZ, a, b}; }

    bool two_qubit() const { return is_two_qubit(kind); }
    bool touches(QubitId q) const { return q0 == q || (two_qubit() && q1 == q); }
    bool operator==(const Gate&) const = default;
};

/// A single-qubit X or Z measurement. When `if0 != if1` the basis is chosen
/// at run time: `if0` when `selector` evaluates to 0, `if1` otherwise.
struct MeasurementNode {
    QubitId qubit{};
    XorForm selector;
    Basis if0 = Basis::Z;
    Basis if1 = Basis::Z;
    OutcomeId outcome{};

    bool conditional() const { return if0 != if1; }
    Basis basis(std::span<const std::uint8_t> bits) const {
        if (!conditional()) return if0;
        return selector.evaluate(bits) ? if1 : if0;
    }
    bool operator==(const MeasurementNode&) const = default;
};

using Operation = std::variant<Gate, MeasurementNode>;

/// Pending correction on one qubit. The logical state is recovered by
/// applying X^x, then S^s, then Z^z to the physical qubit. `s` is only
/// ever non-zero for the probabilistic-S gadget, which is not ICM.
struct FrameEntry {
    XorForm x;
    XorForm z;
    XorForm s;

    bool is_identity() const { return x.is_zero() && z.is_zero() && s.is_zero(); }
    bool is_pauli() const { return s.is_zero(); }
    bool operator==(const FrameEntry&) const = default;
};

}  // namespace icmforge
