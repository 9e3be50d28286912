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
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icmforge/circuit.hpp"
#include "icmforge/resource_report.hpp"
#include "icmforge/statevector.hpp"

namespace icmforge {

/// Raised when a correction table cannot be expressed as an XOR frame.
class GadgetDerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two-ancilla T gadget. Data q enters with |Y> on y and |A> on a;
/// CNOT(a->q), CNOT(a->y); q is measured in Z (m0), y in X if m0 = 0 and in
/// Z otherwise (m1). The result sits on a with frame x = m0, z = m0 ^ m1.
Circuit compact_t();

/// Same topology with Ydag and Adag resource states. The frame is solved by
/// searching the four Paulis per branch and fitting an XOR formula.
Circuit compact_t_dagger();

/// The compact T gadget preceded by H on its input: the data CNOT becomes a
/// CZ and the data measurement switches to the X basis.
Circuit compact_t_after_h();

/// One-ancilla |A> gadget whose outcome-1 branch needs an S X correction.
/// The correction is recorded with a non-Pauli `s` frame bit, so the circuit
/// is deliberately not ICM.
Circuit legacy_t_probabilistic();

/// |Y> teleportation of S: CNOT(y->q), Z-measure q, frame x = z = m.
Circuit s_teleport();

/// |Y> teleportation through CNOT(q->y) and an X measurement of q; applies
/// sqrt(X)^dagger up to the frame x = z = m.
Circuit sqrt_x_dagger_teleport();

/// ICM form of H with three |Y> ancillae: S, sqrt(X), S teleported in turn.
Circuit h_icm_gadget();

/// |0> ancilla, CNOT(q->a), X-measure q, frame z = m on a. Identity channel.
Circuit one_bit_teleport();

/// Controlled-sqrt(X) (control c, target t) from H, T, T, Tdag, H and four
/// CNOTs through an ancilla that starts and ends in |0>.
Circuit controlled_v_decomposition();

/// One data qubit, no operations, constant frame X^x Z^z.
Circuit pauli_frame_circuit(bool x, bool z);

/// Solves the Pauli correction of a single-output gadget whose frame is
/// still empty: per branch, the Pauli P with P * output = target * input up
/// to phase on every informationally complete input, then an affine XOR fit.
FrameEntry derive_pauli_frame(const Circuit& frameless, const Matrix& target);

/// Constant report of the five-ancilla teleportation-based T gadget used as
/// the comparison baseline (ancillae, CNOTs, measurements only).
ResourceReport legacy_t_counts();

struct GadgetCounts {
    std::size_t ancillae = 0;
    std::size_t cnots = 0;
    std::size_t measurements = 0;
    bool operator==(const GadgetCounts&) const = default;
};

enum class IcmClass { Strict, Extended, NotIcm };

struct GadgetSpec {
    std::string name;
    std::size_t data_arity = 1;
    std::vector<InitKind> ancilla_inits;
    GadgetCounts expected_counts;
    Matrix target;
    IcmClass icm = IcmClass::Strict;
    std::function<Circuit()> build;
};

/// Named gadgets: compact-t, compact-tdag, legacy-t-prob, h-icm, teleport,
/// cv-decomp, s-icm.
const std::vector<GadgetSpec>& gadget_catalog();
const GadgetSpec* find_gadget(std::string_view name);

}  // namespace icmforge
