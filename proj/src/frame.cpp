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


#include "icmforge/frame.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace icmforge {

namespace {

void require_pauli(const FrameEntry& f) {
    if (!f.is_pauli()) throw std::logic_error("non-Pauli correction cannot be pushed through a gate");
}

}  // namespace

void conjugate_frame(std::span<FrameEntry> frames, const Gate& gate) {
    auto& a = frames[gate.q0.index];
    require_pauli(a);
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::Z:
            return;
        case GateKind::H:
            std::swap(a.x, a.z);
            return;
        case GateKind::S:
        case GateKind::Sdag:
            // S X S^dag = Y, up to phase X Z.
            a.z ^= a.x;
            return;
        case GateKind::T:
        case GateKind::Tdag:
            if (!a.x.is_zero()) {
                throw std::logic_error("pending X correction on qubit " + std::to_string(gate.q0.index) +
                                       " does not commute with " + std::string(to_string(gate.kind)));
            }
            return;
        case GateKind::CNOT: {
            auto& t = frames[gate.q1.index];
            require_pauli(t);
            t.x ^= a.x;
            a.z ^= t.z;
            return;
        }
        case GateKind::CZ: {
            auto& b = frames[gate.q1.index];
            require_pauli(b);
            a.z ^= b.x;
            b.z ^= a.x;
            return;
        }
    }
}

XorForm measurement_flip(const FrameEntry& frame, Basis basis) {
    require_pauli(frame);
    return basis == Basis::X ? frame.z : frame.x;
}

XorForm measurement_flip(const FrameEntry& frame, const MeasurementNode& node) {
    if (!node.conditional()) return measurement_flip(frame, node.if0);
    require_pauli(frame);
    if (frame.x != frame.z) {
        throw std::logic_error("pending frame makes the conditional measurement on qubit " +
                               std::to_string(node.qubit.index) + " non-affine");
    }
    return frame.x;
}

}  // namespace icmforge
