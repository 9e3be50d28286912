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

#include <span>

#include "icmforge/types.hpp"

namespace icmforge {

/// Pushes pending Pauli corrections through `gate`, i.e. replaces the frame
/// P by gate * P * gate^dagger. Throws std::logic_error when the result is
/// not a Pauli (an X component reaching T/Tdag, or any non-Pauli entry).
void conjugate_frame(std::span<FrameEntry> frames, const Gate& gate);

/// Bit that a pending frame flips in an outcome measured in `basis`:
/// Z-basis outcomes are flipped by the X component, X-basis ones by Z.
XorForm measurement_flip(const FrameEntry& frame, Basis basis);

/// Flip for a possibly conditional measurement. A conditional basis is only
/// affine when the flip agrees in both bases; otherwise std::logic_error.
XorForm measurement_flip(const FrameEntry& frame, const MeasurementNode& node);

}  // namespace icmforge
