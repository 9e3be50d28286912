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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "icmforge/types.hpp"

namespace icmforge {

using Amplitude = std::complex<double>;
/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Amplitude, 4>;
using Matrix = Eigen::MatrixXcd;

/// Dense n-qubit state. Qubit 0 is the most significant bit of the basis
/// index, so |q0 q1 ... q_{n-1}> reads left to right.
class StateVector {
public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t num_qubits = 0);
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    static StateVector basis(std::size_t num_qubits, std::uint64_t index);
    /// Tensor product of single-qubit states, first factor is qubit 0.
    static StateVector product(std::span<const std::array<Amplitude, 2>> factors);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t i) const { return amps_[i]; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }

    double norm() const;
    void normalize();
    /// <this|other>
    Amplitude inner(const StateVector& other) const;
    StateVector tensor(const StateVector& other) const;

    void apply_1q(const Mat2& m, std::size_t qubit);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);

    /// Squared norm of the component with `qubit` equal to `bit`.
    double probability(std::size_t qubit, int bit) const;
    /// Keeps the `bit` component of `qubit` and removes that qubit. The
    /// result is not renormalized; its squared norm is the branch weight.
    StateVector project_out(std::size_t qubit, int bit) const;

    /// Applies a 2^n x 2^n matrix.
    StateVector transformed(const Matrix& unitary) const;

private:
    std::uint64_t mask(std::size_t qubit) const { return std::uint64_t{1} << (num_qubits_ - 1 - qubit); }

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

Mat2 gate_matrix(GateKind kind);
Mat2 init_unitary(InitKind kind);
/// Single-qubit state prepared by `kind` from |0>.
std::array<Amplitude, 2> init_state(InitKind kind);

/// Applies `gate` with operands read as positions in `state`. Throws
/// std::out_of_range for an operand index >= num_qubits.
StateVector apply_gate(const StateVector& state, const Gate& gate);

namespace unitaries {

Matrix identity(std::size_t num_qubits);
Matrix single(GateKind kind);
Matrix t();
Matrix tdag();
Matrix h();
Matrix s();
/// (H T)^n as an operator product, i.e. T applied first.
Matrix ht_power(std::size_t n);
/// Controlled-V with V = sqrt(X) = e^{i pi/4} exp(-i pi X / 4); control is qubit 0.
Matrix controlled_sqrt_x();
/// Unitary of a measurement-free gate list on `num_qubits` qubits.
Matrix of_gates(std::size_t num_qubits, std::span<const Gate> gates);

}  // namespace unitaries

}  // namespace icmforge
