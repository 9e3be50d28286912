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


#include "icmforge/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace icmforge {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Amplitude kI{0.0, 1.0};
const Amplitude kOmega = std::polar(1.0, std::numbers::pi / 4);

Mat2 multiply(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count does not match qubit count");
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    s.amps_[0] = 0.0;
    s.amps_.at(index) = 1.0;
    return s;
}

StateVector StateVector::product(std::span<const std::array<Amplitude, 2>> factors) {
    std::vector<Amplitude> amps{1.0};
    for (const auto& f : factors) {
        std::vector<Amplitude> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * f[0];
            next[2 * i + 1] = amps[i] * f[1];
        }
        amps = std::move(next);
    }
    return StateVector(factors.size(), std::move(amps));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    for (auto& a : amps_) a /= n;
}

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.dimension() != dimension()) throw std::invalid_argument("inner product: dimension mismatch");
    Amplitude sum = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
    return sum;
}

StateVector StateVector::tensor(const StateVector& other) const {
    std::vector<Amplitude> amps(dimension() * other.dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        for (std::size_t j = 0; j < other.dimension(); ++j) amps[i * other.dimension() + j] = amps_[i] * other.amps_[j];
    }
    return StateVector(num_qubits_ + other.num_qubits_, std::move(amps));
}

void StateVector::apply_1q(const Mat2& m, std::size_t qubit) {
    const auto bit = mask(qubit);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const auto a0 = amps_[i];
        const auto a1 = amps_[i | bit];
        amps_[i] = m[0] * a0 + m[1] * a1;
        amps_[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    const auto c = mask(control);
    const auto t = mask(target);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    const auto both = mask(a) | mask(b);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & both) == both) amps_[i] = -amps_[i];
    }
}

double StateVector::probability(std::size_t qubit, int bit) const {
    const auto m = mask(qubit);
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i & m) != 0) == (bit != 0)) p += std::norm(amps_[i]);
    }
    return p;
}

StateVector StateVector::project_out(std::size_t qubit, int bit) const {
    // Split the index into the bits above and below `qubit`.
    const std::size_t low_bits = num_qubits_ - 1 - qubit;
    const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    std::vector<Amplitude> amps(amps_.size() / 2);
    for (std::uint64_t j = 0; j < amps.size(); ++j) {
        const std::uint64_t high = j >> low_bits;
        const std::uint64_t low = j & low_mask;
        const std::uint64_t i = (((high << 1) | static_cast<std::uint64_t>(bit)) << low_bits) | low;
        amps[j] = amps_[i];
    }
    return StateVector(num_qubits_ - 1, std::move(amps));
}

StateVector StateVector::transformed(const Matrix& unitary) const {
    if (static_cast<std::size_t>(unitary.rows()) != dimension() ||
        static_cast<std::size_t>(unitary.cols()) != dimension()) {
        throw std::invalid_argument("transformed: matrix dimension mismatch");
    }
    Eigen::Map<const Eigen::VectorXcd> v(amps_.data(), static_cast<Eigen::Index>(amps_.size()));
    Eigen::VectorXcd r = unitary * v;
    return StateVector(num_qubits_, std::vector<Amplitude>(r.data(), r.data() + r.size()));
}

Mat2 gate_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S:
            return {1.0, 0.0, 0.0, kI};
        case GateKind::Sdag:
            return {1.0, 0.0, 0.0, -kI};
        case GateKind::T:
            return {1.0, 0.0, 0.0, kOmega};
        case GateKind::Tdag:
            return {1.0, 0.0, 0.0, std::conj(kOmega)};
        case GateKind::H:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::CNOT:
        case GateKind::CZ:
            break;
    }
    throw std::invalid_argument("gate_matrix: not a single-qubit gate");
}

Mat2 init_unitary(InitKind kind) {
    const Mat2 h = gate_matrix(GateKind::H);
    switch (kind) {
        case InitKind::Zero:
            return {1.0, 0.0, 0.0, 1.0};
        case InitKind::Plus:
            return h;
        case InitKind::Y:
            return multiply(gate_matrix(GateKind::S), h);
        case InitKind::A:
            return multiply(gate_matrix(GateKind::T), h);
        case InitKind::Adag:
            return multiply(gate_matrix(GateKind::Tdag), h);
        case InitKind::Ydag:
            return multiply(gate_matrix(GateKind::Sdag), h);
    }
    throw std::invalid_argument("init_unitary: unknown kind");
}

std::array<Amplitude, 2> init_state(InitKind kind) {
    const auto u = init_unitary(kind);
    return {u[0], u[2]};
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    const auto n = state.num_qubits();
    auto check = [&](QubitId q) {
        if (q.index >= n) {
            throw std::out_of_range("apply_gate: qubit " + std::to_string(q.index) + " out of range for " +
                                    std::to_string(n) + " qubits");
        }
    };
    check(gate.q0);
    if (gate.two_qubit()) check(gate.q1);
    StateVector out = state;
    switch (gate.kind) {
        case GateKind::CNOT:
            out.apply_cnot(gate.q0.index, gate.q1.index);
            break;
        case GateKind::CZ:
            out.apply_cz(gate.q0.index, gate.q1.index);
            break;
        default:
            out.apply_1q(gate_matrix(gate.kind), gate.q0.index);
    }
    return out;
}

namespace unitaries {

Matrix identity(std::size_t num_qubits) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    return Matrix::Identity(d, d);
}

Matrix single(GateKind kind) {
    const auto m = gate_matrix(kind);
    Matrix out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

Matrix t() { return single(GateKind::T); }
Matrix tdag() { return single(GateKind::Tdag); }
Matrix h() { return single(GateKind::H); }
Matrix s() { return single(GateKind::S); }

Matrix ht_power(std::size_t n) {
    const Matrix ht = h() * t();
    Matrix out = identity(1);
    for (std::size_t i = 0; i < n; ++i) out = ht * out;
    return out;
}

Matrix controlled_sqrt_x() {
    Matrix out = identity(2);
    const Amplitude half_plus{0.5, 0.5};
    const Amplitude half_minus{0.5, -0.5};
    out(2, 2) = half_plus;
    out(2, 3) = half_minus;
    out(3, 2) = half_minus;
    out(3, 3) = half_plus;
    return out;
}

Matrix of_gates(std::size_t num_qubits, std::span<const Gate> gates) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        auto s = StateVector::basis(num_qubits, col);
        for (const auto& g : gates) s = apply_gate(s, g);
        for (std::size_t row = 0; row < dim; ++row) {
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
        }
    }
    return out;
}

}  // namespace unitaries

}  // namespace icmforge
