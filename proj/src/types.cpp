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


#include "icmforge/types.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>

namespace icmforge {

namespace {

constexpr std::array<std::string_view, 6> kInitNames = {"ZERO", "PLUS", "Y", "A", "ADAG", "YDAG"};
constexpr std::array<std::string_view, 9> kGateNames = {"X", "Z", "S", "SDAG", "T",
                                                        "TDAG", "H", "CNOT", "CZ"};

}  // namespace

std::string_view to_string(InitKind kind) { return kInitNames[static_cast<std::size_t>(kind)]; }

std::string_view to_string(GateKind kind) { return kGateNames[static_cast<std::size_t>(kind)]; }

std::string_view to_string(Basis basis) { return basis == Basis::X ? "X" : "Z"; }

std::optional<InitKind> init_kind_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kInitNames.size(); ++i) {
        if (kInitNames[i] == text) return static_cast<InitKind>(i);
    }
    return std::nullopt;
}

std::optional<GateKind> gate_kind_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kGateNames.size(); ++i) {
        if (kGateNames[i] == text) return static_cast<GateKind>(i);
    }
    return std::nullopt;
}

std::optional<Basis> basis_from_string(std::string_view text) {
    if (text == "X") return Basis::X;
    if (text == "Z") return Basis::Z;
    return std::nullopt;
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::CZ; }

bool is_clifford(GateKind kind) { return kind != GateKind::T && kind != GateKind::Tdag; }

XorForm XorForm::constant(bool value) {
    XorForm f;
    f.constant_ = value;
    return f;
}

XorForm XorForm::of(OutcomeId outcome) {
    XorForm f;
    f.terms_.push_back(outcome.index);
    return f;
}

bool XorForm::contains(OutcomeId outcome) const {
    return std::binary_search(terms_.begin(), terms_.end(), outcome.index);
}

std::optional<std::uint32_t> XorForm::max_term() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back();
}

XorForm& XorForm::operator^=(const XorForm& other) {
    constant_ = constant_ != other.constant_;
    if (other.terms_.empty()) return *this;
    std::vector<std::uint32_t> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

bool XorForm::evaluate(std::span<const std::uint8_t> bits) const {
    bool value = constant_;
    for (auto t : terms_) {
        if (t >= bits.size()) throw std::out_of_range("XorForm::evaluate: outcome not available");
        value = value != (bits[t] != 0);
    }
    return value;
}

XorForm XorForm::substitute(std::span<const XorForm> mapping) const {
    XorForm out = constant(constant_);
    for (auto t : terms_) {
        if (t >= mapping.size()) throw std::out_of_range("XorForm::substitute: unmapped outcome");
        out ^= mapping[t];
    }
    return out;
}

XorForm XorForm::shifted(std::uint32_t offset) const {
    XorForm out = *this;
    for (auto& t : out.terms_) t += offset;
    return out;
}

}  // namespace icmforge
