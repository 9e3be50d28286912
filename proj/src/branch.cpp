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


#include "icmforge/branch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace icmforge {

namespace {

constexpr std::uint32_t kGone = ~std::uint32_t{0};

StateVector initial_state(const Circuit& circuit, const StateVector& input) {
    const auto n = circuit.num_qubits();
    if (input.num_qubits() != circuit.data_arity()) {
        throw std::invalid_argument("arity mismatch: circuit has " + std::to_string(circuit.data_arity()) +
                                    " data qubits, input has " + std::to_string(input.num_qubits()));
    }
    std::vector<std::array<Amplitude, 2>> anc(n);
    std::vector<std::size_t> data_rank(n, 0);
    std::size_t rank = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const auto& decl = circuit.qubits()[q];
        if (decl.role == QubitRole::Ancilla) {
            anc[q] = init_state(*decl.init);
        } else {
            data_rank[q] = rank++;
        }
    }
    const std::size_t k = rank;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t data_index = 0;
        Amplitude factor = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            const int bit = static_cast<int>((i >> (n - 1 - q)) & 1U);
            if (circuit.qubits()[q].role == QubitRole::Data) {
                data_index |= static_cast<std::uint64_t>(bit) << (k - 1 - data_rank[q]);
            } else {
                factor *= anc[q][bit];
            }
        }
        amps[i] = factor * input[data_index];
    }
    return StateVector(n, std::move(amps));
}

/// Splits `state` into output qubits (in `outputs` order) and the rest, and
/// returns the output factor if the split is a product.
StateVector restrict_to_outputs(const StateVector& state, const std::vector<std::uint32_t>& output_pos,
                                double tol) {
    const std::size_t n = state.num_qubits();
    const std::size_t k = output_pos.size();
    std::vector<std::uint32_t> rest_pos;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (std::find(output_pos.begin(), output_pos.end(), p) == output_pos.end()) rest_pos.push_back(p);
    }
    const std::size_t rows = std::size_t{1} << k;
    const std::size_t cols = std::size_t{1} << rest_pos.size();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        std::uint64_t r = 0;
        std::uint64_t c = 0;
        for (std::size_t j = 0; j < k; ++j) r = (r << 1) | ((i >> (n - 1 - output_pos[j])) & 1U);
        for (auto p : rest_pos) c = (c << 1) | ((i >> (n - 1 - p)) & 1U);
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = state[i];
    }
    const double total = m.squaredNorm();
    if (cols > 1) {
        Eigen::JacobiSVD<Matrix> svd(m);
        const double lead = svd.singularValues()(0);
        if (lead * lead < (1.0 - tol) * total) {
            std::ostringstream os;
            os << "output not separable from measured/discarded qubits (leading Schmidt weight "
               << lead * lead / total << ")";
            throw NonSeparableOutput(os.str());
        }
    }
    // Pick the dominant column so the output keeps the phase it has when the
    // other qubits sit in their post-measurement states.
    Eigen::Index best = 0;
    double best_norm = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) best_norm = std::max(best_norm, m.col(c).squaredNorm());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (m.col(c).squaredNorm() >= best_norm * (1.0 - 1e-9)) {
            best = c;
            break;
        }
    }
    Eigen::VectorXcd col = m.col(best);
    col /= col.norm();
    return StateVector(k, std::vector<Amplitude>(col.data(), col.data() + col.size()));
}

class Enumerator {
public:
    Enumerator(const Circuit& circuit, const SimOptions& options, const StateVector* expected)
        : circuit_(circuit), options_(options), expected_(expected) {}

    BranchSet run(const StateVector& input) {
        std::vector<std::uint32_t> pos(circuit_.num_qubits());
        for (std::uint32_t q = 0; q < pos.size(); ++q) pos[q] = q;
        std::vector<std::uint8_t> bits(circuit_.num_outcomes(), 0);
        recurse(0, initial_state(circuit_, input), std::move(pos), bits);
        return std::move(result_);
    }

private:
    void recurse(std::size_t op_index, StateVector state, std::vector<std::uint32_t> pos,
                 std::vector<std::uint8_t>& bits) {
        const auto& ops = circuit_.ops();
        for (; op_index < ops.size(); ++op_index) {
            const auto& op = ops[op_index];
            if (const auto* g = std::get_if<Gate>(&op)) {
                Gate local{g->kind, QubitId{pos[g->q0.index]}, QubitId{pos[g->q1.index]}};
                state = apply_gate(state, local);
                continue;
            }
            const auto& m = std::get<MeasurementNode>(op);
            const auto p = pos[m.qubit.index];
            if (m.basis(bits) == Basis::X) state.apply_1q(gate_matrix(GateKind::H), p);
            auto next_pos = pos;
            next_pos[m.qubit.index] = kGone;
            for (auto& other : next_pos) {
                if (other != kGone && other > p) --other;
            }
            for (int bit = 0; bit < 2; ++bit) {
                bits[m.outcome.index] = static_cast<std::uint8_t>(bit);
                auto branch = state.project_out(p, bit);
                const double prob = branch.norm() * branch.norm();
                if (prob < options_.prune_tol) {
                    result_.pruned.push_back(
                        {std::vector<std::uint8_t>(bits.begin(), bits.begin() + m.outcome.index + 1), prob});
                    continue;
                }
                recurse(op_index + 1, std::move(branch), next_pos, bits);
            }
            bits[m.outcome.index] = 0;
            return;
        }
        finish(std::move(state), pos, bits);
    }

    void finish(StateVector state, const std::vector<std::uint32_t>& pos, const std::vector<std::uint8_t>& bits) {
        const double prob = state.norm() * state.norm();
        for (std::uint32_t q = 0; q < circuit_.num_qubits(); ++q) {
            const auto& f = circuit_.frames()[q];
            if (f.is_identity() || pos[q] == kGone) continue;
            if (f.x.evaluate(bits)) state.apply_1q(gate_matrix(GateKind::X), pos[q]);
            if (f.s.evaluate(bits)) state.apply_1q(gate_matrix(GateKind::S), pos[q]);
            if (f.z.evaluate(bits)) state.apply_1q(gate_matrix(GateKind::Z), pos[q]);
        }
        std::vector<std::uint32_t> output_pos;
        for (auto q : circuit_.outputs()) output_pos.push_back(pos[q.index]);
        BranchResult r;
        r.outcomes = bits;
        r.probability = prob;
        r.final_state = restrict_to_outputs(state, output_pos, options_.separability_tol);
        if (expected_ != nullptr) {
            const auto overlap = expected_->inner(r.final_state);
            if (std::abs(overlap) > 0.0) r.global_phase = overlap / std::abs(overlap);
        }
        result_.branches.push_back(std::move(r));
    }

    const Circuit& circuit_;
    const SimOptions& options_;
    const StateVector* expected_;
    BranchSet result_;
};

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    for (auto b : bits) s += static_cast<char>('0' + b);
    return s;
}

}  // namespace

double BranchSet::total_probability() const {
    double sum = 0.0;
    for (const auto& b : branches) sum += b.probability;
    return sum;
}

BranchSet enumerate_branches(const Circuit& circuit, const StateVector& input, const SimOptions& options) {
    return Enumerator(circuit, options, nullptr).run(input);
}

BranchSet enumerate_branches(const Circuit& circuit, const StateVector& input, const StateVector& expected,
                             const SimOptions& options) {
    return Enumerator(circuit, options, &expected).run(input);
}

bool equiv_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("equiv_up_to_phase: dimension mismatch");
    return std::abs(a.inner(b)) >= 1.0 - tol;
}

std::vector<StateVector> informationally_complete_inputs(std::size_t arity) {
    const double r = 1.0 / std::numbers::sqrt2;
    const std::array<std::array<Amplitude, 2>, 4> singles = {{
        {1.0, 0.0},
        {0.0, 1.0},
        {r, r},
        {r, Amplitude(0.0, r)},
    }};
    std::vector<StateVector> out;
    const std::size_t total = std::size_t{1} << (2 * arity);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::array<Amplitude, 2>> factors(arity);
        for (std::size_t q = 0; q < arity; ++q) factors[q] = singles[(code >> (2 * (arity - 1 - q))) & 3U];
        out.push_back(StateVector::product(factors));
    }
    return out;
}

EquivalenceResult channel_equiv(const Circuit& circuit, const Matrix& target, double tol, const SimOptions& options) {
    const auto arity = circuit.data_arity();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
    if (target.rows() != dim || target.cols() != dim) {
        throw std::invalid_argument("dimension mismatch: target is " + std::to_string(target.rows()) + "x" +
                                    std::to_string(target.cols()) + ", circuit data arity is " +
                                    std::to_string(arity));
    }
    if (circuit.outputs().size() != arity) {
        throw std::invalid_argument("dimension mismatch: circuit has " + std::to_string(arity) + " inputs but " +
                                    std::to_string(circuit.outputs().size()) + " outputs");
    }

    EquivalenceResult result;
    const auto inputs = informationally_complete_inputs(arity);
    // Index of |+>^n: every 2-bit digit equal to 2.
    std::size_t reference = 0;
    for (std::size_t q = 0; q < arity; ++q) reference = (reference << 2) | 2U;

    std::map<std::vector<std::uint8_t>, double> first_probs;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto expected = inputs[i].transformed(target);
        auto set = enumerate_branches(circuit, inputs[i], expected, options);
        ++result.inputs_checked;
        result.branches_per_input = std::max(result.branches_per_input, set.branches.size());

        const double total = set.total_probability();
        if (std::abs(total - 1.0) > tol) {
            result.failures.push_back("input " + std::to_string(i) + ": branch probabilities sum to " +
                                      std::to_string(total));
        }
        std::map<std::vector<std::uint8_t>, double> probs;
        for (const auto& b : set.branches) {
            const double overlap = std::abs(expected.inner(b.final_state));
            result.worst_overlap = std::min(result.worst_overlap, overlap);
            if (overlap < 1.0 - tol) {
                std::ostringstream os;
                os << "input " << i << ", branch " << bits_to_string(b.outcomes) << ": overlap " << overlap;
                result.failures.push_back(os.str());
            }
            probs[b.outcomes] = b.probability;
        }
        if (i == 0) {
            first_probs = probs;
        } else {
            auto keys = first_probs;
            for (const auto& [k, v] : probs) keys.emplace(k, 0.0);
            for (const auto& [k, unused] : keys) {
                const double a = first_probs.count(k) ? first_probs.at(k) : 0.0;
                const double b = probs.count(k) ? probs.at(k) : 0.0;
                result.max_probability_spread = std::max(result.max_probability_spread, std::abs(a - b));
            }
        }
        if (i == reference) result.reference_branches = std::move(set.branches);
    }
    if (result.max_probability_spread > tol) {
        result.failures.push_back("branch probabilities depend on the input (spread " +
                                  std::to_string(result.max_probability_spread) + ")");
    }
    result.passed = result.failures.empty();
    return result;
}

Matrix induced_unitary(const Circuit& circuit, const SimOptions& options) {
    const auto arity = circuit.data_arity();
    if (circuit.outputs().size() != arity) {
        throw std::invalid_argument("induced_unitary: input and output arity differ");
    }
    const std::size_t dim = std::size_t{1} << arity;
    Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        auto set = enumerate_branches(circuit, StateVector::basis(arity, col), options);
        if (set.branches.size() != 1 || std::abs(set.branches[0].probability - 1.0) > 1e-10) {
            throw std::invalid_argument("induced_unitary: circuit is not deterministic");
        }
        const auto& s = set.branches[0].final_state;
        for (std::size_t row = 0; row < dim; ++row) {
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
        }
    }
    return out;
}

}  // namespace icmforge
