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


#include "icmforge/depth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icmforge {

DependencyDag dependency_dag(const Circuit& circuit) {
    DependencyDag dag;
    dag.predecessors.resize(circuit.num_outcomes());
    dag.level.assign(circuit.num_outcomes(), 0);
    for (const auto& op : circuit.ops()) {
        const auto* m = std::get_if<MeasurementNode>(&op);
        if (m == nullptr) continue;
        const auto v = m->outcome.index;
        std::size_t level = 1;
        if (m->conditional()) {
            for (auto u : m->selector.terms()) {
                if (u >= v) {
                    throw std::invalid_argument("dependency cycle: m" + std::to_string(v) + " depends on m" +
                                                std::to_string(u));
                }
                dag.predecessors[v].push_back(u);
                level = std::max(level, dag.level[u] + 1);
            }
        }
        dag.level[v] = level;
    }
    return dag;
}

std::size_t measurement_depth(const Circuit& circuit) {
    const auto dag = dependency_dag(circuit);
    std::size_t depth = 0;
    for (auto l : dag.level) depth = std::max(depth, l);
    return depth;
}

std::vector<std::vector<OutcomeId>> measurement_layers(const Circuit& circuit) {
    const auto dag = dependency_dag(circuit);
    std::vector<std::vector<std::pair<std::uint32_t, OutcomeId>>> keyed;
    for (const auto& op : circuit.ops()) {
        const auto* m = std::get_if<MeasurementNode>(&op);
        if (m == nullptr) continue;
        const auto l = dag.level[m->outcome.index];
        if (keyed.size() < l) keyed.resize(l);
        keyed[l - 1].emplace_back(m->qubit.index, m->outcome);
    }
    std::vector<std::vector<OutcomeId>> layers;
    for (auto& layer : keyed) {
        std::stable_sort(layer.begin(), layer.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& out = layers.emplace_back();
        for (const auto& [q, id] : layer) out.push_back(id);
    }
    return layers;
}

std::size_t clifford_depth(const Circuit& circuit) {
    std::vector<std::size_t> busy(circuit.num_qubits(), 0);
    std::size_t depth = 0;
    for (const auto& op : circuit.ops()) {
        const auto* g = std::get_if<Gate>(&op);
        if (g == nullptr) continue;
        std::size_t layer = busy[g->q0.index];
        if (g->two_qubit()) layer = std::max(layer, busy[g->q1.index]);
        ++layer;
        busy[g->q0.index] = layer;
        if (g->two_qubit()) busy[g->q1.index] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

}  // namespace icmforge
