// Copyright 2026 The lgt-shadows Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgts/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace lgts {

int circuit_depth(const Circuit &c, DepthMode mode) {
    std::map<int, std::map<int, int>> per_layer;
    for (const auto &g : c.gates) {
        int cost = 1;
        if (mode == DepthMode::CnotLadder && g.kind == GateKind::Rotation) {
            cost = rotation_ladder_cost(g.generator.weight());
        }
        per_layer[g.layer][g.lane] += cost;
    }
    int depth = 0;
    for (const auto &[layer, lanes] : per_layer) {
        int deepest = 0;
        for (const auto &[lane, d] : lanes) deepest = std::max(deepest, d);
        depth += deepest;
    }
    return depth;
}

void apply_circuit(StateVector &psi, const Circuit &c) {
    if (c.num_qubits != psi.num_qubits()) throw std::invalid_argument("circuit and state sizes differ");
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case GateKind::Rotation: psi.apply_pauli_rotation(g.generator, g.angle); break;
            case GateKind::Cnot: psi.apply_cnot(g.control, g.target); break;
            case GateKind::Clifford: psi.apply_clifford_1q(g.qubit, g.clifford); break;
        }
    }
}

Circuit expand_cnot_ladders(const Circuit &c) {
    Circuit out;
    out.num_qubits = c.num_qubits;
    out.num_layers = c.num_layers;
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::Rotation || g.generator.weight() == 0) {
            if (g.kind != GateKind::Rotation) out.gates.push_back(g);
            continue;
        }
        auto emit = [&](Gate e) {
            e.layer = g.layer;
            e.lane = g.lane;
            out.gates.push_back(std::move(e));
        };
        auto clifford = [&](int q, Clifford1Q which) {
            Gate e;
            e.kind = GateKind::Clifford;
            e.qubit = q;
            e.clifford = which;
            emit(e);
        };
        auto cnot = [&](int a, int b) {
            Gate e;
            e.kind = GateKind::Cnot;
            e.control = a;
            e.target = b;
            emit(e);
        };
        if (!g.generator.is_hermitian()) throw std::invalid_argument("rotation generator is not Hermitian");
        std::vector<int> qubits;
        for (uint64_t m = g.generator.support(); m; m &= m - 1) qubits.push_back(std::countr_zero(m));
        const uint64_t x = g.generator.x_bits(), z = g.generator.z_bits();
        // X -> Z by H; Y -> Z by H Sdg.
        for (int q : qubits) {
            if (!((x >> q) & 1)) continue;
            if ((z >> q) & 1) clifford(q, Clifford1Q::Sdg);
            clifford(q, Clifford1Q::H);
        }
        for (size_t k = 0; k + 1 < qubits.size(); ++k) cnot(qubits[k], qubits[k + 1]);
        Gate r;
        r.kind = GateKind::Rotation;
        r.generator = PauliString::single(c.num_qubits, qubits.back(), 'Z');
        if (g.generator.phase() == 2) r.generator = r.generator.negated();
        r.angle = g.angle;
        emit(r);
        for (size_t k = qubits.size() - 1; k > 0; --k) cnot(qubits[k - 1], qubits[k]);
        for (int q : qubits) {
            if (!((x >> q) & 1)) continue;
            clifford(q, Clifford1Q::H);
            if ((z >> q) & 1) clifford(q, Clifford1Q::S);
        }
    }
    return out;
}

int cnot_depth(const Circuit &c) {
    std::map<int, std::map<int, int>> per_layer;
    for (const auto &g : c.gates)
        if (g.kind == GateKind::Cnot) ++per_layer[g.layer][g.lane];
    int depth = 0;
    for (const auto &[layer, lanes] : per_layer) {
        int deepest = 0;
        for (const auto &[lane, d] : lanes) deepest = std::max(deepest, d);
        depth += deepest;
    }
    return depth;
}

Circuit lower_dual_pairs_circuit(const DualityContext &ctx, const PathAssignment &paths,
                                 std::span<const TwoQubitUnitary> unitaries) {
    if (unitaries.size() != paths.pairs.size()) throw std::invalid_argument("one unitary per pair is required");
    const int V = ctx.num_dual_qubits();
    const bool parity_only = ctx.lattice().periodic() && !ctx.ancilla_mode();
    std::vector<int> layer_of(paths.pairs.size(), -1);
    for (size_t l = 0; l < paths.layers.size(); ++l) {
        for (int k : paths.layers[l]) layer_of[k] = static_cast<int>(l);
    }

    Circuit out;
    out.num_qubits = ctx.num_lgt_qubits();
    out.num_layers = static_cast<int>(paths.layers.size());
    for (size_t k = 0; k < paths.pairs.size(); ++k) {
        const auto &u = unitaries[k];
        if (parity_only && !u.parity_respecting) {
            throw std::invalid_argument("parity-violating unitary cannot be lowered under periodic boundaries");
        }
        auto [i, j] = paths.pairs[k];
        for (const auto &rot : decompose_two_qubit(u)) {
            uint64_t x = 0, z = 0;
            const int site[2] = {i, j};
            for (int q = 0; q < 2; ++q) {
                uint64_t b = uint64_t{1} << site[q];
                if ((rot.op.x_bits() >> q) & 1) x |= b;
                if ((rot.op.z_bits() >> q) & 1) z |= b;
            }
            PauliString s(V, x, z, rot.op.phase());
            Gate g;
            g.kind = GateKind::Rotation;
            g.generator = ctx.phi_inverse_paired(s, i, j, paths.paths[k]);
            g.angle = rot.theta;
            g.layer = layer_of[k];
            g.lane = static_cast<int>(k);
            out.gates.push_back(std::move(g));
        }
    }
    std::stable_sort(out.gates.begin(), out.gates.end(),
                     [](const Gate &a, const Gate &b) { return a.layer < b.layer; });
    return out;
}

}  // namespace lgts
