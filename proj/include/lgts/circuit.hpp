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

#pragma once

#include <span>
#include <vector>

#include "lgts/duality.hpp"
#include "lgts/lattice.hpp"
#include "lgts/pauli.hpp"
#include "lgts/statevec.hpp"
#include "lgts/unitary.hpp"

namespace lgts {

enum class GateKind { Rotation, Cnot, Clifford };

struct Gate {
    GateKind kind = GateKind::Rotation;
    PauliString generator;  // Rotation: exp(i angle/2 generator)
    double angle = 0;
    int control = -1;       // Cnot
    int target = -1;        // Cnot
    int qubit = -1;         // Clifford
    Clifford1Q clifford = Clifford1Q::H;
    int layer = 0;          // schedule layer
    int lane = 0;           // independent gate sequence within the layer
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    int num_layers = 0;
};

enum class DepthMode { RotationLayers, CnotLadder };

// CNOT-ladder cost of a weight-w Pauli rotation: 2(w - 1) CNOTs plus one single-qubit rotation.
inline int rotation_ladder_cost(int weight) { return weight <= 0 ? 0 : 2 * (weight - 1) + 1; }

// Sum over layers of the deepest lane, counting gates (RotationLayers) or ladder cost (CnotLadder).
int circuit_depth(const Circuit &c, DepthMode mode);

void apply_circuit(StateVector &psi, const Circuit &c);

// Rewrites every rotation of weight w as basis changes, a CNOT chain of w - 1 gates, one
// single-qubit Z rotation, the reversed chain and the inverse basis changes. Gates keep their
// layer and lane.
Circuit expand_cnot_ladders(const Circuit &c);

// CNOT gates per lane, summed over layers by the deepest lane.
int cnot_depth(const Circuit &c);

// Lowers per-pair Ising unitaries through the duality; unitaries[k] acts on paths.pairs[k]
// with qubit 0 on pairs[k].first. Each pair occupies its own lane in its schedule layer.
Circuit lower_dual_pairs_circuit(const DualityContext &ctx, const PathAssignment &paths,
                                 std::span<const TwoQubitUnitary> unitaries);

}  // namespace lgts
