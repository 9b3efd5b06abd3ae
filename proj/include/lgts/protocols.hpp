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

#include <cstdint>
#include <string>
#include <vector>

#include "lgts/circuit.hpp"
#include "lgts/duality.hpp"
#include "lgts/lattice.hpp"
#include "lgts/random.hpp"
#include "lgts/statevec.hpp"
#include "lgts/unitary.hpp"

namespace lgts {

enum class Protocol { GlobalPairs, LocalPairs, DualProduct, Product };

std::string to_string(Protocol p);
Protocol parse_protocol(const std::string &text);

enum class Basis : uint8_t { X = 0, Y = 1, Z = 2 };

// Sign s with U^dag Z U = s * P for the basis-change U used for basis P.
int basis_sign(Basis b);
// Generator and angle of the basis change (identity for Z).
char basis_rotation_axis(Basis b);
double basis_rotation_angle(Basis b);

/// One shot: randomization choices plus measurement outcomes.
struct ShadowRecord {
    Protocol protocol = Protocol::GlobalPairs;
    uint64_t seed = 0;
    uint64_t shot = 0;
    Pairing pairing;                           // pairs (first < second), Global/Local
    std::vector<TwoQubitUnitary> unitaries;    // unitaries[k] acts on pairing[k]
    int tiling = -1;                           // Local
    Pairing patch_pairing;                     // Local, in patch-local indices
    std::vector<Basis> bases;                  // DualProduct (per plaquette) or Product (per link)
    bool has_s = true;                         // false when simulated on the Ising register
    uint64_t s = 0;
    int s_bits = 0;
    uint64_t b = 0;
    int b_bits = 0;
};

std::string to_json(const ShadowRecord &r);
ShadowRecord record_from_json(const std::string &line);

Pairing sample_pairing(int V, Rng &rng);

struct PairsRandomization {
    Pairing pairing;
    std::vector<TwoQubitUnitary> unitaries;
    int tiling = -1;
    Pairing patch_pairing;
};

// Parity-respecting blocks under PBC, full Haar under FBC.
PairsRandomization sample_global_randomization(const Lattice &lat, Rng &rng);
PairsRandomization sample_local_randomization(const Lattice &lat, const std::vector<Tiling> &tilings, Rng &rng);
std::vector<Basis> sample_bases(int n, Rng &rng);

// Dual Product preparation: append the ancilla and copy the reference link onto it.
StateVector prepare_ancilla_state(const DualityContext &ancilla_ctx, const StateVector &lgt_state);

Circuit dual_product_circuit(const DualityContext &ancilla_ctx, const std::vector<Basis> &bases);
Circuit product_circuit(int n_links, const std::vector<Basis> &bases);

// Shots on the link register.
ShadowRecord run_shot_global(const DualityContext &ctx, const StateVector &prepared, Rng &rng);
ShadowRecord run_shot_local(const DualityContext &ctx, const StateVector &prepared,
                            const std::vector<Tiling> &tilings, Rng &rng);
ShadowRecord run_shot_dual_product(const DualityContext &ancilla_ctx, const StateVector &prepared, Rng &rng);
ShadowRecord run_shot_product(const StateVector &prepared, Rng &rng);

// Same randomization draws, simulated directly on the plaquette register (b only).
ShadowRecord run_shot_global_dual(const Lattice &lat, const StateVector &ising_state, Rng &rng);
ShadowRecord run_shot_local_dual(const Lattice &lat, const StateVector &ising_state,
                                 const std::vector<Tiling> &tilings, Rng &rng);
ShadowRecord run_shot_dual_product_dual(const StateVector &ising_state, Rng &rng);

Mat4 to_mat4(const TwoQubitUnitary &u);

}  // namespace lgts
