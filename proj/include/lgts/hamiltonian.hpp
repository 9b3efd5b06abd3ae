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
#include <span>
#include <vector>

#include "lgts/lattice.hpp"
#include "lgts/pauli.hpp"
#include "lgts/statevec.hpp"

namespace lgts {

enum class Side { LGT, Ising };

struct PauliTerm {
    double coeff;
    PauliString op;
};

struct HamiltonianSpec {
    Side side = Side::LGT;
    double g = 0;
    int num_qubits = 0;
    std::vector<PauliTerm> terms;
};

// -sum_p W_p - g sum_l sigma^x_l on the link register.
HamiltonianSpec lgt_hamiltonian(const Lattice &lat, double g);
// Transverse-field Ising model on the plaquette register (periodic or fixed-boundary form).
HamiltonianSpec ising_hamiltonian(const Lattice &lat, double g);

// Gauss laws G_s = prod of sigma^x on links meeting s.
std::vector<PauliString> gauss_operators(const Lattice &lat);
// V_x, V_y (PBC only; empty otherwise).
std::vector<PauliString> superselection_operators(const Lattice &lat);
std::vector<PauliString> lgt_sector(const Lattice &lat);
// Dual parity prod Z = +1 under PBC; no constraint under FBC.
std::vector<PauliString> ising_sector(const Lattice &lat);

void apply_hamiltonian(const HamiltonianSpec &h, std::span<const cplx> in, std::span<cplx> out);
double energy(const HamiltonianSpec &h, const StateVector &psi);
double energy_variance(const HamiltonianSpec &h, const StateVector &psi);

struct GroundStateOptions {
    int max_qubits = StateVector::kDefaultMaxQubits;
    int krylov_dim = 60;
    int max_restarts = 400;
    double tolerance = 1e-11;  // residual norm |H psi - E psi|
    uint64_t seed = 0x5eed;
};

struct GroundState {
    StateVector state;
    double energy = 0;
    double residual = 0;
    int restarts = 0;
};

// Lowest eigenpair inside the joint +1 eigenspace of `sector` (restarted Lanczos
// with the sector projector applied at every step).
GroundState ground_state(const HamiltonianSpec &h, std::span<const PauliString> sector,
                         const GroundStateOptions &opts = {});

}  // namespace lgts
