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
#include <string>
#include <vector>

#include "lgts/lattice.hpp"
#include "lgts/pauli.hpp"
#include "lgts/statevec.hpp"

namespace lgts {

struct DualityOptions {
    int reference_plaquette = 0;
    bool ancilla = false;
    int reference_link = -1;          // ancilla mode; -1 picks the first link of the reference plaquette
    bool larger_index_loses = true;   // which neighbour of the reference link reads the ancilla instead
};

struct PhysicalityReport {
    std::vector<double> gauss;           // <G_s>
    std::vector<double> superselection;  // <V_x>, <V_y> under PBC
    double max_deviation = 0;
    bool physical = true;
};

/// Maps between the link register (LGT side) and the plaquette register (Ising side).
///
/// Operator images use the plaquette supports W'_p: the four links of p, except that
/// in ancilla mode one neighbour of the reference link r reads the ancilla a instead.
class DualityContext {
   public:
    DualityContext(const Lattice &lat, DualityOptions opts = {});

    const Lattice &lattice() const { return lat_; }
    const DualityOptions &options() const { return opts_; }
    int reference_plaquette() const { return opts_.reference_plaquette; }
    bool ancilla_mode() const { return opts_.ancilla; }
    int reference_link() const { return ref_link_; }
    int ancilla_qubit() const { return opts_.ancilla ? lat_.n_links() : -1; }
    // Plaquette whose support uses the ancilla (ancilla mode), else -1.
    int ancilla_plaquette() const { return loser_; }

    int num_lgt_qubits() const { return n_lgt_; }
    int num_dual_qubits() const { return V_; }

    uint64_t plaquette_support(int p) const { return wmask_[p]; }
    PauliString plaquette_operator(int p) const { return PauliString::z_string(n_lgt_, wmask_[p]); }
    // sigma^x string along links, with the ancilla substitution applied.
    PauliString x_along(const std::vector<int> &links) const;
    // Image of the single-site X_p: reference route from the reference plaquette.
    PauliString x_image(int p) const;
    // Direct image of X_i X_j along the given dual path (default: path_between).
    PauliString ribbon(int i, int j) const;
    PauliString ribbon_along(const std::vector<int> &path) const;

    std::vector<PauliString> gauss_operators() const;
    std::vector<PauliString> superselection_operators() const;
    std::vector<PauliString> sector() const;

    PauliString phi_inverse(const PauliString &s) const;
    // Same as phi_inverse, but the X-part on exactly {i, j} uses the given ribbon path.
    PauliString phi_inverse_paired(const PauliString &s, int i, int j, const std::vector<int> &path) const;
    PauliString phi_forward(const PauliString &o) const;
    uint64_t map_bits(uint64_t s) const;
    PhysicalityReport check_physical(const StateVector &psi, double tol = 1e-10) const;

   private:
    PauliString x_part_image(uint64_t xmask) const;
    uint64_t solve_region(uint64_t zmask, bool &ok) const;

    Lattice lat_;
    DualityOptions opts_;
    int V_;
    int n_lgt_;
    int ref_link_ = -1;
    int loser_ = -1;
    uint64_t subst_ = 0;            // ancilla bit when the reference link is crossed
    std::vector<uint64_t> wmask_;   // W'_p supports
    std::vector<uint64_t> xroute_;  // x_image masks
    // Gaussian-elimination tables over GF(2) for region solving.
    std::vector<uint64_t> pivot_rows_;
    std::vector<uint64_t> pivot_combo_;
    std::vector<int> pivot_bit_;
};

inline PauliString phi_inverse(const DualityContext &ctx, const PauliString &s) { return ctx.phi_inverse(s); }
inline PauliString phi_forward(const DualityContext &ctx, const PauliString &o) { return ctx.phi_forward(o); }
inline uint64_t map_bits(const DualityContext &ctx, uint64_t s) { return ctx.map_bits(s); }

}  // namespace lgts
