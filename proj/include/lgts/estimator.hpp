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

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "lgts/hamiltonian.hpp"
#include "lgts/lattice.hpp"
#include "lgts/pauli.hpp"
#include "lgts/protocols.hpp"

namespace lgts {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Number of perfect matchings of m items, (m - 1)!!; zero for odd m.
BigInt pair_count(int m);
// Fraction of pairings of V sites that keep the w_xy X/Y sites paired among themselves.
Rational coeff_f(int V, int w_xy);
// Pairing average of the Z/I weights: IZ pairs weigh 1/3, II and ZZ pairs weigh 1.
Rational coeff_alpha(int w_i, int w_z);
// Full two-qubit 2-design analogue: every pair touching the support weighs 1/5.
Rational coeff_alpha_tilde(int V, int k_dual);

/// Eigenvalue c of the shadow channel on a Pauli string: M(S) = c S.
struct ChannelCoeff {
    Protocol protocol = Protocol::GlobalPairs;
    Boundary bc = Boundary::PBC;
    int sites = 0;          // V, or L^2 for patch-level coefficients
    Rational f = 1;
    Rational alpha = 1;
    int power3 = 0;         // w_xy / 2 for the pair protocols, k for product types
    Rational c = 1;
    double value() const { return c.convert_to<double>(); }
};

// Global pairs on `sites` dual qubits (parity blocks under PBC, full 2-design under FBC).
ChannelCoeff pairs_coeff(int sites, const PauliString &s_dual, Boundary bc);
// Local pairs: coefficients restricted to one L x L patch.
ChannelCoeff local_pairs_coeff(int L, const PauliString &s_dual);
// Product-type protocols: 3^{-k}.
ChannelCoeff product_coeff(Protocol p, const PauliString &s);

// (1/c) prod over pairs touching the support of <b_i b_j| U S_i S_j U^dag |b_i b_j>.
double estimate_shot_dual_pairs(const ShadowRecord &record, const PauliString &s_dual, const ChannelCoeff &coeff);
// prod over the support of 3 <b_j| u_j S_j u_j^dag |b_j>; Ising side reads b, LGT side reads s.
double estimate_shot_product_type(const ShadowRecord &record, const PauliString &s, Side side);

struct LocalSelection {
    int tiling = -1;
    int patch = -1;
    std::vector<size_t> indices;  // retained records
};

// Keeps the records of the smallest tiling whose patch contains `support`.
LocalSelection filter_local(std::span<const ShadowRecord> records, std::span<const Tiling> tilings, uint64_t support);

struct Estimate {
    double value = 0;
    double std_error = 0;
    size_t n_shots = 0;
    size_t n_blocks = 0;
    std::vector<double> block_means;
};

// Median of block means; n_blocks = 0 selects ceil(sqrt(n)).
Estimate median_of_means(std::span<const double> values, size_t n_blocks = 0);
Estimate sample_mean(std::span<const double> values);

enum class Aggregator { Mean, MedianOfMeans };
std::string to_string(Aggregator a);
Aggregator parse_aggregator(const std::string &text);
Estimate aggregate(std::span<const double> values, Aggregator a);

// Bound on the per-shot second moment; `s` is the Ising image for the dual protocols and the
// link operator for Product.
double variance_bound(Protocol p, const PauliString &s, const Lattice &lat, double op_norm = 1.0, int L = 0);
// log(M) / eps^2 * max_var.
double sample_bound(int M, double eps, double max_var);

}  // namespace lgts
