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

#include "lgts/duality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "lgts/hamiltonian.hpp"

namespace lgts {

namespace {

uint64_t bit(int q) { return uint64_t{1} << q; }

uint64_t mask_of(const std::vector<int> &links) {
    uint64_t m = 0;
    for (int l : links) m ^= bit(l);
    return m;
}

}  // namespace

DualityContext::DualityContext(const Lattice &lat, DualityOptions opts)
    : lat_(lat), opts_(opts), V_(lat.n_plaquettes()), n_lgt_(lat.n_links() + (opts.ancilla ? 1 : 0)) {
    if (V_ > 64 || n_lgt_ > 64) throw std::length_error("duality supports at most 64 qubits per register");
    const int r = opts_.reference_plaquette;
    if (r < 0 || r >= V_) throw std::out_of_range("invalid reference plaquette " + std::to_string(r));

    wmask_.resize(V_);
    for (int p = 0; p < V_; ++p) wmask_[p] = lat_.plaquette_mask(p);

    if (opts_.ancilla) {
        if (!lat_.periodic()) throw std::invalid_argument("the ancilla-extended duality needs periodic boundaries");
        auto links = lat_.plaquette_links(r);
        ref_link_ = opts_.reference_link < 0 ? links[0] : opts_.reference_link;
        if (std::find(links.begin(), links.end(), ref_link_) == links.end()) {
            throw std::invalid_argument("reference link must lie on the reference plaquette");
        }
        auto adj = lat_.link(ref_link_).plaquettes;
        loser_ = opts_.larger_index_loses ? std::max(adj[0], adj[1]) : std::min(adj[0], adj[1]);
        subst_ = bit(lat_.n_links());
        wmask_[loser_] = (wmask_[loser_] & ~bit(ref_link_)) | subst_;
    } else if (!lat_.periodic() && lat_.exterior_links(r).empty()) {
        throw std::invalid_argument("under fixed boundaries the reference plaquette must touch the boundary");
    }

    xroute_.resize(V_);
    for (int p = 0; p < V_; ++p) {
        uint64_t m = p == r ? 0 : x_along(lat_.path_between(r, p)).x_bits();
        if (opts_.ancilla) {
            m ^= (r == loser_) ? subst_ : bit(ref_link_);
        } else if (!lat_.periodic()) {
            m ^= bit(lat_.exterior_links(r).front());
        }
        xroute_[p] = m;
    }

    for (int p = 0; p < V_; ++p) {
        uint64_t row = wmask_[p], combo = bit(p);
        for (size_t k = 0; k < pivot_rows_.size(); ++k) {
            if (row & bit(pivot_bit_[k])) {
                row ^= pivot_rows_[k];
                combo ^= pivot_combo_[k];
            }
        }
        if (row == 0) continue;
        pivot_rows_.push_back(row);
        pivot_combo_.push_back(combo);
        pivot_bit_.push_back(std::countr_zero(row));
    }
}

PauliString DualityContext::x_along(const std::vector<int> &links) const {
    uint64_t m = mask_of(links);
    if (opts_.ancilla && (m & bit(ref_link_))) m ^= subst_;
    return PauliString::x_string(n_lgt_, m);
}

PauliString DualityContext::x_image(int p) const {
    if (p < 0 || p >= V_) throw std::out_of_range("invalid plaquette " + std::to_string(p));
    return PauliString::x_string(n_lgt_, xroute_[p]);
}

PauliString DualityContext::ribbon(int i, int j) const { return ribbon_along(lat_.path_between(i, j)); }

PauliString DualityContext::ribbon_along(const std::vector<int> &path) const { return x_along(path); }

std::vector<PauliString> DualityContext::gauss_operators() const {
    std::vector<PauliString> out;
    for (int s = 0; s < lat_.n_sites(); ++s) out.push_back(x_along(lat_.gauss_links(s)));
    return out;
}

std::vector<PauliString> DualityContext::superselection_operators() const {
    if (!lat_.periodic()) return {};
    return {x_along(lat_.superselection_links(Dir::kX)), x_along(lat_.superselection_links(Dir::kY))};
}

std::vector<PauliString> DualityContext::sector() const {
    auto out = gauss_operators();
    for (auto &v : superselection_operators()) out.push_back(v);
    return out;
}

PauliString DualityContext::x_part_image(uint64_t xmask) const {
    uint64_t m = 0;
    for (uint64_t rest = xmask; rest; rest &= rest - 1) m ^= xroute_[std::countr_zero(rest)];
    return PauliString::x_string(n_lgt_, m);
}

namespace {

void check_dual_operand(const PauliString &s, int V, bool parity_required) {
    if (s.num_qubits() != V) {
        throw std::invalid_argument("Ising operator acts on " + std::to_string(s.num_qubits()) + " qubits, expected " +
                                    std::to_string(V));
    }
    if (parity_required && (s.weights().xy() & 1)) {
        throw std::invalid_argument("Ising operator " + s.to_string() +
                                    " breaks the dual parity (odd number of X/Y); it has no physical image");
    }
}

}  // namespace

PauliString DualityContext::phi_inverse(const PauliString &s) const {
    check_dual_operand(s, V_, lat_.periodic() && !opts_.ancilla);
    uint64_t zm = 0;
    for (uint64_t rest = s.z_bits(); rest; rest &= rest - 1) zm ^= wmask_[std::countr_zero(rest)];
    // s = i^(phase + nY) X^x Z^z with Y = i X Z.
    int e = s.phase() + std::popcount(s.x_bits() & s.z_bits());
    PauliString xz = x_part_image(s.x_bits()) * PauliString::z_string(n_lgt_, zm);
    return xz.with_phase(xz.phase() + e);
}

PauliString DualityContext::phi_inverse_paired(const PauliString &s, int i, int j,
                                               const std::vector<int> &path) const {
    check_dual_operand(s, V_, lat_.periodic() && !opts_.ancilla);
    if (s.x_bits() != (bit(i) | bit(j))) return phi_inverse(s);
    uint64_t zm = 0;
    for (uint64_t rest = s.z_bits(); rest; rest &= rest - 1) zm ^= wmask_[std::countr_zero(rest)];
    int e = s.phase() + std::popcount(s.x_bits() & s.z_bits());
    PauliString xz = ribbon_along(path) * PauliString::z_string(n_lgt_, zm);
    return xz.with_phase(xz.phase() + e);
}

uint64_t DualityContext::solve_region(uint64_t zmask, bool &ok) const {
    uint64_t combo = 0;
    for (size_t k = 0; k < pivot_rows_.size(); ++k) {
        if (zmask & bit(pivot_bit_[k])) {
            zmask ^= pivot_rows_[k];
            combo ^= pivot_combo_[k];
        }
    }
    ok = zmask == 0;
    if (!ok || opts_.ancilla || !lat_.periodic()) return combo;
    // Under PBC, R and its complement both work; prefer fewer plaquettes, then the one without the reference.
    const uint64_t all = V_ == 64 ? ~uint64_t{0} : bit(V_) - 1;
    uint64_t comp = combo ^ all;
    int wa = std::popcount(combo), wb = std::popcount(comp);
    if (wb < wa || (wb == wa && (combo & bit(opts_.reference_plaquette)))) return comp;
    return combo;
}

PauliString DualityContext::phi_forward(const PauliString &o) const {
    if (o.num_qubits() != n_lgt_) {
        throw std::invalid_argument("LGT operator acts on " + std::to_string(o.num_qubits()) + " qubits, expected " +
                                    std::to_string(n_lgt_));
    }
    auto gauss = gauss_operators();
    for (size_t s = 0; s < gauss.size(); ++s) {
        if (!o.commutes(gauss[s])) {
            throw std::invalid_argument("operator " + o.to_string() + " is not gauge invariant: violates G_" +
                                        std::to_string(s));
        }
    }
    auto sup = superselection_operators();
    for (size_t k = 0; k < sup.size(); ++k) {
        if (!o.commutes(sup[k])) {
            throw std::invalid_argument("operator " + o.to_string() + " does not commute with V_" +
                                        std::string(k == 0 ? "x" : "y") + " (winding loop, unsupported)");
        }
    }
    uint64_t xd = 0;
    for (uint64_t rest = o.x_bits(); rest; rest &= rest - 1) {
        uint64_t q = bit(std::countr_zero(rest));
        for (int p = 0; p < V_; ++p) {
            if (wmask_[p] & q) xd ^= bit(p);
        }
    }
    bool ok = false;
    uint64_t zd = solve_region(o.z_bits(), ok);
    if (!ok) {
        throw std::invalid_argument("sigma^z part of " + o.to_string() + " is not a sum of plaquette boundaries");
    }
    int e = o.phase() + std::popcount(o.x_bits() & o.z_bits());
    PauliString xz = PauliString::x_string(V_, xd) * PauliString::z_string(V_, zd);
    return xz.with_phase(xz.phase() + e);
}

uint64_t DualityContext::map_bits(uint64_t s) const {
    if (n_lgt_ < 64 && (s >> n_lgt_) != 0) {
        throw std::invalid_argument("outcome string longer than the " + std::to_string(n_lgt_) + "-qubit register");
    }
    uint64_t b = 0;
    for (int p = 0; p < V_; ++p) b |= static_cast<uint64_t>(std::popcount(s & wmask_[p]) & 1) << p;
    return b;
}

PhysicalityReport DualityContext::check_physical(const StateVector &psi, double tol) const {
    PhysicalityReport rep;
    for (const auto &g : gauss_operators()) rep.gauss.push_back(psi.expectation(g));
    for (const auto &v : superselection_operators()) rep.superselection.push_back(psi.expectation(v));
    for (double v : rep.gauss) rep.max_deviation = std::max(rep.max_deviation, std::abs(1 - v));
    for (double v : rep.superselection) rep.max_deviation = std::max(rep.max_deviation, std::abs(1 - v));
    rep.physical = rep.max_deviation <= tol;
    return rep;
}

}  // namespace lgts
