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

#include "lgts/protocols.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

namespace lgts {

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::GlobalPairs: return "global_pairs";
        case Protocol::LocalPairs: return "local_pairs";
        case Protocol::DualProduct: return "dual_product";
        case Protocol::Product: return "product";
    }
    return "?";
}

Protocol parse_protocol(const std::string &text) {
    if (text == "global_pairs") return Protocol::GlobalPairs;
    if (text == "local_pairs") return Protocol::LocalPairs;
    if (text == "dual_product") return Protocol::DualProduct;
    if (text == "product") return Protocol::Product;
    throw std::invalid_argument("unknown protocol '" + text + "'");
}

char basis_rotation_axis(Basis b) {
    switch (b) {
        case Basis::X: return 'Y';
        case Basis::Y: return 'X';
        default: return 'I';
    }
}

double basis_rotation_angle(Basis b) {
    switch (b) {
        case Basis::X: return -M_PI / 2;
        case Basis::Y: return M_PI / 2;
        default: return 0;
    }
}

int basis_sign(Basis b) {
    if (b == Basis::Z) return 1;
    // U = exp(i theta/2 A); U^dag Z U is +-P for P the measured basis.
    const PauliString z = PauliString::single(1, 0, 'Z');
    const PauliString a = PauliString::single(1, 0, basis_rotation_axis(b));
    const PauliString target = PauliString::single(1, 0, b == Basis::X ? 'X' : 'Y');
    // A anticommutes with Z, so U^dag Z U = Z exp(i theta A) = cos(theta) Z + i sin(theta) Z A.
    const double theta = basis_rotation_angle(b);
    PauliString za = z * a;  // i sin(theta) * Z A must equal sign * target
    std::complex<double> coeff = std::complex<double>(0, std::sin(theta)) * za.phase_value();
    if (za.with_phase(0) != target || std::abs(std::cos(theta)) > 1e-12) {
        throw std::logic_error("basis change does not map Z onto the measured Pauli");
    }
    return coeff.real() > 0 ? 1 : -1;
}

Pairing sample_pairing(int V, Rng &rng) {
    if (V <= 0 || V % 2 != 0) throw std::invalid_argument("pairings need an even number of sites, got " + std::to_string(V));
    std::vector<int> perm(V);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = V - 1; i > 0; --i) std::swap(perm[i], perm[uniform_index(rng, static_cast<uint64_t>(i) + 1)]);
    Pairing out;
    for (int k = 0; k < V; k += 2) out.emplace_back(std::min(perm[k], perm[k + 1]), std::max(perm[k], perm[k + 1]));
    return out;
}

namespace {

TwoQubitUnitary swapped(const TwoQubitUnitary &u) {
    Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    TwoQubitUnitary out = u;
    out.matrix = swap * u.matrix * swap;
    return out;
}

TwoQubitUnitary sample_pair_unitary(const Lattice &lat, Rng &rng) {
    return lat.periodic() ? sample_parity_unitary(rng) : sample_haar_2q(rng);
}

}  // namespace

PairsRandomization sample_global_randomization(const Lattice &lat, Rng &rng) {
    PairsRandomization r;
    r.pairing = sample_pairing(lat.n_plaquettes(), rng);
    for (size_t k = 0; k < r.pairing.size(); ++k) r.unitaries.push_back(sample_pair_unitary(lat, rng));
    return r;
}

PairsRandomization sample_local_randomization(const Lattice &lat, const std::vector<Tiling> &tilings, Rng &rng) {
    if (tilings.empty()) throw std::invalid_argument("no tilings supplied");
    const int L = tilings.front().L;
    if ((L * L) % 2 != 0) throw std::invalid_argument("patch size must hold an even number of plaquettes");
    PairsRandomization r;
    r.tiling = static_cast<int>(uniform_index(rng, tilings.size()));
    r.patch_pairing = sample_pairing(L * L, rng);
    std::vector<TwoQubitUnitary> patch_unitaries;
    for (size_t k = 0; k < r.patch_pairing.size(); ++k) patch_unitaries.push_back(sample_pair_unitary(lat, rng));
    const Tiling &t = tilings[r.tiling];
    for (const auto &members : t.members) {
        for (size_t k = 0; k < r.patch_pairing.size(); ++k) {
            int a = members[r.patch_pairing[k].first], b = members[r.patch_pairing[k].second];
            if (a < b) {
                r.pairing.emplace_back(a, b);
                r.unitaries.push_back(patch_unitaries[k]);
            } else {
                r.pairing.emplace_back(b, a);
                r.unitaries.push_back(swapped(patch_unitaries[k]));
            }
        }
    }
    return r;
}

std::vector<Basis> sample_bases(int n, Rng &rng) {
    std::vector<Basis> out(n);
    for (auto &b : out) b = static_cast<Basis>(uniform_index(rng, 3));
    return out;
}

StateVector prepare_ancilla_state(const DualityContext &ancilla_ctx, const StateVector &lgt_state) {
    if (!ancilla_ctx.ancilla_mode()) throw std::invalid_argument("Dual Product needs an ancilla-mode duality");
    if (lgt_state.num_qubits() != ancilla_ctx.lattice().n_links()) {
        throw std::invalid_argument("prepared state must live on the link register");
    }
    StateVector out = lgt_state.with_ancilla();
    out.apply_cnot(ancilla_ctx.reference_link(), ancilla_ctx.ancilla_qubit());
    return out;
}

Circuit dual_product_circuit(const DualityContext &ctx, const std::vector<Basis> &bases) {
    const int V = ctx.num_dual_qubits();
    if (static_cast<int>(bases.size()) != V) throw std::invalid_argument("one basis per plaquette is required");
    Circuit c;
    c.num_qubits = ctx.num_lgt_qubits();
    for (int p = 0; p < V; ++p) {
        if (bases[p] == Basis::Z) continue;
        Gate g;
        g.generator = ctx.phi_inverse(PauliString::single(V, p, basis_rotation_axis(bases[p])));
        g.angle = basis_rotation_angle(bases[p]);
        g.layer = c.num_layers++;
        c.gates.push_back(std::move(g));
    }
    return c;
}

Circuit product_circuit(int n_links, const std::vector<Basis> &bases) {
    if (static_cast<int>(bases.size()) != n_links) throw std::invalid_argument("one basis per link is required");
    Circuit c;
    c.num_qubits = n_links;
    for (int l = 0; l < n_links; ++l) {
        if (bases[l] == Basis::Z) continue;
        Gate g;
        g.generator = PauliString::single(n_links, l, basis_rotation_axis(bases[l]));
        g.angle = basis_rotation_angle(bases[l]);
        g.lane = l;
        c.gates.push_back(std::move(g));
    }
    c.num_layers = c.gates.empty() ? 0 : 1;
    return c;
}

namespace {

ShadowRecord measure_lgt(Protocol proto, const DualityContext *ctx, StateVector &psi, Rng &rng) {
    ShadowRecord rec;
    rec.protocol = proto;
    rec.s = psi.sample(rng);
    rec.s_bits = psi.num_qubits();
    if (ctx) {
        rec.b = ctx->map_bits(rec.s);
        rec.b_bits = ctx->num_dual_qubits();
    }
    return rec;
}

void check_state(const DualityContext &ctx, const StateVector &prepared) {
    if (prepared.num_qubits() != ctx.num_lgt_qubits()) {
        throw std::invalid_argument("prepared state has " + std::to_string(prepared.num_qubits()) +
                                    " qubits, the duality register has " + std::to_string(ctx.num_lgt_qubits()));
    }
}

ShadowRecord run_pairs_lgt(Protocol proto, const DualityContext &ctx, const StateVector &prepared,
                           PairsRandomization rand, const RouteFilter *filter, Rng &rng) {
    check_state(ctx, prepared);
    auto paths = assign_paths(ctx.lattice(), rand.pairing, filter);
    Circuit c = lower_dual_pairs_circuit(ctx, paths, rand.unitaries);
    StateVector psi = prepared;
    apply_circuit(psi, c);
    ShadowRecord rec = measure_lgt(proto, &ctx, psi, rng);
    rec.pairing = std::move(rand.pairing);
    rec.unitaries = std::move(rand.unitaries);
    rec.tiling = rand.tiling;
    rec.patch_pairing = std::move(rand.patch_pairing);
    return rec;
}

ShadowRecord run_pairs_dual(Protocol proto, const StateVector &ising_state, PairsRandomization rand, Rng &rng) {
    StateVector psi = ising_state;
    for (size_t k = 0; k < rand.pairing.size(); ++k) {
        psi.apply_2q(rand.pairing[k].first, rand.pairing[k].second, to_mat4(rand.unitaries[k]));
    }
    ShadowRecord rec;
    rec.protocol = proto;
    rec.has_s = false;
    rec.b = psi.sample(rng);
    rec.b_bits = psi.num_qubits();
    rec.pairing = std::move(rand.pairing);
    rec.unitaries = std::move(rand.unitaries);
    rec.tiling = rand.tiling;
    rec.patch_pairing = std::move(rand.patch_pairing);
    return rec;
}

}  // namespace

Mat4 to_mat4(const TwoQubitUnitary &u) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[4 * r + c] = u.matrix(r, c);
    return m;
}

ShadowRecord run_shot_global(const DualityContext &ctx, const StateVector &prepared, Rng &rng) {
    auto rand = sample_global_randomization(ctx.lattice(), rng);
    return run_pairs_lgt(Protocol::GlobalPairs, ctx, prepared, std::move(rand), nullptr, rng);
}

ShadowRecord run_shot_local(const DualityContext &ctx, const StateVector &prepared,
                            const std::vector<Tiling> &tilings, Rng &rng) {
    auto rand = sample_local_randomization(ctx.lattice(), tilings, rng);
    RouteFilter filter = tilings[rand.tiling].route_filter();
    return run_pairs_lgt(Protocol::LocalPairs, ctx, prepared, std::move(rand), &filter, rng);
}

ShadowRecord run_shot_dual_product(const DualityContext &ctx, const StateVector &prepared, Rng &rng) {
    if (ctx.lattice().periodic() && !ctx.ancilla_mode()) throw std::invalid_argument("Dual Product needs an ancilla-mode duality");
    check_state(ctx, prepared);
    auto bases = sample_bases(ctx.num_dual_qubits(), rng);
    StateVector psi = prepared;
    apply_circuit(psi, dual_product_circuit(ctx, bases));
    ShadowRecord rec = measure_lgt(Protocol::DualProduct, &ctx, psi, rng);
    rec.bases = std::move(bases);
    return rec;
}

ShadowRecord run_shot_product(const StateVector &prepared, Rng &rng) {
    auto bases = sample_bases(prepared.num_qubits(), rng);
    StateVector psi = prepared;
    apply_circuit(psi, product_circuit(prepared.num_qubits(), bases));
    ShadowRecord rec = measure_lgt(Protocol::Product, nullptr, psi, rng);
    rec.bases = std::move(bases);
    return rec;
}

ShadowRecord run_shot_global_dual(const Lattice &lat, const StateVector &ising_state, Rng &rng) {
    if (ising_state.num_qubits() != lat.n_plaquettes()) throw std::invalid_argument("expected a plaquette-register state");
    return run_pairs_dual(Protocol::GlobalPairs, ising_state, sample_global_randomization(lat, rng), rng);
}

ShadowRecord run_shot_local_dual(const Lattice &lat, const StateVector &ising_state,
                                 const std::vector<Tiling> &tilings, Rng &rng) {
    if (ising_state.num_qubits() != lat.n_plaquettes()) throw std::invalid_argument("expected a plaquette-register state");
    return run_pairs_dual(Protocol::LocalPairs, ising_state, sample_local_randomization(lat, tilings, rng), rng);
}

ShadowRecord run_shot_dual_product_dual(const StateVector &ising_state, Rng &rng) {
    const int V = ising_state.num_qubits();
    auto bases = sample_bases(V, rng);
    StateVector psi = ising_state;
    for (int p = 0; p < V; ++p) {
        if (bases[p] == Basis::Z) continue;
        psi.apply_pauli_rotation(PauliString::single(V, p, basis_rotation_axis(bases[p])), basis_rotation_angle(bases[p]));
    }
    ShadowRecord rec;
    rec.protocol = Protocol::DualProduct;
    rec.has_s = false;
    rec.b = psi.sample(rng);
    rec.b_bits = V;
    rec.bases = std::move(bases);
    return rec;
}

namespace {

std::string hex(uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
    return buf;
}

uint64_t unhex(const std::string &s) { return std::stoull(s, nullptr, 16); }

}  // namespace

std::string to_json(const ShadowRecord &r) {
    nlohmann::ordered_json j;
    j["protocol"] = to_string(r.protocol);
    j["seed"] = r.seed;
    j["shot"] = r.shot;
    if (!r.pairing.empty()) {
        auto pairs = nlohmann::json::array();
        for (auto [a, b] : r.pairing) pairs.push_back({a, b});
        j["pairing"] = pairs;
        auto us = nlohmann::json::array();
        for (const auto &u : r.unitaries) {
            std::vector<double> flat;
            for (int row = 0; row < 4; ++row) {
                for (int col = 0; col < 4; ++col) {
                    flat.push_back(u.matrix(row, col).real());
                    flat.push_back(u.matrix(row, col).imag());
                }
            }
            us.push_back({{"parity", u.parity_respecting}, {"m", flat}});
        }
        j["unitaries"] = us;
    }
    if (r.tiling >= 0) {
        j["tiling"] = r.tiling;
        auto pairs = nlohmann::json::array();
        for (auto [a, b] : r.patch_pairing) pairs.push_back({a, b});
        j["patch_pairing"] = pairs;
    }
    if (!r.bases.empty()) {
        std::string bases;
        for (Basis b : r.bases) bases += "XYZ"[static_cast<int>(b)];
        j["bases"] = bases;
    }
    j["s"] = r.has_s ? hex(r.s) : "-";
    j["s_bits"] = r.s_bits;
    j["b"] = r.b_bits > 0 ? hex(r.b) : "-";
    j["b_bits"] = r.b_bits;
    return j.dump();
}

ShadowRecord record_from_json(const std::string &line) {
    auto j = nlohmann::json::parse(line);
    ShadowRecord r;
    r.protocol = parse_protocol(j.at("protocol").get<std::string>());
    r.seed = j.at("seed").get<uint64_t>();
    r.shot = j.at("shot").get<uint64_t>();
    if (j.contains("pairing")) {
        for (const auto &p : j["pairing"]) r.pairing.emplace_back(p[0].get<int>(), p[1].get<int>());
        for (const auto &u : j.at("unitaries")) {
            TwoQubitUnitary t;
            t.parity_respecting = u.at("parity").get<bool>();
            auto flat = u.at("m").get<std::vector<double>>();
            if (flat.size() != 32) throw std::invalid_argument("unitary needs 32 numbers");
            for (int k = 0; k < 16; ++k) t.matrix(k / 4, k % 4) = {flat[2 * k], flat[2 * k + 1]};
            r.unitaries.push_back(t);
        }
    }
    if (j.contains("tiling")) {
        r.tiling = j["tiling"].get<int>();
        for (const auto &p : j.at("patch_pairing")) r.patch_pairing.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    if (j.contains("bases")) {
        for (char c : j["bases"].get<std::string>()) {
            if (c == 'X') r.bases.push_back(Basis::X);
            else if (c == 'Y') r.bases.push_back(Basis::Y);
            else if (c == 'Z') r.bases.push_back(Basis::Z);
            else throw std::invalid_argument("bad basis letter");
        }
    }
    auto s = j.at("s").get<std::string>();
    r.has_s = s != "-";
    r.s = r.has_s ? unhex(s) : 0;
    r.s_bits = j.at("s_bits").get<int>();
    r.b_bits = j.at("b_bits").get<int>();
    auto b = j.at("b").get<std::string>();
    r.b = b == "-" ? 0 : unhex(b);
    return r;
}

}  // namespace lgts
