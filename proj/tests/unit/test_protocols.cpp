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

#include <doctest.h>

#include <map>

#include "lgts/hamiltonian.hpp"
#include "lgts/protocols.hpp"
#include "oracles.hpp"

using namespace lgts;

namespace {

std::vector<double> pushed(const DualityContext &ctx, const StateVector &psi) {
    std::vector<double> out(size_t{1} << ctx.num_dual_qubits(), 0.0);
    auto p = psi.probabilities();
    for (uint64_t s = 0; s < p.size(); ++s) out[ctx.map_bits(s)] += p[s];
    return out;
}

}  // namespace

TEST_CASE("protocol names round-trip") {
    for (auto p : {Protocol::GlobalPairs, Protocol::LocalPairs, Protocol::DualProduct, Protocol::Product})
        CHECK(parse_protocol(to_string(p)) == p);
    CHECK_THROWS(parse_protocol("pairs"));
}

TEST_CASE("basis changes map Z onto the measured Pauli") {
    for (auto b : {Basis::X, Basis::Y}) {
        auto a = PauliString::single(1, 0, basis_rotation_axis(b));
        oracle::Mat u = (std::cos(basis_rotation_angle(b) / 2) * oracle::Mat::Identity(2, 2)) +
                        std::complex<double>(0, std::sin(basis_rotation_angle(b) / 2)) * oracle::dense(a);
        oracle::Mat lhs = u.adjoint() * oracle::sigma('Z') * u;
        oracle::Mat target = oracle::sigma(b == Basis::X ? 'X' : 'Y');
        CHECK((lhs - basis_sign(b) * target).norm() < 1e-12);
    }
    CHECK(basis_sign(Basis::Z) == 1);
}

TEST_CASE("pairings are uniform perfect matchings") {
    Rng rng(1);
    std::map<Pairing, int> counts;
    const int n = 30000;
    for (int k = 0; k < n; ++k) {
        auto p = sample_pairing(4, rng);
        std::sort(p.begin(), p.end());
        ++counts[p];
    }
    CHECK(counts.size() == 3);
    for (auto &[p, c] : counts) CHECK(std::abs(c - n / 3.0) < 5 * std::sqrt(n * (1.0 / 3) * (2.0 / 3)));
    CHECK_THROWS(sample_pairing(5, rng));
}

TEST_CASE("local randomization replicates one patch draw") {
    Lattice lat(4, 4, Boundary::PBC);
    auto tilings = enumerate_tilings(lat, 2);
    Rng rng(2);
    std::vector<int> counts(4, 0);
    const int n = 8000;
    for (int k = 0; k < n; ++k) {
        auto r = sample_local_randomization(lat, tilings, rng);
        ++counts[r.tiling];
        if (k > 20) continue;
        const auto &t = tilings[r.tiling];
        CHECK(r.pairing.size() == 8);
        Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
        swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
        for (size_t patch = 0; patch < t.members.size(); ++patch) {
            for (size_t j = 0; j < r.patch_pairing.size(); ++j) {
                size_t idx = patch * r.patch_pairing.size() + j;
                int a = t.members[patch][r.patch_pairing[j].first];
                Eigen::Matrix4cd u = r.unitaries[idx].matrix;
                if (r.pairing[idx].first != a) u = swap * u * swap;
                Eigen::Matrix4cd u0 = r.unitaries[j].matrix;
                if (r.pairing[j].first != t.members[0][r.patch_pairing[j].first]) u0 = swap * u0 * swap;
                CHECK((u - u0).norm() < 1e-14);
            }
        }
    }
    for (int c : counts) CHECK(std::abs(c - n / 4.0) < 5 * std::sqrt(n * 0.25 * 0.75));
}

TEST_CASE("pairs shots read b through the duality") {
    Lattice lat(3, 2, Boundary::PBC);
    DualityContext ctx(lat);
    auto lgt = ground_state(lgt_hamiltonian(lat, 0.5), lgt_sector(lat)).state;
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        auto rec = run_shot_global(ctx, lgt, rng);
        CHECK(rec.has_s);
        CHECK(rec.b == ctx.map_bits(rec.s));
        CHECK(rec.pairing.size() == 3);
        for (const auto &u : rec.unitaries) CHECK(u.parity_respecting);
    }
}

TEST_CASE("fixed randomization gives the same outcome law on both registers") {
    Rng rng(4);
    for (auto [nx, ny, bc] : {std::tuple{3, 2, Boundary::PBC}, std::tuple{3, 3, Boundary::FBC}}) {
        Lattice lat(nx, ny, bc);
        DualityContext ctx(lat);
        auto lgt = ground_state(lgt_hamiltonian(lat, 1.1), lgt_sector(lat)).state;
        auto ising = ground_state(ising_hamiltonian(lat, 1.1), ising_sector(lat)).state;
        for (int trial = 0; trial < 3; ++trial) {
            auto r = sample_global_randomization(lat, rng);
            auto a = lgt;
            apply_circuit(a, lower_dual_pairs_circuit(ctx, assign_paths(lat, r.pairing), r.unitaries));
            auto b = ising;
            for (size_t k = 0; k < r.pairing.size(); ++k)
                b.apply_2q(r.pairing[k].first, r.pairing[k].second, to_mat4(r.unitaries[k]));
            auto pa = pushed(ctx, a), pb = b.probabilities();
            for (size_t j = 0; j < pb.size(); ++j) CHECK(pa[j] == doctest::Approx(pb[j]).scale(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("Dual Product on the ancilla register matches the Ising rotations") {
    Lattice lat(3, 2, Boundary::PBC);
    DualityContext actx(lat, {.reference_plaquette = 0, .ancilla = true});
    auto lgt = ground_state(lgt_hamiltonian(lat, 0.8), lgt_sector(lat)).state;
    auto ising = ground_state(ising_hamiltonian(lat, 0.8), ising_sector(lat)).state;
    auto prepared = prepare_ancilla_state(actx, lgt);
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        auto bases = sample_bases(6, rng);
        auto a = prepared;
        apply_circuit(a, dual_product_circuit(actx, bases));
        auto b = ising;
        for (int p = 0; p < 6; ++p)
            if (bases[p] != Basis::Z)
                b.apply_pauli_rotation(PauliString::single(6, p, basis_rotation_axis(bases[p])),
                                       basis_rotation_angle(bases[p]));
        auto pa = pushed(actx, a), pb = b.probabilities();
        for (size_t j = 0; j < pb.size(); ++j) CHECK(pa[j] == doctest::Approx(pb[j]).scale(1.0).epsilon(1e-9));
    }
    auto all_z = dual_product_circuit(actx, std::vector<Basis>(6, Basis::Z));
    CHECK(all_z.gates.empty());
    CHECK(circuit_depth(all_z, DepthMode::CnotLadder) == 0);
    CHECK_THROWS(run_shot_dual_product(DualityContext(lat), lgt, rng));
}

TEST_CASE("product circuits are one layer of single-qubit rotations") {
    Rng rng(6);
    auto bases = sample_bases(12, rng);
    auto c = product_circuit(12, bases);
    CHECK(circuit_depth(c, DepthMode::CnotLadder) <= 1);
    for (const auto &g : c.gates) CHECK(g.generator.weight() == 1);
}

TEST_CASE("records round-trip through JSON") {
    Lattice lat(4, 4, Boundary::PBC);
    auto tilings = enumerate_tilings(lat, 2);
    Rng rng(7);
    std::mt19937_64 srng(7);
    auto ising = StateVector::random(16, srng);
    std::vector<ShadowRecord> recs{run_shot_global_dual(lat, ising, rng), run_shot_local_dual(lat, ising, tilings, rng),
                                   run_shot_dual_product_dual(ising, rng)};
    recs.push_back(run_shot_product(StateVector::random(8, srng), rng));
    recs[0].seed = 99;
    recs[0].shot = 12345678901ULL;
    for (const auto &r : recs) {
        auto text = to_json(r);
        auto back = record_from_json(text);
        CHECK(to_json(back) == text);
        CHECK(back.protocol == r.protocol);
        CHECK(back.pairing == r.pairing);
        CHECK(back.tiling == r.tiling);
        CHECK(back.patch_pairing == r.patch_pairing);
        CHECK(back.bases == r.bases);
        CHECK(back.has_s == r.has_s);
        CHECK(back.s == r.s);
        CHECK(back.b == r.b);
        CHECK(back.b_bits == r.b_bits);
        REQUIRE(back.unitaries.size() == r.unitaries.size());
        for (size_t k = 0; k < r.unitaries.size(); ++k) CHECK(back.unitaries[k].matrix == r.unitaries[k].matrix);
    }
    CHECK_THROWS(record_from_json("{\"protocol\": \"nope\"}"));
}
