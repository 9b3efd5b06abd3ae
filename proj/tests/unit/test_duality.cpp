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

#include "lgts/duality.hpp"
#include "lgts/hamiltonian.hpp"
#include "lgts/protocols.hpp"
#include "oracles.hpp"

using namespace lgts;

namespace {

PauliString random_even(int V, std::mt19937_64 &rng, bool even) {
    for (;;) {
        auto s = oracle::random_pauli(V, rng);
        if (!even || (s.weights().xy() % 2) == 0) return s;
    }
}

struct Grounds {
    StateVector lgt;
    StateVector ising;
};

Grounds grounds(const Lattice &lat, double g) {
    return {ground_state(lgt_hamiltonian(lat, g), lgt_sector(lat)).state,
            ground_state(ising_hamiltonian(lat, g), ising_sector(lat)).state};
}

}  // namespace

TEST_CASE("images of plaquette operators and gauge generators") {
    Lattice lat(3, 2, Boundary::PBC);
    DualityContext ctx(lat);
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        auto img = ctx.phi_inverse(PauliString::single(6, p, 'Z'));
        CHECK(img == ctx.plaquette_operator(p));
        CHECK(img.weight() == 4);
    }
    for (const auto &g : ctx.gauss_operators())
        for (int p = 0; p < 6; ++p) CHECK(g.commutes(ctx.plaquette_operator(p)));
}

TEST_CASE("the map is a homomorphism that preserves commutation") {
    std::mt19937_64 rng(9);
    for (auto [nx, ny, bc] : {std::tuple{3, 2, Boundary::PBC}, std::tuple{4, 3, Boundary::FBC}}) {
        Lattice lat(nx, ny, bc);
        DualityContext ctx(lat);
        const int V = lat.n_plaquettes();
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_even(V, rng, lat.periodic()), b = random_even(V, rng, lat.periodic());
            auto ia = ctx.phi_inverse(a), ib = ctx.phi_inverse(b);
            CHECK(ctx.phi_inverse(a * b) == ia * ib);
            CHECK(a.commutes(b) == ia.commutes(ib));
            for (const auto &c : ctx.sector()) CHECK(ia.commutes(c));
        }
    }
}

TEST_CASE("round trip holds up to the global dual parity") {
    std::mt19937_64 rng(10);
    Lattice lat(3, 2, Boundary::PBC);
    DualityContext ctx(lat);
    const uint64_t all = (uint64_t{1} << 6) - 1;
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_even(6, rng, true);
        auto back = ctx.phi_forward(ctx.phi_inverse(s));
        CHECK(back.x_bits() == s.x_bits());
        CHECK((back.z_bits() == s.z_bits() || back.z_bits() == (s.z_bits() ^ all)));
        CHECK(ctx.phi_inverse(back) == ctx.phi_inverse(s));
    }
    Lattice fbc(3, 3, Boundary::FBC);
    DualityContext fctx(fbc);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = oracle::random_pauli(4, rng);
        CHECK(fctx.phi_forward(fctx.phi_inverse(s)) == s);
    }
}

TEST_CASE("non-gauge-invariant operators are rejected") {
    Lattice lat(3, 2, Boundary::PBC);
    DualityContext ctx(lat);
    CHECK_THROWS(ctx.phi_forward(PauliString::single(12, 0, 'Z')));
    CHECK_THROWS(ctx.phi_inverse(PauliString::single(6, 0, 'X')));
    uint64_t winding = 0;
    for (int x = 0; x < 3; ++x) winding |= uint64_t{1} << lat.link_id(x, 0, Dir::kX);
    CHECK_THROWS(ctx.phi_forward(PauliString::z_string(12, winding)));
    CHECK_THROWS(DualityContext(lat, {.reference_plaquette = 6}));
}

TEST_CASE("expectation values agree across the duality") {
    std::mt19937_64 rng(12);
    for (auto [nx, ny, bc] : {std::tuple{3, 2, Boundary::PBC}, std::tuple{3, 3, Boundary::FBC}}) {
        Lattice lat(nx, ny, bc);
        const int V = lat.n_plaquettes();
        auto st = grounds(lat, 0.6);
        for (int ref : {0, V - 1}) {
            DualityOptions opts;
            opts.reference_plaquette = ref;
            if (!lat.periodic() && lat.exterior_links(ref).empty()) continue;
            DualityContext ctx(lat, opts);
            CHECK(ctx.check_physical(st.lgt, 1e-8).physical);
            for (int trial = 0; trial < 40; ++trial) {
                auto s = random_even(V, rng, lat.periodic());
                CHECK(st.lgt.expectation(ctx.phi_inverse(s)) ==
                      doctest::Approx(st.ising.expectation(s)).epsilon(1e-8).scale(1.0));
            }
        }
    }
}

TEST_CASE("Z-basis outcomes map to the Ising distribution") {
    Lattice lat(3, 2, Boundary::PBC);
    auto st = grounds(lat, 0.9);
    DualityContext ctx(lat);
    auto plgt = st.lgt.probabilities();
    std::vector<double> mapped(64, 0.0);
    for (uint64_t s = 0; s < plgt.size(); ++s) mapped[ctx.map_bits(s)] += plgt[s];
    auto pising = st.ising.probabilities();
    for (uint64_t b = 0; b < 64; ++b) CHECK(mapped[b] == doctest::Approx(pising[b]).scale(1.0).epsilon(1e-9));
}

TEST_CASE("ancilla mode gives images to parity-odd strings") {
    std::mt19937_64 rng(13);
    Lattice lat(3, 2, Boundary::PBC);
    auto st = grounds(lat, 0.6);
    DualityContext actx(lat, {.reference_plaquette = 0, .ancilla = true});
    CHECK(actx.num_lgt_qubits() == 13);
    auto ext = prepare_ancilla_state(actx, st.lgt);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = oracle::random_pauli(6, rng), b = oracle::random_pauli(6, rng);
        CHECK(actx.phi_inverse(a * b) == actx.phi_inverse(a) * actx.phi_inverse(b));
        CHECK(a.commutes(b) == actx.phi_inverse(a).commutes(actx.phi_inverse(b)));
        CHECK(ext.expectation(actx.phi_inverse(a)) == doctest::Approx(st.ising.expectation(a)).scale(1.0).epsilon(1e-8));
    }
    auto p = ext.probabilities();
    std::vector<double> mapped(64, 0.0);
    for (uint64_t s = 0; s < p.size(); ++s) mapped[actx.map_bits(s)] += p[s];
    auto pising = st.ising.probabilities();
    for (uint64_t b = 0; b < 64; ++b) CHECK(mapped[b] == doctest::Approx(pising[b]).scale(1.0).epsilon(1e-9));
}
