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

#include "lgts/estimator.hpp"
#include "oracles.hpp"

using namespace lgts;

namespace {

// Per-pair channel eigenvalue for the local Pauli on a pair.
double pair_eigenvalue(char a, char b, Boundary bc) {
    if (a == 'I' && b == 'I') return 1.0;
    if (bc == Boundary::FBC) return 0.2;
    const int xy = (a == 'X' || a == 'Y') + (b == 'X' || b == 'Y');
    if (xy == 1) return 0.0;
    if (xy == 2) return 1.0 / 3;
    return (a == 'Z' && b == 'Z') ? 1.0 : 1.0 / 3;
}

// Channel eigenvalue by enumerating every pairing.
double brute_force_coeff(const PauliString &s, Boundary bc) {
    auto pairings = oracle::all_pairings(s.num_qubits());
    double acc = 0;
    for (const auto &pairing : pairings) {
        double prod = 1;
        for (auto [i, j] : pairing) prod *= pair_eigenvalue(s.at(i), s.at(j), bc);
        acc += prod;
    }
    return acc / pairings.size();
}

// Paulis times the cyclic permutation X -> Y -> Z: an exact single-qubit 2-design.
std::vector<Eigen::Matrix2cd> tetrahedral_group() {
    Eigen::Matrix2cd r;
    r << oracle::C(1, -1), oracle::C(-1, -1), oracle::C(1, -1), oracle::C(1, 1);
    r /= 2.0;
    std::vector<Eigen::Matrix2cd> out;
    Eigen::Matrix2cd power = Eigen::Matrix2cd::Identity();
    for (int k = 0; k < 3; ++k) {
        for (char p : {'I', 'X', 'Y', 'Z'}) out.push_back(oracle::sigma(p) * power);
        power = r * power;
    }
    return out;
}

PauliString random_even(int V, std::mt19937_64 &rng) {
    for (;;) {
        auto s = oracle::random_pauli(V, rng);
        s = s.with_phase(0);
        if (s.weights().xy() % 2 == 0) return s;
    }
}

}  // namespace

TEST_CASE("pair counts and coefficient examples") {
    CHECK(pair_count(0) == 1);
    CHECK(pair_count(6) == 15);
    CHECK(pair_count(5) == 0);
    CHECK(coeff_f(4, 2) == Rational(1, 3));
    CHECK(coeff_alpha(2, 0) == 1);
    CHECK(coeff_alpha(1, 1) == Rational(1, 3));
    CHECK(coeff_alpha_tilde(4, 2) == Rational(7, 75));
    CHECK(coeff_alpha_tilde(4, 0) == 1);
    CHECK_THROWS(coeff_f(4, 1));
    CHECK_THROWS(coeff_f(5, 2));
    auto c = pairs_coeff(4, PauliString::parse("X0 X1", 4), Boundary::PBC);
    CHECK(c.c == Rational(1, 9));
    CHECK(c.power3 == 1);
    CHECK_THROWS(pairs_coeff(4, PauliString::parse("X0", 4), Boundary::PBC));
}

TEST_CASE("closed-form coefficients match pairing enumeration") {
    std::mt19937_64 rng(1);
    for (int V : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto s = random_even(V, rng);
            CHECK(pairs_coeff(V, s, Boundary::PBC).value() == doctest::Approx(brute_force_coeff(s, Boundary::PBC)).epsilon(1e-13));
            auto t = oracle::random_pauli(V, rng).with_phase(0);
            CHECK(pairs_coeff(V, t, Boundary::FBC).value() == doctest::Approx(brute_force_coeff(t, Boundary::FBC)).epsilon(1e-13));
        }
    }
}

TEST_CASE("the tetrahedral set is a unitary 2-design") {
    auto g = tetrahedral_group();
    CHECK(g.size() == 12);
    double frame = 0;
    for (const auto &a : g)
        for (const auto &b : g) frame += std::pow(std::norm((a.adjoint() * b).trace()), 2);
    CHECK(frame / (g.size() * g.size()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pairs estimator is exactly unbiased over a 2-design ensemble") {
    auto group = tetrahedral_group();
    std::vector<TwoQubitUnitary> blocks;
    for (const auto &a : group)
        for (const auto &b : group) blocks.push_back(parity_unitary(a, b));
    std::mt19937_64 rng(2);
    for (int V : {2, 4}) {
        auto psi = StateVector::random(V, rng);
        std::vector<PauliString> obs;
        for (int k = 0; k < 4; ++k) obs.push_back(random_even(V, rng));
        obs.push_back(PauliString::parse(V == 2 ? "-1 X0 Y1" : "-1 X0 Y1 Z3", V));
        std::vector<ChannelCoeff> coeffs;
        for (const auto &s : obs) coeffs.push_back(pairs_coeff(V, s, Boundary::PBC));
        std::vector<double> mean(obs.size(), 0.0);
        auto pairings = oracle::all_pairings(V);
        double weight = 1.0 / pairings.size();
        for (const auto &pairing : pairings) {
            std::vector<size_t> choice(pairing.size(), 0);
            const double w = weight / std::pow(double(blocks.size()), double(pairing.size()));
            for (;;) {
                ShadowRecord rec;
                rec.protocol = Protocol::GlobalPairs;
                rec.b_bits = V;
                auto phi = psi;
                for (size_t k = 0; k < pairing.size(); ++k) {
                    auto [i, j] = pairing[k];
                    rec.pairing.emplace_back(std::min(i, j), std::max(i, j));
                    rec.unitaries.push_back(blocks[choice[k]]);
                    phi.apply_2q(rec.pairing[k].first, rec.pairing[k].second, to_mat4(blocks[choice[k]]));
                }
                auto probs = phi.probabilities();
                for (uint64_t b = 0; b < probs.size(); ++b) {
                    if (probs[b] == 0) continue;
                    rec.b = b;
                    for (size_t o = 0; o < obs.size(); ++o)
                        mean[o] += w * probs[b] * estimate_shot_dual_pairs(rec, obs[o], coeffs[o]);
                }
                size_t k = 0;
                while (k < choice.size() && ++choice[k] == blocks.size()) choice[k++] = 0;
                if (k == choice.size()) break;
            }
        }
        for (size_t o = 0; o < obs.size(); ++o) CHECK(mean[o] == doctest::Approx(psi.expectation(obs[o])).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("fixed-boundary pairs estimator is unbiased under Haar sampling") {
    std::mt19937_64 srng(3);
    auto psi = StateVector::random(4, srng);
    Lattice lat(3, 3, Boundary::FBC);
    Rng rng(4);
    std::vector<PauliString> obs{PauliString::parse("X0", 4), PauliString::parse("Y1 Z2", 4),
                                 PauliString::parse("Z0 Z1 Z2 Z3", 4)};
    const int n = 60000;
    for (const auto &s : obs) {
        auto coeff = pairs_coeff(4, s, Boundary::FBC);
        std::vector<double> vals;
        Rng local = rng;
        for (int k = 0; k < n; ++k) vals.push_back(estimate_shot_dual_pairs(run_shot_global_dual(lat, psi, local), s, coeff));
        auto e = sample_mean(vals);
        CHECK(std::abs(e.value - psi.expectation(s)) < 5 * e.std_error);
    }
}

TEST_CASE("product-type estimators are exactly unbiased") {
    std::mt19937_64 rng(5);
    const int n = 3;
    auto psi = StateVector::random(n, rng);
    std::vector<PauliString> obs{PauliString::parse("X0", n), PauliString::parse("-1 Y0 Z2", n),
                                 PauliString::parse("X0 Y1 Z2", n), PauliString::identity(n)};
    std::vector<double> mean_link(obs.size(), 0.0), mean_dual(obs.size(), 0.0);
    for (int code = 0; code < 27; ++code) {
        std::vector<Basis> bases;
        for (int q = 0, c = code; q < n; ++q, c /= 3) bases.push_back(static_cast<Basis>(c % 3));
        auto phi = psi;
        apply_circuit(phi, product_circuit(n, bases));
        auto probs = phi.probabilities();
        ShadowRecord prod, dual;
        prod.protocol = Protocol::Product;
        prod.bases = bases;
        prod.s_bits = n;
        dual.protocol = Protocol::DualProduct;
        dual.bases = bases;
        dual.b_bits = n;
        for (uint64_t b = 0; b < probs.size(); ++b) {
            prod.s = dual.b = b;
            for (size_t o = 0; o < obs.size(); ++o) {
                mean_link[o] += probs[b] / 27 * estimate_shot_product_type(prod, obs[o], Side::LGT);
                mean_dual[o] += probs[b] / 27 * estimate_shot_product_type(dual, obs[o], Side::Ising);
            }
        }
    }
    for (size_t o = 0; o < obs.size(); ++o) {
        CHECK(mean_link[o] == doctest::Approx(psi.expectation(obs[o])).scale(1.0).epsilon(1e-12));
        CHECK(mean_dual[o] == doctest::Approx(psi.expectation(obs[o])).scale(1.0).epsilon(1e-12));
    }
    ShadowRecord prod;
    prod.protocol = Protocol::Product;
    prod.bases = {Basis::Z, Basis::Z, Basis::Z};
    prod.s_bits = 3;
    CHECK_THROWS(estimate_shot_product_type(prod, obs[0], Side::Ising));
    CHECK_THROWS(estimate_shot_product_type(prod, PauliString::parse("+i Z0", 3), Side::LGT));
}

TEST_CASE("local filtering picks the first tiling holding the support") {
    Lattice lat(4, 4, Boundary::PBC);
    auto tilings = enumerate_tilings(lat, 2);
    std::vector<ShadowRecord> recs(8);
    for (size_t k = 0; k < recs.size(); ++k) recs[k].tiling = static_cast<int>(k % 4);
    auto bit = [](int p) { return uint64_t{1} << p; };
    auto sel = filter_local(recs, tilings, bit(0) | bit(1));
    CHECK(sel.tiling == 0);
    CHECK(sel.indices == std::vector<size_t>{0, 4});
    sel = filter_local(recs, tilings, bit(1) | bit(2));
    CHECK(tilings[sel.tiling].ox == 1);
    CHECK(tilings[sel.tiling].oy == 0);
    sel = filter_local(recs, tilings, bit(0) | bit(3));
    CHECK(tilings[sel.tiling].patch_of[0] == tilings[sel.tiling].patch_of[3]);
    CHECK_THROWS(filter_local(recs, tilings, bit(0) | bit(1) | bit(2)));
}

TEST_CASE("median of means") {
    std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8, 9};
    auto e = median_of_means(v, 3);
    CHECK(e.block_means == std::vector<double>{2, 5, 8});
    CHECK(e.value == 5);
    CHECK(e.std_error == doctest::Approx(std::sqrt(9.0 / 3)));
    std::vector<double> w{0, 0, 0, 100};
    CHECK(median_of_means(w, 2).value == 25);
    std::vector<double> ten(10, 1.0);
    auto d = median_of_means(ten);
    CHECK(d.n_blocks == 4);
    CHECK(d.value == 1.0);
    CHECK(sample_mean(v).value == 5);
    CHECK(aggregate(v, Aggregator::MedianOfMeans).value == 5);
    CHECK(parse_aggregator(to_string(Aggregator::MedianOfMeans)) == Aggregator::MedianOfMeans);
    CHECK_THROWS(median_of_means(std::vector<double>{}));
}

TEST_CASE("variance and sample bounds") {
    Lattice lat(2, 2, Boundary::PBC);
    CHECK(variance_bound(Protocol::GlobalPairs, PauliString::parse("X0 X1", 4), lat) == doctest::Approx(9.0));
    CHECK(variance_bound(Protocol::DualProduct, PauliString::parse("X0 X1", 4), lat) == doctest::Approx(16.0));
    CHECK(variance_bound(Protocol::GlobalPairs, PauliString::identity(4), lat) == doctest::Approx(1.0));
    CHECK(variance_bound(Protocol::LocalPairs, PauliString::parse("Z0", 4), lat, 1.0, 2) == doctest::Approx(3.0));
    CHECK_THROWS(variance_bound(Protocol::LocalPairs, PauliString::parse("Z0", 4), lat));
    CHECK(sample_bound(1, 0.5, 2.0) == doctest::Approx(std::log(2.0) * 8.0));
}
