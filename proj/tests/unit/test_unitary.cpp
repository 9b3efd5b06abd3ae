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

#include "lgts/unitary.hpp"
#include "oracles.hpp"

using namespace lgts;

namespace {

bool parity_generator(const PauliString &p) {
    const char *allowed[] = {"+1 X0 Y1", "+1 Y0 X1", "+1 Z0", "+1 Z1", "+1 Z0 Z1"};
    for (const char *a : allowed)
        if (p.with_phase(0) == PauliString::parse(a, 2)) return true;
    return false;
}

// tr(P M(P)) / tr(P^2) for the measure-and-invert channel of the sampled unitaries.
double channel_eigenvalue(const PauliString &p, bool parity, int samples, Rng &rng) {
    Eigen::Matrix4cd pm = pauli_matrix_2q(p);
    double acc = 0;
    for (int k = 0; k < samples; ++k) {
        auto u = parity ? sample_parity_unitary(rng) : sample_haar_2q(rng);
        Eigen::Matrix4cd r = u.matrix * pm * u.matrix.adjoint();
        for (int b = 0; b < 4; ++b) acc += std::norm(r(b, b));
    }
    return acc / samples / 4.0;
}

}  // namespace

TEST_CASE("Euler angles reproduce the matrix") {
    Rng rng(1);
    for (int k = 0; k < 50; ++k) {
        Eigen::Matrix2cd u = haar_unitary(2, rng);
        CHECK((euler_matrix(euler_zyz(u)) - u).norm() < 1e-10);
    }
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    CHECK((euler_matrix(euler_zyz(x)) - x).norm() < 1e-10);
}

TEST_CASE("Haar samples are unitary with the right moments") {
    Rng rng(2);
    double m2 = 0, m4 = 0;
    const int n = 40000;
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd u = haar_unitary(4, rng);
        if (k < 10) CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
        double a = std::norm(u(0, 0));
        m2 += a;
        m4 += a * a;
    }
    CHECK(m2 / n == doctest::Approx(0.25).epsilon(0.02));
    CHECK(m4 / n == doctest::Approx(0.1).epsilon(0.04));
}

TEST_CASE("frame potentials") {
    Rng rng(3);
    const int n = 40000;
    double haar = 0, parity = 0;
    for (int k = 0; k < n; ++k) {
        auto a = sample_haar_2q(rng), b = sample_haar_2q(rng);
        haar += std::pow(std::norm((a.matrix.adjoint() * b.matrix).trace()), 2);
        auto c = sample_parity_unitary(rng), d = sample_parity_unitary(rng);
        parity += std::pow(std::norm((c.matrix.adjoint() * d.matrix).trace()), 2);
    }
    CHECK(haar / n == doctest::Approx(2.0).epsilon(0.06));
    CHECK(parity / n == doctest::Approx(8.0).epsilon(0.06));
}

TEST_CASE("parity blocks") {
    Rng rng(4);
    auto u = sample_parity_unitary(rng);
    CHECK(u.parity_respecting);
    auto rebuilt = parity_unitary(even_block(u.matrix), odd_block(u.matrix));
    CHECK((rebuilt.matrix - u.matrix).norm() < 1e-12);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if ((std::popcount(unsigned(r)) ^ std::popcount(unsigned(c))) & 1) CHECK(std::abs(u.matrix(r, c)) == 0.0);
}

TEST_CASE("decompositions reproduce the unitary") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        auto u = (k % 2) ? sample_parity_unitary(rng) : sample_haar_2q(rng);
        auto rots = decompose_two_qubit(u);
        CHECK(phase_insensitive_distance(rotations_product(rots), u.matrix) < 1e-9);
        if (u.parity_respecting) {
            for (const auto &r : rots) CHECK(parity_generator(r.op));
            // The relative phase between the parity blocks is physical.
            Eigen::Matrix4cd prod = rotations_product(rots);
            Eigen::Matrix2cd ee = even_block(prod), oo = odd_block(prod);
            std::complex<double> phase = (even_block(u.matrix).adjoint() * ee).trace() / 2.0;
            CHECK((oo - phase * odd_block(u.matrix)).norm() < 1e-9);
        }
    }
    TwoQubitUnitary id;
    id.parity_respecting = true;
    CHECK(decompose_two_qubit(id).empty());
}

TEST_CASE("measured channel eigenvalues") {
    Rng rng(6);
    const int n = 20000;
    CHECK(channel_eigenvalue(PauliString::parse("X0 Z1", 2), false, n, rng) == doctest::Approx(0.2).epsilon(0.05));
    CHECK(channel_eigenvalue(PauliString::parse("Z0", 2), false, n, rng) == doctest::Approx(0.2).epsilon(0.05));
    CHECK(channel_eigenvalue(PauliString::parse("Z0", 2), true, n, rng) == doctest::Approx(1.0 / 3).epsilon(0.03));
    CHECK(channel_eigenvalue(PauliString::parse("Z0 Z1", 2), true, n, rng) == doctest::Approx(1.0));
    CHECK(channel_eigenvalue(PauliString::parse("X0 X1", 2), true, n, rng) == doctest::Approx(1.0 / 3).epsilon(0.03));
    CHECK(channel_eigenvalue(PauliString::parse("X0 Y1", 2), true, n, rng) == doctest::Approx(1.0 / 3).epsilon(0.03));
}
