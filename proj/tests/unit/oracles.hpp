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

// Dense reference implementations used as independent oracles in the unit tests.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <queue>
#include <random>
#include <vector>

#include "lgts/hamiltonian.hpp"
#include "lgts/lattice.hpp"
#include "lgts/pauli.hpp"
#include "lgts/statevec.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Eigen::Matrix2cd sigma(char c) {
    Eigen::Matrix2cd m;
    switch (c) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

// Kronecker product with qubit 0 as the least significant index bit.
inline Mat dense(const lgts::PauliString &p) {
    Mat out = Mat::Identity(1, 1);
    for (int q = 0; q < p.num_qubits(); ++q) {
        Eigen::Matrix2cd s = sigma(p.at(q));
        Mat next(out.rows() * 2, out.cols() * 2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = s(a, b) * out;
        out = next;
    }
    return p.phase_value() * out;
}

inline Vec to_vec(const lgts::StateVector &psi) {
    Vec v(psi.size());
    for (size_t k = 0; k < psi.size(); ++k) v[k] = psi[k];
    return v;
}

inline lgts::StateVector from_vec(int n, const Vec &v) {
    std::vector<C> a(v.data(), v.data() + v.size());
    return lgts::StateVector::from_amplitudes(n, a);
}

inline lgts::PauliString random_pauli(int n, std::mt19937_64 &rng, bool hermitian = true) {
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    int phase = static_cast<int>(rng() % 4);
    if (hermitian) phase &= 2;
    return lgts::PauliString(n, rng() & mask, rng() & mask, phase);
}

inline Mat dense_hamiltonian(const lgts::HamiltonianSpec &h) {
    const int dim = 1 << h.num_qubits;
    Mat m = Mat::Zero(dim, dim);
    for (const auto &t : h.terms) m += t.coeff * dense(t.op);
    return m;
}

// Ground state of H restricted to the joint +1 eigenspace of `sector`.
inline std::pair<double, Vec> dense_ground_state(const lgts::HamiltonianSpec &h,
                                                 const std::vector<lgts::PauliString> &sector) {
    const int dim = 1 << h.num_qubits;
    Mat proj = Mat::Identity(dim, dim);
    for (const auto &c : sector) proj = proj * (0.5 * (Mat::Identity(dim, dim) + dense(c)));
    Mat hm = dense_hamiltonian(h);
    Mat shifted = proj * hm * proj + 1e3 * (Mat::Identity(dim, dim) - proj);
    Eigen::SelfAdjointEigenSolver<Mat> es(shifted);
    return {es.eigenvalues()[0], es.eigenvectors().col(0)};
}

// Plaquette graph distances by breadth-first search over dual steps.
inline std::vector<int> bfs_distances(const lgts::Lattice &lat, int from) {
    std::vector<int> d(lat.n_plaquettes(), -1);
    std::queue<int> q;
    d[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int p = q.front();
        q.pop();
        for (const auto &st : lat.dual_steps(p)) {
            if (st.to >= 0 && d[st.to] < 0) {
                d[st.to] = d[p] + 1;
                q.push(st.to);
            }
        }
    }
    return d;
}

// All perfect matchings of {0..n-1}.
inline void enumerate_pairings(std::vector<int> rest, std::vector<std::pair<int, int>> &cur,
                               std::vector<std::vector<std::pair<int, int>>> &out) {
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    int a = rest[0];
    for (size_t k = 1; k < rest.size(); ++k) {
        std::vector<int> next;
        for (size_t j = 1; j < rest.size(); ++j)
            if (j != k) next.push_back(rest[j]);
        cur.emplace_back(a, rest[k]);
        enumerate_pairings(next, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::pair<int, int>>> all_pairings(int n) {
    std::vector<int> items(n);
    for (int k = 0; k < n; ++k) items[k] = k;
    std::vector<std::pair<int, int>> cur;
    std::vector<std::vector<std::pair<int, int>>> out;
    enumerate_pairings(items, cur, out);
    return out;
}

// The 24 single-qubit Cliffords modulo phase, generated from H and S.
inline std::vector<Eigen::Matrix2cd> single_qubit_cliffords() {
    Eigen::Matrix2cd h, s;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    s << 1, 0, 0, C(0, 1);
    std::vector<Eigen::Matrix2cd> group{Eigen::Matrix2cd::Identity()};
    auto known = [&](const Eigen::Matrix2cd &m) {
        for (const auto &g : group) {
            if (std::abs(std::abs((g.adjoint() * m).trace()) - 2.0) < 1e-9) return true;
        }
        return false;
    };
    for (size_t k = 0; k < group.size(); ++k) {
        for (const auto &gen : {h, s}) {
            Eigen::Matrix2cd m = gen * group[k];
            if (!known(m)) group.push_back(m);
        }
    }
    return group;
}

}  // namespace oracle
