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

#include "lgts/unitary.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace lgts {

namespace {

using C = std::complex<double>;

PauliString p2(uint64_t x, uint64_t z) { return PauliString(2, x, z); }

// Two-qubit generators, qubit 0 = bit 0.
const PauliString kZ0 = p2(0b00, 0b01);
const PauliString kZ1 = p2(0b00, 0b10);
const PauliString kZ0Z1 = p2(0b00, 0b11);
const PauliString kY0 = p2(0b01, 0b01);
const PauliString kY1 = p2(0b10, 0b10);
const PauliString kY0Z1 = p2(0b01, 0b11);
const PauliString kZ0Y1 = p2(0b10, 0b11);
const PauliString kX0Y1 = p2(0b11, 0b10);
const PauliString kY0X1 = p2(0b11, 0b01);

void push(std::vector<LocalRotation> &out, const PauliString &op, double theta, double drop) {
    double t = std::remainder(theta, 4 * M_PI);
    if (std::abs(t) > drop) out.push_back({op, t});
}

}  // namespace

EulerZYZ euler_zyz(const Eigen::Matrix2cd &u) {
    EulerZYZ e;
    C det = u.determinant();
    e.phase = std::arg(det) / 2;
    Eigen::Matrix2cd s = u * std::exp(C(0, -e.phase));
    C a = s(0, 0), v = s(1, 0);
    e.b = 2 * std::atan2(std::abs(v), std::abs(a));
    double arg_u = std::abs(a) > 1e-300 ? std::arg(a) : 0.0;
    double arg_v = std::abs(v) > 1e-300 ? std::arg(v) : 0.0;
    e.a = arg_v - arg_u;
    e.c = -arg_u - arg_v;
    return e;
}

Eigen::Matrix2cd euler_matrix(const EulerZYZ &e) {
    auto rz = [](double t) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = std::exp(C(0, -t / 2));
        m(1, 1) = std::exp(C(0, t / 2));
        return m;
    };
    Eigen::Matrix2cd ry;
    ry << std::cos(e.b / 2), -std::sin(e.b / 2), std::sin(e.b / 2), std::cos(e.b / 2);
    return std::exp(C(0, e.phase)) * rz(e.a) * ry * rz(e.c);
}

Eigen::MatrixXcd haar_unitary(int dim, Rng &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            double re = g(rng);
            double im = g(rng);
            z(i, j) = C(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        C d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : C(1, 0);
    }
    return q;
}

TwoQubitUnitary parity_unitary(const Eigen::Matrix2cd &even, const Eigen::Matrix2cd &odd) {
    TwoQubitUnitary u;
    u.matrix.setZero();
    const int e[2] = {0, 3}, o[2] = {2, 1};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            u.matrix(e[r], e[c]) = even(r, c);
            u.matrix(o[r], o[c]) = odd(r, c);
        }
    }
    u.parity_respecting = true;
    return u;
}

TwoQubitUnitary sample_parity_unitary(Rng &rng) {
    Eigen::Matrix2cd odd = haar_unitary(2, rng);
    Eigen::Matrix2cd even = haar_unitary(2, rng);
    return parity_unitary(even, odd);
}

TwoQubitUnitary sample_haar_2q(Rng &rng) {
    TwoQubitUnitary u;
    u.matrix = haar_unitary(4, rng);
    u.parity_respecting = false;
    return u;
}

Eigen::Matrix2cd even_block(const Eigen::Matrix4cd &u) {
    Eigen::Matrix2cd b;
    b << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
    return b;
}

Eigen::Matrix2cd odd_block(const Eigen::Matrix4cd &u) {
    Eigen::Matrix2cd b;
    b << u(2, 2), u(2, 1), u(1, 2), u(1, 1);
    return b;
}

namespace {

std::vector<LocalRotation> decompose_parity(const Eigen::Matrix4cd &u, double drop) {
    EulerZYZ e = euler_zyz(even_block(u));
    EulerZYZ o = euler_zyz(odd_block(u));
    std::vector<LocalRotation> out;
    // Z_even = (Z0 + Z1)/2, Z_odd = (Z0 - Z1)/2, Y_even = (X0Y1 + Y0X1)/2, Y_odd = (Y0X1 - X0Y1)/2.
    push(out, kZ0, -(e.c + o.c) / 2, drop);
    push(out, kZ1, -(e.c - o.c) / 2, drop);
    push(out, kX0Y1, -(e.b - o.b) / 2, drop);
    push(out, kY0X1, -(e.b + o.b) / 2, drop);
    push(out, kZ0, -(e.a + o.a) / 2, drop);
    push(out, kZ1, -(e.a - o.a) / 2, drop);
    push(out, kZ0Z1, e.phase - o.phase, drop);
    return out;
}

// Block-diagonal A0 (+) A1 selected by qubit 1, as rotations on qubit 0 controlled uniformly by qubit 1.
void push_multiplexed(std::vector<LocalRotation> &out, const Eigen::Matrix2cd &a0, const Eigen::Matrix2cd &a1,
                      double drop) {
    EulerZYZ e0 = euler_zyz(a0), e1 = euler_zyz(a1);
    push(out, kZ0, -(e0.c + e1.c) / 2, drop);
    push(out, kZ0Z1, -(e0.c - e1.c) / 2, drop);
    push(out, kY0, -(e0.b + e1.b) / 2, drop);
    push(out, kY0Z1, -(e0.b - e1.b) / 2, drop);
    push(out, kZ0, -(e0.a + e1.a) / 2, drop);
    push(out, kZ0Z1, -(e0.a - e1.a) / 2, drop);
    push(out, kZ1, e0.phase - e1.phase, drop);
}

Eigen::Vector2cd orthogonal_to(const Eigen::Vector2cd &v) { return {-std::conj(v(1)), std::conj(v(0))}; }

std::vector<LocalRotation> decompose_general(const Eigen::Matrix4cd &u, double drop) {
    // Cosine-sine decomposition U = (A0 (+) A1) [[C, -S], [S, C]] (B0 (+) B1), blocks indexed by qubit 1.
    Eigen::Matrix2cd u00 = u.block<2, 2>(0, 0), u01 = u.block<2, 2>(0, 2);
    Eigen::Matrix2cd u10 = u.block<2, 2>(2, 0), u11 = u.block<2, 2>(2, 2);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2cd a0 = svd.matrixU();
    Eigen::Matrix2cd b0 = svd.matrixV().adjoint();
    Eigen::Vector2d c = svd.singularValues();
    Eigen::Matrix2cd m = u10 * b0.adjoint();
    Eigen::Vector2d s(m.col(0).norm(), m.col(1).norm());

    const double tiny = 1e-7;
    Eigen::Matrix2cd a1;
    bool big0 = s(0) > tiny, big1 = s(1) > tiny;
    if (big0) a1.col(0) = m.col(0) / s(0);
    if (big1) a1.col(1) = m.col(1) / s(1);
    if (big0 && !big1) a1.col(1) = orthogonal_to(a1.col(0));
    if (!big0 && big1) a1.col(0) = orthogonal_to(a1.col(1));
    if (!big0 && !big1) a1.setIdentity();
    if (big0 && big1) {
        // Re-orthonormalize against rounding.
        Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a1);
        Eigen::Matrix2cd q = qr.householderQ();
        Eigen::Matrix2cd r = qr.matrixQR();
        for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
        a1 = q;
    }

    Eigen::Matrix2cd b1;
    Eigen::Matrix2cd from_c = a1.adjoint() * u11;
    Eigen::Matrix2cd from_s = -(a0.adjoint() * u01);
    for (int k = 0; k < 2; ++k) {
        if (c(k) >= s(k)) {
            b1.row(k) = from_c.row(k) / c(k);
        } else {
            b1.row(k) = from_s.row(k) / s(k);
        }
    }

    std::vector<LocalRotation> out;
    push_multiplexed(out, b0, b1, drop);
    double t0 = 2 * std::atan2(s(0), c(0));
    double t1 = 2 * std::atan2(s(1), c(1));
    push(out, kY1, -(t0 + t1) / 2, drop);
    push(out, kZ0Y1, -(t0 - t1) / 2, drop);
    push_multiplexed(out, a0, a1, drop);
    return out;
}

}  // namespace

std::vector<LocalRotation> decompose_two_qubit(const TwoQubitUnitary &u, double drop_below) {
    return u.parity_respecting ? decompose_parity(u.matrix, drop_below) : decompose_general(u.matrix, drop_below);
}

Eigen::Matrix4cd pauli_matrix_2q(const PauliString &p) {
    if (p.num_qubits() != 2) throw std::invalid_argument("expected a two-qubit Pauli string");
    auto one = [](char c) {
        Eigen::Matrix2cd m;
        switch (c) {
            case 'X': m << 0, 1, 1, 0; break;
            case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
            case 'Z': m << 1, 0, 0, -1; break;
            default: m.setIdentity();
        }
        return m;
    };
    Eigen::Matrix2cd q0 = one(p.at(0)), q1 = one(p.at(1));
    Eigen::Matrix4cd out;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r0 = 0; r0 < 2; ++r0)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int c0 = 0; c0 < 2; ++c0) out(r0 + 2 * r1, c0 + 2 * c1) = q1(r1, c1) * q0(r0, c0);
    return p.phase_value() * out;
}

Eigen::Matrix4cd rotation_matrix_2q(const LocalRotation &r) {
    return std::cos(r.theta / 2) * Eigen::Matrix4cd::Identity() + C(0, std::sin(r.theta / 2)) * pauli_matrix_2q(r.op);
}

Eigen::Matrix4cd rotations_product(const std::vector<LocalRotation> &rs) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    for (const auto &r : rs) m = rotation_matrix_2q(r) * m;
    return m;
}

double phase_insensitive_distance(const Eigen::Matrix4cd &a, const Eigen::Matrix4cd &b) {
    C t = (b.adjoint() * a).trace();
    C ph = std::abs(t) > 0 ? t / std::abs(t) : C(1, 0);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

}  // namespace lgts
