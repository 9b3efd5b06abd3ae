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

#include <Eigen/Dense>
#include <vector>

#include "lgts/pauli.hpp"
#include "lgts/random.hpp"

namespace lgts {

// Two-qubit matrices use the index k = b0 + 2*b1, where qubit 0 is the first
// plaquette of the pair.
struct TwoQubitUnitary {
    Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Identity();
    bool parity_respecting = false;
};

// exp(i theta/2 P) with P a 2-qubit Pauli string.
struct LocalRotation {
    PauliString op;
    double theta;
};

// B = e^{i phase} Rz(a) Ry(b) Rz(c), Rz(t) = diag(e^{-it/2}, e^{it/2}).
struct EulerZYZ {
    double phase = 0;
    double a = 0;
    double b = 0;
    double c = 0;
};

EulerZYZ euler_zyz(const Eigen::Matrix2cd &u);
Eigen::Matrix2cd euler_matrix(const EulerZYZ &e);

// Haar-random U(dim) by QR of a complex Gaussian matrix with the phase fix on R's diagonal.
Eigen::MatrixXcd haar_unitary(int dim, Rng &rng);

TwoQubitUnitary sample_parity_unitary(Rng &rng);
TwoQubitUnitary sample_haar_2q(Rng &rng);
TwoQubitUnitary parity_unitary(const Eigen::Matrix2cd &even, const Eigen::Matrix2cd &odd);

// Parity blocks in the bases (|00>, |11>) and (|b0=0,b1=1>, |b0=1,b1=0>).
Eigen::Matrix2cd even_block(const Eigen::Matrix4cd &u);
Eigen::Matrix2cd odd_block(const Eigen::Matrix4cd &u);

// Rotations whose product (first element applied first) equals u up to a global phase.
// Parity-respecting unitaries use X0Y1 / Y0X1 / Z0 / Z1 / Z0Z1 generators only.
std::vector<LocalRotation> decompose_two_qubit(const TwoQubitUnitary &u, double drop_below = 1e-14);

Eigen::Matrix4cd pauli_matrix_2q(const PauliString &p);
Eigen::Matrix4cd rotation_matrix_2q(const LocalRotation &r);
Eigen::Matrix4cd rotations_product(const std::vector<LocalRotation> &rs);

// max |a - e^{i phi} b| after removing the best global phase.
double phase_insensitive_distance(const Eigen::Matrix4cd &a, const Eigen::Matrix4cd &b);

}  // namespace lgts
