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

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lgts/kernels.hpp"
#include "lgts/pauli.hpp"

namespace lgts {

using Mat2 = std::array<cplx, 4>;   // row-major
using Mat4 = std::array<cplx, 16>;  // row-major, index b0 + 2*b1

enum class Clifford1Q { H, S, Sdg, X, Y, Z, HS };

/// Dense state over n qubits; qubit 0 is the least significant index bit.
class StateVector {
   public:
    static constexpr int kDefaultMaxQubits = 24;

    StateVector() = default;
    explicit StateVector(int n);  // |0...0>
    static StateVector basis(int n, uint64_t index);
    static StateVector from_amplitudes(int n, std::vector<cplx> amps);
    static StateVector random(int n, std::mt19937_64 &rng);

    int num_qubits() const { return n_; }
    size_t size() const { return amps_.size(); }
    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx operator[](uint64_t k) const { return amps_[k]; }

    double norm() const;
    void normalize();

    void apply_pauli(const PauliString &p);
    // exp(i theta/2 P); P must be Hermitian.
    void apply_pauli_rotation(const PauliString &p, double theta);
    // (1 + C)/2, unnormalized.
    void apply_projector(const PauliString &c);
    void apply_1q(int q, const Mat2 &m);
    void apply_clifford_1q(int q, Clifford1Q which);
    void apply_cnot(int control, int target);
    void apply_2q(int q0, int q1, const Mat4 &m);

    double expectation(const PauliString &p) const;
    cplx expectation_complex(const PauliString &p) const;
    uint64_t sample(std::mt19937_64 &rng) const;
    std::vector<double> probabilities() const;

    // Appends one qubit in |0> as the new most significant qubit.
    StateVector with_ancilla() const;

    void save(const std::string &path) const;
    static StateVector load(const std::string &path);

   private:
    void check_qubit(int q) const;
    void check_operator(const PauliString &p) const;

    int n_ = 0;
    std::vector<cplx> amps_;
};

inline void apply_pauli_rotation(StateVector &psi, const PauliString &p, double theta) {
    psi.apply_pauli_rotation(p, theta);
}
inline void apply_cnot(StateVector &psi, int c, int t) { psi.apply_cnot(c, t); }
inline void apply_clifford_1q(StateVector &psi, int q, Clifford1Q which) { psi.apply_clifford_1q(q, which); }
inline double expectation(const StateVector &psi, const PauliString &p) { return psi.expectation(p); }
inline uint64_t sample(const StateVector &psi, std::mt19937_64 &rng) { return psi.sample(rng); }

Mat2 clifford_matrix(Clifford1Q which);

}  // namespace lgts
