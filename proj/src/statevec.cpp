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

#include "lgts/statevec.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "lgts/random.hpp"

namespace lgts {

namespace {

constexpr int kHardQubitLimit = 30;

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 0 || n > kHardQubitLimit) throw std::invalid_argument("unsupported qubit count " + std::to_string(n));
    amps_.assign(size_t{1} << n, cplx(0, 0));
    amps_[0] = 1;
}

StateVector StateVector::basis(int n, uint64_t index) {
    StateVector s(n);
    if (index >= s.size()) throw std::out_of_range("basis index out of range");
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::from_amplitudes(int n, std::vector<cplx> amps) {
    if (n < 0 || n > kHardQubitLimit || amps.size() != (size_t{1} << n)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    StateVector s;
    s.n_ = n;
    s.amps_ = std::move(amps);
    return s;
}

StateVector StateVector::random(int n, std::mt19937_64 &rng) {
    StateVector s(n);
    std::normal_distribution<double> g;
    for (auto &a : s.amps_) a = cplx(g(rng), g(rng));
    s.normalize();
    return s;
}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_sq(amps_)); }

void StateVector::normalize() {
    double nrm = norm();
    if (nrm == 0) throw std::domain_error("cannot normalize the zero vector");
    for (auto &a : amps_) a /= nrm;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
}

void StateVector::check_operator(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("operator on " + std::to_string(p.num_qubits()) + " qubits applied to " +
                                    std::to_string(n_) + "-qubit state");
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    check_operator(p);
    kernels::omp::apply_pauli(amps_, p);
}

void StateVector::apply_pauli_rotation(const PauliString &p, double theta) {
    check_operator(p);
    if (!p.is_hermitian()) throw std::invalid_argument("rotation generator must be Hermitian: " + p.to_string());
    kernels::omp::apply_pauli_rotation(amps_, p, theta);
}

void StateVector::apply_projector(const PauliString &c) {
    check_operator(c);
    if (!c.is_hermitian()) throw std::invalid_argument("projector constraint must be Hermitian");
    kernels::omp::apply_projector(amps_, c);
}

void StateVector::apply_1q(int q, const Mat2 &m) {
    check_qubit(q);
    kernels::omp::apply_1q(amps_, q, m.data());
}

Mat2 clifford_matrix(Clifford1Q which) {
    const double r = 1 / std::sqrt(2.0);
    const cplx i(0, 1);
    switch (which) {
        case Clifford1Q::H: return {r, r, r, -r};
        case Clifford1Q::S: return {1, 0, 0, i};
        case Clifford1Q::Sdg: return {1, 0, 0, -i};
        case Clifford1Q::X: return {0, 1, 1, 0};
        case Clifford1Q::Y: return {0, -i, i, 0};
        case Clifford1Q::Z: return {1, 0, 0, -1};
        case Clifford1Q::HS: return {r, r * i, r, -r * i};  // H * S
    }
    throw std::invalid_argument("unknown Clifford tag");
}

void StateVector::apply_clifford_1q(int q, Clifford1Q which) { apply_1q(q, clifford_matrix(which)); }

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    kernels::omp::apply_cnot(amps_, control, target);
}

void StateVector::apply_2q(int q0, int q1, const Mat4 &m) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) throw std::invalid_argument("two-qubit gate on a single qubit");
    kernels::omp::apply_2q(amps_, q0, q1, m.data());
}

cplx StateVector::expectation_complex(const PauliString &p) const {
    check_operator(p);
    return kernels::omp::expectation(amps_, p);
}

double StateVector::expectation(const PauliString &p) const {
    if (!p.is_hermitian()) throw std::invalid_argument("expectation needs a Hermitian operator");
    cplx v = expectation_complex(p);
    if (std::abs(v.imag()) > 1e-10) {
        throw std::logic_error("expectation of Hermitian operator has imaginary part " + std::to_string(v.imag()));
    }
    return v.real();
}

uint64_t StateVector::sample(std::mt19937_64 &rng) const {
    double u = uniform01(rng);
    double acc = 0;
    uint64_t last_nonzero = 0;
    for (uint64_t k = 0; k < amps_.size(); ++k) {
        double pk = std::norm(amps_[k]);
        if (pk == 0) continue;
        acc += pk;
        last_nonzero = k;
        if (u < acc) return k;
    }
    return last_nonzero;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (size_t k = 0; k < amps_.size(); ++k) out[k] = std::norm(amps_[k]);
    return out;
}

StateVector StateVector::with_ancilla() const {
    StateVector s(n_ + 1);
    std::copy(amps_.begin(), amps_.end(), s.amps_.begin());
    return s;
}

void StateVector::save(const std::string &path) const {
    static_assert(std::endian::native == std::endian::little, "amplitude dumps assume a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char *>(amps_.data()), static_cast<std::streamsize>(amps_.size() * sizeof(cplx)));
}

StateVector StateVector::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto bytes = static_cast<size_t>(in.tellg());
    size_t count = bytes / sizeof(cplx);
    if (count == 0 || bytes % sizeof(cplx) != 0 || !std::has_single_bit(count)) {
        throw std::runtime_error(path + " is not an amplitude dump");
    }
    std::vector<cplx> amps(count);
    in.seekg(0);
    in.read(reinterpret_cast<char *>(amps.data()), static_cast<std::streamsize>(bytes));
    return from_amplitudes(std::countr_zero(count), std::move(amps));
}

}  // namespace lgts
