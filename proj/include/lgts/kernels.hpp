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

#include <complex>
#include <cstdint>
#include <span>

#include "lgts/pauli.hpp"

namespace lgts {

using cplx = std::complex<double>;

// Amplitude kernels. `serial` is the reference implementation; `omp` is the
// production path. Reductions in `omp` use a fixed block decomposition so that
// results do not depend on the thread count.
namespace kernels {

namespace serial {
void apply_pauli(std::span<cplx> psi, const PauliString &p);
void apply_pauli_rotation(std::span<cplx> psi, const PauliString &p, double theta);
void apply_projector(std::span<cplx> psi, const PauliString &c);
void apply_1q(std::span<cplx> psi, int q, const cplx m[4]);
void apply_cnot(std::span<cplx> psi, int control, int target);
// m is row-major 4x4 in the index b0 + 2*b1 with b0 on q0.
void apply_2q(std::span<cplx> psi, int q0, int q1, const cplx m[16]);
cplx expectation(std::span<const cplx> psi, const PauliString &p);
double norm_sq(std::span<const cplx> psi);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
// out += coeff * P psi
void accumulate_pauli(std::span<const cplx> psi, std::span<cplx> out, const PauliString &p, double coeff);
}  // namespace serial

namespace omp {
void apply_pauli(std::span<cplx> psi, const PauliString &p);
void apply_pauli_rotation(std::span<cplx> psi, const PauliString &p, double theta);
void apply_projector(std::span<cplx> psi, const PauliString &c);
void apply_1q(std::span<cplx> psi, int q, const cplx m[4]);
void apply_cnot(std::span<cplx> psi, int control, int target);
// m is row-major 4x4 in the index b0 + 2*b1 with b0 on q0.
void apply_2q(std::span<cplx> psi, int q0, int q1, const cplx m[16]);
cplx expectation(std::span<const cplx> psi, const PauliString &p);
double norm_sq(std::span<const cplx> psi);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
void accumulate_pauli(std::span<const cplx> psi, std::span<cplx> out, const PauliString &p, double coeff);
}  // namespace omp

}  // namespace kernels
}  // namespace lgts
