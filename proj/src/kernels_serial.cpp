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

// Straightforward per-index loops; kept as the oracle for the OpenMP kernels.

#include <bit>
#include <cmath>
#include <vector>

#include "kernel_common.hpp"
#include "lgts/kernels.hpp"

namespace lgts::kernels::serial {

void apply_pauli(std::span<cplx> psi, const PauliString &p) {
    const cplx base = detail::pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    std::vector<cplx> out(psi.size());
    for (uint64_t k = 0; k < psi.size(); ++k) out[k ^ x] = base * detail::sign(k & z) * psi[k];
    std::copy(out.begin(), out.end(), psi.begin());
}

void apply_pauli_rotation(std::span<cplx> psi, const PauliString &p, double theta) {
    const cplx base = detail::pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    std::vector<cplx> out(psi.size());
    for (uint64_t k = 0; k < psi.size(); ++k) {
        // (P psi)[k] = base * sign(k ^ x) * psi[k ^ x]
        out[k] = c * psi[k] + cplx(0, s) * base * detail::sign((k ^ x) & z) * psi[k ^ x];
    }
    std::copy(out.begin(), out.end(), psi.begin());
}

void apply_projector(std::span<cplx> psi, const PauliString &cstr) {
    const cplx base = detail::pauli_base(cstr);
    const uint64_t x = cstr.x_bits(), z = cstr.z_bits();
    std::vector<cplx> out(psi.size());
    for (uint64_t k = 0; k < psi.size(); ++k) {
        out[k] = 0.5 * (psi[k] + base * detail::sign((k ^ x) & z) * psi[k ^ x]);
    }
    std::copy(out.begin(), out.end(), psi.begin());
}

void apply_1q(std::span<cplx> psi, int q, const cplx m[4]) {
    const uint64_t b = uint64_t{1} << q;
    for (uint64_t k = 0; k < psi.size(); ++k) {
        if (k & b) continue;
        cplx a0 = psi[k], a1 = psi[k | b];
        psi[k] = m[0] * a0 + m[1] * a1;
        psi[k | b] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cnot(std::span<cplx> psi, int control, int target) {
    const uint64_t cb = uint64_t{1} << control, tb = uint64_t{1} << target;
    for (uint64_t k = 0; k < psi.size(); ++k) {
        if ((k & cb) && !(k & tb)) std::swap(psi[k], psi[k | tb]);
    }
}

void apply_2q(std::span<cplx> psi, int q0, int q1, const cplx m[16]) {
    const uint64_t b0 = uint64_t{1} << q0, b1 = uint64_t{1} << q1;
    for (uint64_t k = 0; k < psi.size(); ++k) {
        if (k & (b0 | b1)) continue;
        const uint64_t idx[4] = {k, k | b0, k | b1, k | b0 | b1};
        cplx in[4], out[4];
        for (int r = 0; r < 4; ++r) in[r] = psi[idx[r]];
        for (int r = 0; r < 4; ++r) {
            out[r] = 0;
            for (int c = 0; c < 4; ++c) out[r] += m[4 * r + c] * in[c];
        }
        for (int r = 0; r < 4; ++r) psi[idx[r]] = out[r];
    }
}

cplx expectation(std::span<const cplx> psi, const PauliString &p) {
    const cplx base = detail::pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    cplx acc = 0;
    for (uint64_t k = 0; k < psi.size(); ++k) acc += std::conj(psi[k ^ x]) * detail::sign(k & z) * psi[k];
    return base * acc;
}

double norm_sq(std::span<const cplx> psi) {
    double acc = 0;
    for (const auto &a : psi) acc += std::norm(a);
    return acc;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc = 0;
    for (size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

void accumulate_pauli(std::span<const cplx> psi, std::span<cplx> out, const PauliString &p, double coeff) {
    const cplx base = coeff * detail::pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    for (uint64_t k = 0; k < psi.size(); ++k) out[k ^ x] += base * detail::sign(k & z) * psi[k];
}

}  // namespace lgts::kernels::serial
