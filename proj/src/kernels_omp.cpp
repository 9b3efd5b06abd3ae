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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "kernel_common.hpp"
#include "lgts/kernels.hpp"

namespace lgts::kernels::omp {

namespace {

constexpr int64_t kParallelThreshold = 1 << 12;
constexpr int kReduceBlocks = 64;

using detail::insert_zero;
using detail::pauli_base;
using detail::sign;

int high_bit(uint64_t x) { return 63 - std::countl_zero(x); }

// Sums f(k) over [0, n) in kReduceBlocks fixed blocks, combined in block order.
template <class T, class F>
T blocked_sum(int64_t n, F f) {
    std::array<T, kReduceBlocks> partial{};
    const int64_t chunk = (n + kReduceBlocks - 1) / kReduceBlocks;
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int b = 0; b < kReduceBlocks; ++b) {
        T acc{};
        const int64_t lo = b * chunk, hi = std::min<int64_t>(n, lo + chunk);
        for (int64_t k = lo; k < hi; ++k) acc += f(static_cast<uint64_t>(k));
        partial[b] = acc;
    }
    T total{};
    for (const auto &v : partial) total += v;
    return total;
}

}  // namespace

void apply_pauli(std::span<cplx> psi, const PauliString &p) {
    const cplx base = pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    const int64_t n = static_cast<int64_t>(psi.size());
    if (x == 0) {
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
        for (int64_t k = 0; k < n; ++k) psi[k] *= base * sign(k & z);
        return;
    }
    const int hb = high_bit(x);
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 2; ++i) {
        uint64_t k = insert_zero(i, hb), kp = k ^ x;
        cplx a = psi[k], b = psi[kp];
        psi[k] = base * sign(kp & z) * b;
        psi[kp] = base * sign(k & z) * a;
    }
}

void apply_pauli_rotation(std::span<cplx> psi, const PauliString &p, double theta) {
    const cplx base = pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const cplx is_base = cplx(0, s) * base;
    const int64_t n = static_cast<int64_t>(psi.size());
    if (x == 0) {
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
        for (int64_t k = 0; k < n; ++k) psi[k] *= c + is_base * sign(k & z);
        return;
    }
    const int hb = high_bit(x);
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 2; ++i) {
        uint64_t k = insert_zero(i, hb), kp = k ^ x;
        cplx a = psi[k], b = psi[kp];
        psi[k] = c * a + is_base * sign(kp & z) * b;
        psi[kp] = c * b + is_base * sign(k & z) * a;
    }
}

void apply_projector(std::span<cplx> psi, const PauliString &cstr) {
    const cplx base = pauli_base(cstr);
    const uint64_t x = cstr.x_bits(), z = cstr.z_bits();
    const int64_t n = static_cast<int64_t>(psi.size());
    if (x == 0) {
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
        for (int64_t k = 0; k < n; ++k) psi[k] *= 0.5 * (1.0 + base * sign(k & z));
        return;
    }
    const int hb = high_bit(x);
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 2; ++i) {
        uint64_t k = insert_zero(i, hb), kp = k ^ x;
        cplx a = psi[k], b = psi[kp];
        psi[k] = 0.5 * (a + base * sign(kp & z) * b);
        psi[kp] = 0.5 * (b + base * sign(k & z) * a);
    }
}

void apply_1q(std::span<cplx> psi, int q, const cplx m[4]) {
    const uint64_t bit = uint64_t{1} << q;
    const int64_t n = static_cast<int64_t>(psi.size());
    const cplx m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3];
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 2; ++i) {
        uint64_t k = insert_zero(i, q);
        cplx a0 = psi[k], a1 = psi[k | bit];
        psi[k] = m0 * a0 + m1 * a1;
        psi[k | bit] = m2 * a0 + m3 * a1;
    }
}

void apply_cnot(std::span<cplx> psi, int control, int target) {
    const uint64_t cb = uint64_t{1} << control, tb = uint64_t{1} << target;
    const int64_t n = static_cast<int64_t>(psi.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 2; ++i) {
        uint64_t k = insert_zero(i, target);
        if (k & cb) std::swap(psi[k], psi[k | tb]);
    }
}

void apply_2q(std::span<cplx> psi, int q0, int q1, const cplx m[16]) {
    const uint64_t b0 = uint64_t{1} << q0, b1 = uint64_t{1} << q1;
    const int lo = std::min(q0, q1), hi = std::max(q0, q1);
    const int64_t n = static_cast<int64_t>(psi.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t i = 0; i < n / 4; ++i) {
        uint64_t k = insert_zero(insert_zero(i, lo), hi);
        const uint64_t idx[4] = {k, k | b0, k | b1, k | b0 | b1};
        cplx in[4];
        for (int r = 0; r < 4; ++r) in[r] = psi[idx[r]];
        for (int r = 0; r < 4; ++r) {
            psi[idx[r]] = m[4 * r] * in[0] + m[4 * r + 1] * in[1] + m[4 * r + 2] * in[2] + m[4 * r + 3] * in[3];
        }
    }
}

cplx expectation(std::span<const cplx> psi, const PauliString &p) {
    const cplx base = pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    cplx acc = blocked_sum<cplx>(static_cast<int64_t>(psi.size()), [&](uint64_t k) {
        return std::conj(psi[k ^ x]) * sign(k & z) * psi[k];
    });
    return base * acc;
}

double norm_sq(std::span<const cplx> psi) {
    return blocked_sum<double>(static_cast<int64_t>(psi.size()), [&](uint64_t k) { return std::norm(psi[k]); });
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    return blocked_sum<cplx>(static_cast<int64_t>(a.size()), [&](uint64_t k) { return std::conj(a[k]) * b[k]; });
}

void accumulate_pauli(std::span<const cplx> psi, std::span<cplx> out, const PauliString &p, double coeff) {
    const cplx base = coeff * pauli_base(p);
    const uint64_t x = p.x_bits(), z = p.z_bits();
    const int64_t n = static_cast<int64_t>(psi.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (int64_t j = 0; j < n; ++j) {
        uint64_t k = static_cast<uint64_t>(j) ^ x;
        out[j] += base * sign(k & z) * psi[k];
    }
}

}  // namespace lgts::kernels::omp
