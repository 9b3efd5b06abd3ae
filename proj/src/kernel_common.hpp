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

#include <bit>
#include <complex>
#include <cstdint>

#include "lgts/pauli.hpp"

namespace lgts::kernels::detail {

// P|k> = base * (-1)^{|k & z|} |k ^ x> with base = i^(phase + |x & z|).
inline std::complex<double> pauli_base(const PauliString &p) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[(p.phase() + std::popcount(p.x_bits() & p.z_bits())) & 3];
}

inline double sign(uint64_t masked) { return (std::popcount(masked) & 1) ? -1.0 : 1.0; }

// Index with a zero inserted at bit position `bit`.
inline uint64_t insert_zero(uint64_t idx, int bit) {
    uint64_t low = idx & ((uint64_t{1} << bit) - 1);
    return ((idx >> bit) << (bit + 1)) | low;
}

}  // namespace lgts::kernels::detail
