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
#include <string>
#include <string_view>

namespace lgts {

struct PauliWeights {
    int i = 0;
    int x = 0;
    int y = 0;
    int z = 0;
    int xy() const { return x + y; }
    int k() const { return x + y + z; }
};

/// Phase-tracked Pauli string i^phase * (P_0 (x) P_1 (x) ...), with P_j fixed by
/// (x_j, z_j): (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. Supports up to 64 qubits.
class PauliString {
   public:
    static constexpr int kMaxQubits = 64;

    PauliString() = default;
    explicit PauliString(int n, uint64_t x = 0, uint64_t z = 0, int phase = 0);

    static PauliString identity(int n) { return PauliString(n); }
    static PauliString single(int n, int qubit, char op);
    static PauliString x_string(int n, uint64_t mask) { return PauliString(n, mask, 0); }
    static PauliString z_string(int n, uint64_t mask) { return PauliString(n, 0, mask); }
    // Parses "+1 X3 Z7", "-i Y0", "+1 I"; the phase tag is optional and defaults to +1.
    static PauliString parse(std::string_view text, int n);

    int num_qubits() const { return n_; }
    uint64_t x_bits() const { return x_; }
    uint64_t z_bits() const { return z_; }
    uint64_t support() const { return x_ | z_; }
    int phase() const { return phase_; }  // exponent of i, 0..3
    std::complex<double> phase_value() const;
    char at(int qubit) const;

    bool is_identity() const { return (x_ | z_) == 0; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    int weight() const { return std::popcount(x_ | z_); }
    PauliWeights weights() const;

    bool commutes(const PauliString &other) const;
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other) { return *this = *this * other; }
    PauliString with_phase(int phase) const { return PauliString(n_, x_, z_, phase); }
    PauliString negated() const { return with_phase(phase_ + 2); }
    // Restriction to a qubit subset, keeping the phase.
    PauliString restricted(uint64_t mask) const { return PauliString(n_, x_ & mask, z_ & mask, phase_); }

    bool operator==(const PauliString &o) const = default;

    std::string to_string() const;

   private:
    void check_same_size(const PauliString &other) const;

    int n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    int phase_ = 0;
};

inline PauliString mul(const PauliString &p, const PauliString &q) { return p * q; }
inline PauliWeights weights(const PauliString &p) { return p.weights(); }
inline bool commutes(const PauliString &p, const PauliString &q) { return p.commutes(q); }

}  // namespace lgts
