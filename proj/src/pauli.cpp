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

#include "lgts/pauli.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lgts {

namespace {

uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

}  // namespace

PauliString::PauliString(int n, uint64_t x, uint64_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
    if (n < 0 || n > kMaxQubits) throw std::invalid_argument("PauliString supports 0..64 qubits");
    if (((x | z) & ~low_mask(n)) != 0) throw std::invalid_argument("PauliString bits exceed qubit count");
}

PauliString PauliString::single(int n, int qubit, char op) {
    if (qubit < 0 || qubit >= n) throw std::out_of_range("qubit index out of range");
    uint64_t b = uint64_t{1} << qubit;
    switch (op) {
        case 'I': return PauliString(n);
        case 'X': return PauliString(n, b, 0);
        case 'Y': return PauliString(n, b, b);
        case 'Z': return PauliString(n, 0, b);
        default: throw std::invalid_argument(std::string("unknown Pauli '") + op + "'");
    }
}

PauliString PauliString::parse(std::string_view text, int n) {
    std::istringstream in{std::string(text)};
    std::string tok;
    int phase = 0;
    uint64_t x = 0, z = 0;
    bool first = true;
    while (in >> tok) {
        if (first && (tok[0] == '+' || tok[0] == '-')) {
            first = false;
            if (tok == "+1" || tok == "+") phase = 0;
            else if (tok == "+i") phase = 1;
            else if (tok == "-1" || tok == "-") phase = 2;
            else if (tok == "-i") phase = 3;
            else throw std::invalid_argument("bad phase tag '" + tok + "'");
            continue;
        }
        first = false;
        char op = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        if (op == 'I' && tok.size() == 1) continue;
        size_t pos = 0;
        int q = -1;
        try {
            q = std::stoi(tok.substr(1), &pos);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad Pauli token '" + tok + "'");
        }
        if (pos + 1 != tok.size()) throw std::invalid_argument("bad Pauli token '" + tok + "'");
        if (q < 0 || q >= n) throw std::out_of_range("qubit " + std::to_string(q) + " out of range in '" + tok + "'");
        uint64_t b = uint64_t{1} << q;
        if ((x | z) & b) throw std::invalid_argument("qubit " + std::to_string(q) + " repeated");
        switch (op) {
            case 'X': x |= b; break;
            case 'Y': x |= b; z |= b; break;
            case 'Z': z |= b; break;
            case 'I': break;
            default: throw std::invalid_argument("bad Pauli token '" + tok + "'");
        }
    }
    return PauliString(n, x, z, phase);
}

std::complex<double> PauliString::phase_value() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_];
}

char PauliString::at(int qubit) const {
    if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index out of range");
    int xb = (x_ >> qubit) & 1, zb = (z_ >> qubit) & 1;
    return "IZXY"[2 * xb + zb];
}

PauliWeights PauliString::weights() const {
    PauliWeights w;
    w.y = std::popcount(x_ & z_);
    w.x = std::popcount(x_ & ~z_);
    w.z = std::popcount(z_ & ~x_);
    w.i = n_ - w.x - w.y - w.z;
    return w;
}

void PauliString::check_same_size(const PauliString &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("Pauli strings act on different qubit counts (" + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_) + ")");
    }
}

bool PauliString::commutes(const PauliString &other) const {
    check_same_size(other);
    return (std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1) == 0;
}

PauliString PauliString::operator*(const PauliString &other) const {
    check_same_size(other);
    // P = i^(p + |x&z|) X^x Z^z; reorder Z^z1 X^x2 = (-1)^|z1&x2| X^x2 Z^z1.
    uint64_t x = x_ ^ other.x_;
    uint64_t z = z_ ^ other.z_;
    int e = phase_ + other.phase_ + std::popcount(x_ & z_) + std::popcount(other.x_ & other.z_) +
            2 * std::popcount(z_ & other.x_) - std::popcount(x & z);
    return PauliString(n_, x, z, e);
}

std::string PauliString::to_string() const {
    static const char *tags[4] = {"+1", "+i", "-1", "-i"};
    std::string out = tags[phase_];
    if (is_identity()) return out + " I";
    for (int q = 0; q < n_; ++q) {
        char c = at(q);
        if (c != 'I') out += " " + std::string(1, c) + std::to_string(q);
    }
    return out;
}

}  // namespace lgts
