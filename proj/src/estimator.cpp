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

#include "lgts/estimator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lgts/unitary.hpp"

namespace lgts {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

BigInt power(int base, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

BigInt pair_count(int m) {
    if (m < 0 || m % 2 != 0) return 0;
    BigInt r = 1;
    for (int k = m - 1; k > 1; k -= 2) r *= k;
    return r;
}

Rational coeff_f(int V, int w_xy) {
    if (V < 0 || V % 2 != 0) throw std::invalid_argument("coeff_f needs an even number of sites");
    if (w_xy < 0 || w_xy > V) throw std::invalid_argument("X/Y weight out of range");
    if (w_xy % 2 != 0) throw std::invalid_argument("odd X/Y weight is not parity-even");
    return Rational(pair_count(w_xy) * pair_count(V - w_xy), pair_count(V));
}

Rational coeff_alpha(int w_i, int w_z) {
    if (w_i < 0 || w_z < 0) throw std::invalid_argument("negative weight");
    if ((w_i + w_z) % 2 != 0) throw std::invalid_argument("w_I + w_Z must be even");
    Rational sum = 0;
    for (int m = w_z % 2; m <= std::min(w_i, w_z); m += 2) {
        BigInt count = binomial(w_z, m) * binomial(w_i, m) * factorial(m) * pair_count(w_z - m) * pair_count(w_i - m);
        sum += Rational(count, power(3, m));
    }
    return sum / Rational(pair_count(w_i + w_z));
}

Rational coeff_alpha_tilde(int V, int k_dual) {
    if (V < 0 || V % 2 != 0) throw std::invalid_argument("coeff_alpha_tilde needs an even number of sites");
    if (k_dual < 0 || k_dual > V) throw std::invalid_argument("weight out of range");
    Rational sum = 0;
    for (int m = 0; 2 * m <= k_dual; ++m) {
        const int singles = k_dual - 2 * m;
        const int rest = V - k_dual - singles;
        if (rest < 0) continue;
        BigInt count = binomial(k_dual, 2 * m) * pair_count(2 * m) * binomial(V - k_dual, singles) *
                       factorial(singles) * pair_count(rest);
        sum += Rational(count, power(5, k_dual - m));
    }
    return sum / Rational(pair_count(V));
}

ChannelCoeff pairs_coeff(int sites, const PauliString &s_dual, Boundary bc) {
    if (s_dual.num_qubits() != sites) throw std::invalid_argument("observable size differs from the dual register");
    const PauliWeights w = s_dual.weights();
    ChannelCoeff c;
    c.protocol = Protocol::GlobalPairs;
    c.bc = bc;
    c.sites = sites;
    if (bc == Boundary::FBC) {
        c.alpha = coeff_alpha_tilde(sites, w.k());
        c.c = c.alpha;
        return c;
    }
    if (w.xy() % 2 != 0) throw std::invalid_argument("parity-odd observable: " + s_dual.to_string());
    c.f = coeff_f(sites, w.xy());
    c.alpha = coeff_alpha(sites - w.xy() - w.z, w.z);
    c.power3 = w.xy() / 2;
    c.c = c.f * c.alpha / Rational(power(3, c.power3));
    return c;
}

ChannelCoeff local_pairs_coeff(int L, const PauliString &s_dual) {
    const int sites = L * L;
    const PauliWeights w = s_dual.weights();
    if (w.k() > sites) throw std::invalid_argument("observable is larger than a patch");
    if (w.xy() % 2 != 0) throw std::invalid_argument("parity-odd observable: " + s_dual.to_string());
    ChannelCoeff c;
    c.protocol = Protocol::LocalPairs;
    c.sites = sites;
    c.f = coeff_f(sites, w.xy());
    c.alpha = coeff_alpha(sites - w.xy() - w.z, w.z);
    c.power3 = w.xy() / 2;
    c.c = c.f * c.alpha / Rational(power(3, c.power3));
    return c;
}

ChannelCoeff product_coeff(Protocol p, const PauliString &s) {
    if (p != Protocol::DualProduct && p != Protocol::Product) throw std::invalid_argument("not a product-type protocol");
    ChannelCoeff c;
    c.protocol = p;
    c.sites = s.num_qubits();
    c.power3 = s.weight();
    c.c = Rational(1, power(3, c.power3));
    return c;
}

namespace {

double hermitian_sign(const PauliString &s) {
    if (!s.is_hermitian()) throw std::invalid_argument("observable must be Hermitian: " + s.to_string());
    return s.phase_value().real();
}

}  // namespace

double estimate_shot_dual_pairs(const ShadowRecord &record, const PauliString &s_dual, const ChannelCoeff &coeff) {
    if (record.protocol != Protocol::GlobalPairs && record.protocol != Protocol::LocalPairs) {
        throw std::invalid_argument("record is not from a dual-pairs protocol");
    }
    if (coeff.protocol != record.protocol) throw std::invalid_argument("coefficient was built for another protocol");
    if (s_dual.num_qubits() != record.b_bits) throw std::invalid_argument("observable size differs from the dual register");
    if (record.protocol == Protocol::GlobalPairs && coeff.sites != record.b_bits) {
        throw std::invalid_argument("coefficient/observable mismatch");
    }
    double value = hermitian_sign(s_dual);
    const uint64_t support = s_dual.support();
    for (size_t k = 0; k < record.pairing.size(); ++k) {
        const auto [i, j] = record.pairing[k];
        const uint64_t bi = uint64_t{1} << i, bj = uint64_t{1} << j;
        if (!(support & (bi | bj))) continue;
        const uint64_t x = ((s_dual.x_bits() >> i) & 1) | (((s_dual.x_bits() >> j) & 1) << 1);
        const uint64_t z = ((s_dual.z_bits() >> i) & 1) | (((s_dual.z_bits() >> j) & 1) << 1);
        // Parity blocks average an odd number of X/Y factors to zero.
        if (coeff.bc == Boundary::PBC && std::popcount(x) % 2 != 0) return 0.0;
        const Eigen::Matrix4cd &u = record.unitaries[k].matrix;
        const Eigen::Matrix4cd m = u * pauli_matrix_2q(PauliString(2, x, z)) * u.adjoint();
        const int bb = static_cast<int>(((record.b >> i) & 1) | (((record.b >> j) & 1) << 1));
        value *= m(bb, bb).real();
    }
    return value / coeff.value();
}

double estimate_shot_product_type(const ShadowRecord &record, const PauliString &s, Side side) {
    const bool ising = side == Side::Ising;
    if (ising && record.protocol != Protocol::DualProduct) throw std::invalid_argument("Ising side needs a Dual Product record");
    if (!ising && record.protocol != Protocol::Product) throw std::invalid_argument("LGT side needs a Product record");
    const uint64_t bits = ising ? record.b : record.s;
    const int n = ising ? record.b_bits : record.s_bits;
    if (s.num_qubits() != n || static_cast<int>(record.bases.size()) != n) {
        throw std::invalid_argument("observable size differs from the measured register");
    }
    double value = hermitian_sign(s);
    for (int q = 0; q < n; ++q) {
        const char op = s.at(q);
        if (op == 'I') continue;
        const Basis b = record.bases[q];
        if (op != "XYZ"[static_cast<int>(b)]) return 0.0;
        value *= 3.0 * basis_sign(b) * (((bits >> q) & 1) ? -1.0 : 1.0);
    }
    return value;
}

LocalSelection filter_local(std::span<const ShadowRecord> records, std::span<const Tiling> tilings, uint64_t support) {
    LocalSelection sel;
    for (size_t t = 0; t < tilings.size() && sel.tiling < 0; ++t) {
        int patch = -1;
        bool fits = true;
        for (uint64_t m = support; m && fits; m &= m - 1) {
            const int p = tilings[t].patch_of[std::countr_zero(m)];
            if (patch < 0) patch = p;
            fits = patch == p;
        }
        if (fits) {
            sel.tiling = static_cast<int>(t);
            sel.patch = std::max(patch, 0);
        }
    }
    if (sel.tiling < 0) throw std::invalid_argument("observable support fits no patch of any tiling");
    for (size_t k = 0; k < records.size(); ++k) {
        if (records[k].tiling == sel.tiling) sel.indices.push_back(k);
    }
    return sel;
}

Estimate median_of_means(std::span<const double> values, size_t n_blocks) {
    const size_t n = values.size();
    if (n == 0) throw std::invalid_argument("median_of_means needs at least one value");
    if (n_blocks == 0) n_blocks = static_cast<size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    n_blocks = std::clamp<size_t>(n_blocks, 1, n);
    Estimate e;
    e.n_shots = n;
    e.n_blocks = n_blocks;
    const size_t base = n / n_blocks, extra = n % n_blocks;
    size_t pos = 0;
    for (size_t b = 0; b < n_blocks; ++b) {
        const size_t len = base + (b < extra ? 1 : 0);
        double acc = 0;
        for (size_t k = 0; k < len; ++k) acc += values[pos + k];
        e.block_means.push_back(acc / static_cast<double>(len));
        pos += len;
    }
    std::vector<double> sorted = e.block_means;
    std::sort(sorted.begin(), sorted.end());
    const size_t mid = n_blocks / 2;
    e.value = n_blocks % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    if (n_blocks > 1) {
        const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n_blocks);
        double ss = 0;
        for (double v : sorted) ss += (v - mean) * (v - mean);
        e.std_error = std::sqrt(ss / static_cast<double>(n_blocks - 1) / static_cast<double>(n_blocks));
    }
    return e;
}

Estimate sample_mean(std::span<const double> values) {
    const size_t n = values.size();
    if (n == 0) throw std::invalid_argument("sample_mean needs at least one value");
    Estimate e;
    e.n_shots = n;
    e.n_blocks = 1;
    e.value = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0;
        for (double v : values) ss += (v - e.value) * (v - e.value);
        e.std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    e.block_means = {e.value};
    return e;
}

std::string to_string(Aggregator a) { return a == Aggregator::Mean ? "mean" : "median_of_means"; }

Aggregator parse_aggregator(const std::string &text) {
    if (text == "mean") return Aggregator::Mean;
    if (text == "median_of_means") return Aggregator::MedianOfMeans;
    throw std::invalid_argument("unknown aggregator '" + text + "'");
}

Estimate aggregate(std::span<const double> values, Aggregator a) {
    return a == Aggregator::Mean ? sample_mean(values) : median_of_means(values);
}

double variance_bound(Protocol p, const PauliString &s, const Lattice &lat, double op_norm, int L) {
    const double norm2 = op_norm * op_norm;
    switch (p) {
        case Protocol::GlobalPairs: return norm2 / pairs_coeff(lat.n_plaquettes(), s, lat.bc()).value();
        case Protocol::LocalPairs:
            if (L <= 0) throw std::invalid_argument("Local Dual Pairs bound needs the patch size");
            return norm2 / local_pairs_coeff(L, s).value();
        case Protocol::DualProduct:
        case Protocol::Product: return norm2 * std::pow(4.0, s.weight());
    }
    throw std::invalid_argument("unsupported protocol");
}

double sample_bound(int M, double eps, double max_var) {
    if (M < 1 || eps <= 0) throw std::invalid_argument("sample_bound needs M >= 1 and eps > 0");
    return std::log(2.0 * M) / (eps * eps) * max_var;
}

}  // namespace lgts
