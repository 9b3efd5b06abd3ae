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

#include "lgts/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgts/random.hpp"

namespace lgts {

namespace {

uint64_t mask_of(const std::vector<int> &qubits) {
    uint64_t m = 0;
    for (int q : qubits) m |= uint64_t{1} << q;
    return m;
}

}  // namespace

HamiltonianSpec lgt_hamiltonian(const Lattice &lat, double g) {
    HamiltonianSpec h;
    h.side = Side::LGT;
    h.g = g;
    h.num_qubits = lat.n_links();
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        h.terms.push_back({-1.0, PauliString::z_string(h.num_qubits, lat.plaquette_mask(p))});
    }
    for (int l = 0; l < lat.n_links(); ++l) h.terms.push_back({-g, PauliString::single(h.num_qubits, l, 'X')});
    return h;
}

HamiltonianSpec ising_hamiltonian(const Lattice &lat, double g) {
    HamiltonianSpec h;
    h.side = Side::Ising;
    h.g = g;
    const int V = lat.n_plaquettes();
    const int px = lat.plaquette_nx(), py = lat.plaquette_ny();
    h.num_qubits = V;
    auto xx = [&](int a, int b) {
        return PauliString::x_string(V, (uint64_t{1} << a) ^ (uint64_t{1} << b));
    };
    for (int p = 0; p < V; ++p) h.terms.push_back({-1.0, PauliString::single(V, p, 'Z')});
    for (int y = 0; y < py; ++y) {
        for (int x = 0; x < px; ++x) {
            int p = y * px + x;
            if (lat.periodic()) {
                // X_p X_{p - x} + X_p X_{p - y}; on width-2 rings both neighbours coincide.
                h.terms.push_back({-g, xx(p, y * px + (x + px - 1) % px)});
                h.terms.push_back({-g, xx(p, ((y + py - 1) % py) * px + x)});
                continue;
            }
            if (x > 0) h.terms.push_back({-g, xx(p, p - 1)});
            if (y > 0) h.terms.push_back({-g, xx(p, p - px)});
            // One single-X term per boundary link bordering p.
            int exposed = (x == 0) + (x == px - 1) + (y == 0) + (y == py - 1);
            for (int k = 0; k < exposed; ++k) h.terms.push_back({-g, PauliString::single(V, p, 'X')});
        }
    }
    return h;
}

std::vector<PauliString> gauss_operators(const Lattice &lat) {
    std::vector<PauliString> out;
    for (int s = 0; s < lat.n_sites(); ++s) {
        out.push_back(PauliString::x_string(lat.n_links(), mask_of(lat.gauss_links(s))));
    }
    return out;
}

std::vector<PauliString> superselection_operators(const Lattice &lat) {
    if (!lat.periodic()) return {};
    return {PauliString::x_string(lat.n_links(), mask_of(lat.superselection_links(Dir::kX))),
            PauliString::x_string(lat.n_links(), mask_of(lat.superselection_links(Dir::kY)))};
}

std::vector<PauliString> lgt_sector(const Lattice &lat) {
    auto out = gauss_operators(lat);
    for (auto &v : superselection_operators(lat)) out.push_back(v);
    return out;
}

std::vector<PauliString> ising_sector(const Lattice &lat) {
    if (!lat.periodic()) return {};
    const int V = lat.n_plaquettes();
    uint64_t all = V == 64 ? ~uint64_t{0} : (uint64_t{1} << V) - 1;
    return {PauliString::z_string(V, all)};
}

void apply_hamiltonian(const HamiltonianSpec &h, std::span<const cplx> in, std::span<cplx> out) {
    std::fill(out.begin(), out.end(), cplx(0, 0));
    for (const auto &t : h.terms) kernels::omp::accumulate_pauli(in, out, t.op, t.coeff);
}

double energy(const HamiltonianSpec &h, const StateVector &psi) {
    std::vector<cplx> hpsi(psi.size());
    apply_hamiltonian(h, psi.amplitudes(), hpsi);
    return kernels::omp::inner(psi.amplitudes(), hpsi).real();
}

double energy_variance(const HamiltonianSpec &h, const StateVector &psi) {
    std::vector<cplx> hpsi(psi.size());
    apply_hamiltonian(h, psi.amplitudes(), hpsi);
    double e = kernels::omp::inner(psi.amplitudes(), hpsi).real();
    double e2 = kernels::omp::norm_sq(hpsi);
    return e2 - e * e;
}

namespace {

using Vec = std::vector<cplx>;

void project(const std::vector<PauliString> &sector, std::span<cplx> v) {
    for (const auto &c : sector) kernels::omp::apply_projector(v, c);
}

void axpy(cplx a, const Vec &x, Vec &y) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

void scale(Vec &v, double s) {
    for (auto &a : v) a *= s;
}

}  // namespace

GroundState ground_state(const HamiltonianSpec &h, std::span<const PauliString> sector_in,
                         const GroundStateOptions &opts) {
    const int n = h.num_qubits;
    if (n > opts.max_qubits) {
        throw std::length_error("system of " + std::to_string(n) + " qubits exceeds the statevector cap of " +
                                std::to_string(opts.max_qubits));
    }
    std::vector<PauliString> sector(sector_in.begin(), sector_in.end());
    for (size_t a = 0; a < sector.size(); ++a) {
        if (sector[a].num_qubits() != n) throw std::invalid_argument("sector constraint has wrong qubit count");
        if (!sector[a].is_hermitian()) throw std::invalid_argument("sector constraint must be Hermitian");
        for (size_t b = a + 1; b < sector.size(); ++b) {
            if (!sector[a].commutes(sector[b])) {
                throw std::invalid_argument("sector constraints do not commute: " + sector[a].to_string() + " vs " +
                                            sector[b].to_string());
            }
        }
    }

    const size_t dim = size_t{1} << n;
    Rng rng(opts.seed);
    std::normal_distribution<double> gauss;
    Vec x(dim);
    for (auto &a : x) a = cplx(gauss(rng), gauss(rng));
    project(sector, x);
    double nrm = std::sqrt(kernels::omp::norm_sq(x));
    if (nrm < 1e-8 * std::sqrt(static_cast<double>(dim))) throw std::domain_error("empty sector");
    scale(x, 1 / nrm);

    const size_t budget = size_t{1} << 27;
    const int m_max = static_cast<int>(std::clamp<size_t>(budget / dim, 4, static_cast<size_t>(opts.krylov_dim)));

    GroundState out;
    Vec w(dim), hx(dim);
    std::vector<Vec> basis;
    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        basis.clear();
        basis.push_back(x);
        std::vector<double> alpha, beta;
        for (int k = 0; k < m_max; ++k) {
            apply_hamiltonian(h, basis[k], w);
            project(sector, w);
            double a = kernels::omp::inner(basis[k], w).real();
            alpha.push_back(a);
            // Full reorthogonalization, twice.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &v : basis) axpy(-kernels::omp::inner(v, w), v, w);
            }
            double b = std::sqrt(kernels::omp::norm_sq(w));
            if (k + 1 == m_max || b < 1e-12 * std::max(1.0, std::abs(a))) break;
            beta.push_back(b);
            scale(w, 1 / b);
            basis.push_back(w);
        }
        const int m = static_cast<int>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                    : Eigen::VectorXd(0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
        eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        Eigen::VectorXd y = eig.eigenvectors().col(0);
        std::fill(x.begin(), x.end(), cplx(0, 0));
        for (int k = 0; k < m; ++k) axpy(y(k), basis[k], x);
        project(sector, x);
        scale(x, 1 / std::sqrt(kernels::omp::norm_sq(x)));

        apply_hamiltonian(h, x, hx);
        double e = kernels::omp::inner(x, hx).real();
        axpy(-e, x, hx);
        double res = std::sqrt(kernels::omp::norm_sq(hx));
        out.energy = e;
        out.residual = res;
        out.restarts = restart;
        if (res < opts.tolerance) {
            out.state = StateVector::from_amplitudes(n, std::move(x));
            return out;
        }
    }
    throw std::runtime_error("ground state did not converge (residual " + std::to_string(out.residual) + ")");
}

}  // namespace lgts
