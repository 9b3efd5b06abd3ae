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

#include "lgts/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace lgts {

namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

std::string to_string(Boundary bc) { return bc == Boundary::PBC ? "pbc" : "fbc"; }

Boundary parse_boundary(const std::string &text) {
    if (text == "pbc" || text == "PBC") return Boundary::PBC;
    if (text == "fbc" || text == "FBC") return Boundary::FBC;
    throw std::invalid_argument("unknown boundary condition '" + text + "'");
}

Lattice::Lattice(int nx, int ny, Boundary bc) : nx_(nx), ny_(ny), bc_(bc) {
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("lattice needs nx >= 2 and ny >= 2, got " + std::to_string(nx) +
                                    "x" + std::to_string(ny));
    }
    px_ = periodic() ? nx : nx - 1;
    py_ = periodic() ? ny : ny - 1;
    link_index_.assign(2 * static_cast<size_t>(nx * ny), -1);
    for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
            for (int d = 0; d < 2; ++d) {
                bool exists = periodic() || (d == 0 ? x < nx - 1 : y < ny - 1);
                if (!exists) continue;
                LinkInfo info;
                info.x = x;
                info.y = y;
                info.dir = static_cast<Dir>(d);
                link_index_[2 * site_id(x, y) + d] = static_cast<int>(links_.size());
                links_.push_back(info);
            }
        }
    }
    for (auto &info : links_) {
        // h(x, y) separates (x, y - 1) | (x, y); v(x, y) separates (x - 1, y) | (x, y).
        int a = info.dir == Dir::kX ? plaquette_id(info.x, info.y - 1) : plaquette_id(info.x - 1, info.y);
        int b = plaquette_id(info.x, info.y);
        if (a < 0) std::swap(a, b);
        if (b >= 0 && b < a) std::swap(a, b);
        info.plaquettes = {a, b};
    }
}

int Lattice::site_id(int x, int y) const {
    if (periodic()) {
        x = wrap(x, nx_);
        y = wrap(y, ny_);
    } else if (x < 0 || x >= nx_ || y < 0 || y >= ny_) {
        throw std::out_of_range("site (" + std::to_string(x) + "," + std::to_string(y) + ") outside lattice");
    }
    return y * nx_ + x;
}

std::pair<int, int> Lattice::site_coord(int s) const {
    if (s < 0 || s >= n_sites()) throw std::out_of_range("invalid site id " + std::to_string(s));
    return {s % nx_, s / nx_};
}

int Lattice::link_id(int x, int y, Dir d) const {
    if (periodic()) {
        x = wrap(x, nx_);
        y = wrap(y, ny_);
    } else if (x < 0 || x >= nx_ || y < 0 || y >= ny_) {
        return -1;
    }
    return link_index_[2 * (y * nx_ + x) + static_cast<int>(d)];
}

const LinkInfo &Lattice::link(int l) const {
    if (l < 0 || l >= n_links()) throw std::out_of_range("invalid link id " + std::to_string(l));
    return links_[l];
}

int Lattice::plaquette_id(int x, int y) const {
    if (periodic()) return wrap(y, py_) * px_ + wrap(x, px_);
    if (x < 0 || x >= px_ || y < 0 || y >= py_) return -1;
    return y * px_ + x;
}

std::pair<int, int> Lattice::plaquette_coord(int p) const {
    check_plaquette(p);
    return {p % px_, p / px_};
}

void Lattice::check_plaquette(int p) const {
    if (p < 0 || p >= n_plaquettes()) throw std::out_of_range("invalid plaquette id " + std::to_string(p));
}

std::array<int, 4> Lattice::plaquette_links(int p) const {
    auto [x, y] = plaquette_coord(p);
    return {link_id(x, y, Dir::kX), link_id(x + 1, y, Dir::kY), link_id(x, y + 1, Dir::kX),
            link_id(x, y, Dir::kY)};
}

std::vector<int> Lattice::gauss_links(int s) const {
    auto [x, y] = site_coord(s);
    std::vector<int> out;
    for (int l : {link_id(x, y, Dir::kX), link_id(x - 1, y, Dir::kX), link_id(x, y, Dir::kY),
                  link_id(x, y - 1, Dir::kY)}) {
        if (l >= 0) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Lattice::exterior_links(int p) const {
    std::vector<int> out;
    for (int l : plaquette_links(p)) {
        if (links_[l].plaquettes[1] < 0) out.push_back(l);
    }
    return out;
}

std::vector<DualStep> Lattice::dual_steps(int p) const {
    auto [x, y] = plaquette_coord(p);
    auto links = plaquette_links(p);
    return {{links[1], plaquette_id(x + 1, y)},
            {links[3], plaquette_id(x - 1, y)},
            {links[2], plaquette_id(x, y + 1)},
            {links[0], plaquette_id(x, y - 1)}};
}

std::vector<int> Lattice::superselection_links(Dir d) const {
    if (!periodic()) throw std::logic_error("superselection operators exist only under PBC");
    std::vector<int> out;
    if (d == Dir::kX) {
        for (int x = 0; x < nx_; ++x) out.push_back(link_id(x, 0, Dir::kY));
    } else {
        for (int y = 0; y < ny_; ++y) out.push_back(link_id(0, y, Dir::kX));
    }
    return out;
}

int Lattice::distance(int p, int q) const {
    auto [x0, y0] = plaquette_coord(p);
    auto [x1, y1] = plaquette_coord(q);
    if (!periodic()) return std::abs(x1 - x0) + std::abs(y1 - y0);
    int dx = wrap(x1 - x0, px_);
    int dy = wrap(y1 - y0, py_);
    return std::min(dx, px_ - dx) + std::min(dy, py_ - dy);
}

std::vector<int> Lattice::manhattan_route(int p, int q) const {
    auto [x0, y0] = plaquette_coord(p);
    auto [x1, y1] = plaquette_coord(q);
    auto steps_along = [&](int from, int to, int n) {
        if (!periodic()) return to - from;
        int d = wrap(to - from, n);
        return d <= n - d ? d : d - n;
    };
    int sx = steps_along(x0, x1, px_);
    int sy = steps_along(y0, y1, py_);
    std::vector<int> path;
    int cur = p;
    for (int k = 0; k < std::abs(sx); ++k) {
        auto st = dual_steps(cur)[sx > 0 ? 0 : 1];
        path.push_back(st.link);
        cur = st.to;
    }
    for (int k = 0; k < std::abs(sy); ++k) {
        auto st = dual_steps(cur)[sy > 0 ? 2 : 3];
        path.push_back(st.link);
        cur = st.to;
    }
    return path;
}

std::vector<int> Lattice::path_between(int p, int q) const {
    check_plaquette(p);
    check_plaquette(q);
    if (p == q) throw std::invalid_argument("path_between needs distinct plaquettes");
    if (p < q) return manhattan_route(p, q);
    auto path = manhattan_route(q, p);
    std::reverse(path.begin(), path.end());
    return path;
}

uint64_t Lattice::plaquette_mask(int p) const {
    if (n_links() > 64) throw std::length_error("bit masks support at most 64 links");
    uint64_t m = 0;
    for (int l : plaquette_links(p)) m |= uint64_t{1} << l;
    return m;
}

int PathAssignment::layer_of(int pair_index) const {
    for (size_t k = 0; k < layers.size(); ++k) {
        for (int i : layers[k]) {
            if (i == pair_index) return static_cast<int>(k);
        }
    }
    return -1;
}

namespace {

class Router {
   public:
    Router(const Lattice &lat, const RouteFilter *filter) : lat_(lat), filter_(filter) {}

    int distance(int p, int q) const {
        if (!filter_) return lat_.distance(p, q);
        return std::abs(filter_->local_x[p] - filter_->local_x[q]) +
               std::abs(filter_->local_y[p] - filter_->local_y[q]);
    }

    int order_key(int p) const {
        return filter_ ? filter_->local_y[p] * filter_->extent + filter_->local_x[p] : p;
    }

    std::vector<int> default_route(int p, int q) const {
        if (!filter_) return lat_.path_between(p, q);
        bool flip = order_key(q) < order_key(p);
        if (flip) std::swap(p, q);
        int sx = filter_->local_x[q] - filter_->local_x[p];
        int sy = filter_->local_y[q] - filter_->local_y[p];
        std::vector<int> path;
        int cur = p;
        for (int k = 0; k < std::abs(sx); ++k) {
            auto st = lat_.dual_steps(cur)[sx > 0 ? 0 : 1];
            path.push_back(st.link);
            cur = st.to;
        }
        for (int k = 0; k < std::abs(sy); ++k) {
            auto st = lat_.dual_steps(cur)[sy > 0 ? 2 : 3];
            path.push_back(st.link);
            cur = st.to;
        }
        if (flip) std::reverse(path.begin(), path.end());
        return path;
    }

    bool allowed(int from, int step_index, int to) const {
        if (to < 0) return false;
        if (!filter_) return true;
        if (filter_->region[from] != filter_->region[to]) return false;
        int dx = filter_->local_x[to] - filter_->local_x[from];
        int dy = filter_->local_y[to] - filter_->local_y[from];
        switch (step_index) {
            case 0: return dx == 1 && dy == 0;
            case 1: return dx == -1 && dy == 0;
            case 2: return dx == 0 && dy == 1;
            default: return dx == 0 && dy == -1;
        }
    }

    // Shortest dual path from p to q avoiding used links; false when none exists.
    bool bfs(int p, int q, const std::vector<char> &used, std::vector<int> &path) const {
        int n = lat_.n_plaquettes();
        std::vector<int> prev(n, -2), prev_link(n, -1);
        std::deque<int> queue{p};
        prev[p] = -1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            if (cur == q) break;
            auto steps = lat_.dual_steps(cur);
            for (int k = 0; k < 4; ++k) {
                const auto &st = steps[k];
                if (!allowed(cur, k, st.to) || used[st.link] || prev[st.to] != -2) continue;
                prev[st.to] = cur;
                prev_link[st.to] = st.link;
                queue.push_back(st.to);
            }
        }
        if (prev[q] == -2) return false;
        path.clear();
        for (int cur = q; cur != p; cur = prev[cur]) path.push_back(prev_link[cur]);
        std::reverse(path.begin(), path.end());
        return true;
    }

    bool route_ok(const std::vector<int> &path, const std::vector<char> &used) const {
        return std::none_of(path.begin(), path.end(), [&](int l) { return used[l] != 0; });
    }

   private:
    const Lattice &lat_;
    const RouteFilter *filter_;
};

Pairing normalized(const Pairing &pairing, int n_plaquettes) {
    std::vector<char> seen(n_plaquettes, 0);
    Pairing out;
    for (auto [a, b] : pairing) {
        if (a < 0 || b < 0 || a >= n_plaquettes || b >= n_plaquettes || a == b || seen[a] || seen[b]) {
            throw std::invalid_argument("pairing is not a perfect matching of the plaquettes");
        }
        seen[a] = seen[b] = 1;
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

}  // namespace

PathAssignment assign_paths(const Lattice &lat, const Pairing &pairing, const RouteFilter *filter) {
    Router router(lat, filter);
    PathAssignment out;
    out.pairs = normalized(pairing, lat.n_plaquettes());
    out.paths.resize(out.pairs.size());

    std::vector<int> order(out.pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int i) {
        auto [a, b] = out.pairs[i];
        int ka = router.order_key(a), kb = router.order_key(b);
        return std::make_tuple(router.distance(a, b), std::min(ka, kb), std::max(ka, kb), i);
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) { return key(i) < key(j); });

    std::vector<std::vector<char>> used;
    for (int i : order) {
        auto [a, b] = out.pairs[i];
        auto path = router.default_route(a, b);
        bool placed = false;
        for (size_t k = 0; k < used.size() && !placed; ++k) {
            if (router.route_ok(path, used[k])) {
                placed = true;
            } else {
                std::vector<int> detour;
                if (router.bfs(a, b, used[k], detour)) {
                    path = std::move(detour);
                    placed = true;
                }
            }
            if (placed) {
                for (int l : path) used[k][l] = 1;
                out.layers[k].push_back(i);
            }
        }
        if (!placed) {
            used.emplace_back(lat.n_links(), 0);
            for (int l : path) used.back()[l] = 1;
            out.layers.push_back({i});
        }
        out.paths[i] = std::move(path);
    }
    return out;
}

PathAssignment sequential_paths(const Lattice &lat, const Pairing &pairing) {
    PathAssignment out;
    out.pairs = normalized(pairing, lat.n_plaquettes());
    for (size_t i = 0; i < out.pairs.size(); ++i) {
        out.paths.push_back(lat.path_between(out.pairs[i].first, out.pairs[i].second));
        out.layers.push_back({static_cast<int>(i)});
    }
    return out;
}

RouteFilter Tiling::route_filter() const {
    RouteFilter f;
    f.region = patch_of;
    f.extent = L;
    f.local_x.resize(local_index.size());
    f.local_y.resize(local_index.size());
    for (size_t p = 0; p < local_index.size(); ++p) {
        f.local_x[p] = local_index[p] % L;
        f.local_y[p] = local_index[p] / L;
    }
    return f;
}

std::vector<Tiling> enumerate_tilings(const Lattice &lat, int L) {
    if (!lat.periodic()) throw std::invalid_argument("tilings are defined for periodic lattices only");
    if (L < 1 || lat.nx() % L != 0 || lat.ny() % L != 0) {
        throw std::invalid_argument("patch size " + std::to_string(L) + " does not divide " +
                                    std::to_string(lat.nx()) + "x" + std::to_string(lat.ny()));
    }
    int patches_x = lat.nx() / L;
    int n_patches = patches_x * (lat.ny() / L);
    std::vector<Tiling> out;
    for (int oy = 0; oy < L; ++oy) {
        for (int ox = 0; ox < L; ++ox) {
            Tiling t;
            t.L = L;
            t.ox = ox;
            t.oy = oy;
            t.patch_of.resize(lat.n_plaquettes());
            t.local_index.resize(lat.n_plaquettes());
            t.members.assign(n_patches, std::vector<int>(L * L, -1));
            for (int p = 0; p < lat.n_plaquettes(); ++p) {
                auto [x, y] = lat.plaquette_coord(p);
                int rx = wrap(x - ox, lat.nx());
                int ry = wrap(y - oy, lat.ny());
                int patch = (ry / L) * patches_x + rx / L;
                int local = (ry % L) * L + rx % L;
                t.patch_of[p] = patch;
                t.local_index[p] = local;
                t.members[patch][local] = p;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace lgts
