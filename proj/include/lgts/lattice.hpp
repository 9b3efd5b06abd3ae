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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lgts {

enum class Boundary { PBC, FBC };

std::string to_string(Boundary bc);
Boundary parse_boundary(const std::string &text);

// Link orientation: kX joins (x, y) to (x + 1, y), kY joins (x, y) to (x, y + 1).
enum class Dir : int { kX = 0, kY = 1 };

struct LinkInfo {
    int x = 0;
    int y = 0;
    Dir dir = Dir::kX;
    // Plaquettes bordering the link; plaquettes[1] is -1 for FBC boundary links.
    std::array<int, 2> plaquettes{-1, -1};
};

struct DualStep {
    int link;
    int to;  // neighbouring plaquette, or -1 when the step leaves the lattice
};

class Lattice {
   public:
    Lattice(int nx, int ny, Boundary bc);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    Boundary bc() const { return bc_; }
    bool periodic() const { return bc_ == Boundary::PBC; }

    int n_sites() const { return nx_ * ny_; }
    int n_links() const { return static_cast<int>(links_.size()); }
    int n_plaquettes() const { return px_ * py_; }
    // Plaquette grid extents (nx x ny under PBC, (nx-1) x (ny-1) under FBC).
    int plaquette_nx() const { return px_; }
    int plaquette_ny() const { return py_; }

    int site_id(int x, int y) const;
    std::pair<int, int> site_coord(int s) const;

    // Returns -1 when the link does not exist (FBC edges). Coordinates wrap under PBC.
    int link_id(int x, int y, Dir d) const;
    const LinkInfo &link(int l) const;

    // Returns -1 outside the plaquette grid under FBC. Coordinates wrap under PBC.
    int plaquette_id(int x, int y) const;
    std::pair<int, int> plaquette_coord(int p) const;

    // Bottom, right, top, left.
    std::array<int, 4> plaquette_links(int p) const;
    std::vector<int> gauss_links(int s) const;
    // Links of p that border no other plaquette (FBC only; empty under PBC).
    std::vector<int> exterior_links(int p) const;
    // Dual-lattice moves out of p in +x, -x, +y, -y order; FBC exterior moves have to = -1.
    std::vector<DualStep> dual_steps(int p) const;

    // Non-contractible cuts under PBC: kX -> P_x = {v(x, 0)}, kY -> P_y = {h(0, y)}.
    std::vector<int> superselection_links(Dir d) const;

    int distance(int p, int q) const;
    // Manhattan route, x first then y, shorter arm under PBC. Computed from the
    // smaller plaquette id so that path_between(q, p) is the reverse sequence.
    std::vector<int> path_between(int p, int q) const;

    uint64_t plaquette_mask(int p) const;

   private:
    void check_plaquette(int p) const;
    std::vector<int> manhattan_route(int p, int q) const;

    int nx_;
    int ny_;
    Boundary bc_;
    int px_;
    int py_;
    std::vector<LinkInfo> links_;
    std::vector<int> link_index_;  // (2 * site + dir) -> compact id or -1
};

using Pair = std::pair<int, int>;
using Pairing = std::vector<Pair>;

struct PathAssignment {
    std::vector<Pair> pairs;                 // normalized (first < second)
    std::vector<std::vector<int>> paths;     // paths[k] belongs to pairs[k]
    std::vector<std::vector<int>> layers;    // indices into pairs
    int layer_of(int pair_index) const;
};

// Optional plaquette constraint for routing: allowed(p, q) for a single dual move p -> q.
struct RouteFilter {
    std::vector<int> region;       // region id per plaquette, -1 disables filtering
    std::vector<int> local_x;      // coordinates within the region
    std::vector<int> local_y;
    int extent = 0;                // region side length
};

PathAssignment assign_paths(const Lattice &lat, const Pairing &pairing,
                            const RouteFilter *filter = nullptr);

// Sequential schedule: every pair in its own layer, default routes.
PathAssignment sequential_paths(const Lattice &lat, const Pairing &pairing);

struct Tiling {
    int L = 0;
    int ox = 0;
    int oy = 0;
    std::vector<int> patch_of;                 // plaquette -> patch id
    std::vector<int> local_index;              // plaquette -> ly * L + lx inside its patch
    std::vector<std::vector<int>> members;     // patch -> plaquettes ordered by local index
    RouteFilter route_filter() const;
};

std::vector<Tiling> enumerate_tilings(const Lattice &lat, int L);

}  // namespace lgts
