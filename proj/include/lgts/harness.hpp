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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgts/duality.hpp"
#include "lgts/estimator.hpp"
#include "lgts/lattice.hpp"
#include "lgts/observable.hpp"
#include "lgts/protocols.hpp"
#include "lgts/statevec.hpp"

namespace lgts {

inline constexpr int kConfigSchema = 1;

// Register on which the dual-side protocols are simulated. Product always runs on links.
enum class Backend { LGT, Ising };
std::string to_string(Backend b);
Backend parse_backend(const std::string &text);

struct LatticeShape {
    int nx = 0;
    int ny = 0;
    Boundary bc = Boundary::PBC;
    std::string label() const { return std::to_string(nx) + "x" + std::to_string(ny); }
};

struct ObservableEntry {
    std::string id;
    std::string text;
    std::string lattice;  // empty: every lattice, else "NXxNY"
};

struct ExperimentConfig {
    int schema = kConfigSchema;
    std::vector<LatticeShape> lattices;
    std::vector<double> g;
    std::vector<Protocol> protocols;
    std::vector<ObservableEntry> observables;
    std::vector<int> shots;
    int repetitions = 1;
    uint64_t seed = 1;
    int patch = 2;
    Aggregator aggregator = Aggregator::Mean;
    Backend backend = Backend::LGT;
    int reference_plaquette = 0;
    int lgt_ed_max_qubits = 20;
    int cost_samples = 16;
    double epsilon = 0.1;   // target additive error for sample_bound
    bool timing = false;
    std::string out;
};

// Key-value text: `key = value`, `#` comments, lists separated by commas.
ExperimentConfig parse_config(const std::string &text);
ExperimentConfig load_config(const std::string &path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string to_string() const;
    void write(const std::string &path) const;
};

/// Lattice, dualities and tilings shared by every experiment on one geometry.
class System {
   public:
    System(const LatticeShape &shape, int reference_plaquette = 0, int patch = 0);

    const LatticeShape &shape() const { return shape_; }
    const Lattice &lattice() const { return *lat_; }
    const DualityContext &duality() const { return *ctx_; }
    // Ancilla-extended duality (PBC with at most 63 links; null otherwise).
    const DualityContext *ancilla_duality() const { return actx_.get(); }
    const std::vector<Tiling> &tilings() const { return tilings_; }
    int patch() const { return patch_; }

    std::vector<Observable> observables(const std::vector<ObservableEntry> &entries) const;

   private:
    LatticeShape shape_;
    std::unique_ptr<Lattice> lat_;
    std::unique_ptr<DualityContext> ctx_;
    std::unique_ptr<DualityContext> actx_;
    std::vector<Tiling> tilings_;
    int patch_;
};

struct PreparedState {
    double g = 0;
    std::optional<StateVector> lgt;          // link register ground state
    std::optional<StateVector> lgt_ancilla;  // after the ancilla copy (PBC)
    StateVector ising;                       // plaquette register ground state
    double energy_lgt = 0;
    double energy_ising = 0;
};

// Ground states on both registers; the link register is skipped above `lgt_cap` qubits.
PreparedState prepare_ground_states(const System &sys, double g, int lgt_cap);

// nu shots with per-shot streams derive_seed(master, {stream, shot}).
std::vector<ShadowRecord> simulate_shots(const System &sys, const PreparedState &state, Protocol p, Backend backend,
                                         uint64_t master_seed, uint64_t stream, size_t nu);

// Per-shot estimator values; Local Dual Pairs keeps only the filtered tiling's shots.
std::vector<double> shot_values(const System &sys, Protocol p, const std::vector<ShadowRecord> &records,
                                const Observable &obs);

double exact_value(const PreparedState &state, const Observable &obs, Protocol p);

// Least-squares slope and intercept of log(y) against log(x).
std::pair<double, double> loglog_fit(const std::vector<double> &x, const std::vector<double> &y);

CsvTable run_experiment(const ExperimentConfig &cfg);
CsvTable run_scaling_nu(const ExperimentConfig &cfg, CsvTable *slopes = nullptr);
CsvTable run_scaling_volume(const ExperimentConfig &cfg);
CsvTable run_fbc_demo(const ExperimentConfig &cfg);
CsvTable report_costs(const ExperimentConfig &cfg);
CsvTable run_exact(const ExperimentConfig &cfg);

}  // namespace lgts
