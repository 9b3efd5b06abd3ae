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

#include <doctest.h>
#include <omp.h>

#include "lgts/harness.hpp"

using namespace lgts;

namespace {

const char *kSmallConfig = R"(
schema = 1
lattice = 2x2
bc = pbc
g = 0.5, 1.5
protocols = global_pairs, local_pairs, dual_product, product
shots = 300
repetitions = 2
seed = 17
observable.w0 = loop: [0]
observable.w01 = loop: [0, 1]
observable.r = ribbon: (0, 3)
)";

}  // namespace

TEST_CASE("config parsing") {
    auto cfg = parse_config(kSmallConfig);
    CHECK(cfg.lattices.size() == 1);
    CHECK(cfg.lattices[0].label() == "2x2");
    CHECK(cfg.g == std::vector<double>{0.5, 1.5});
    CHECK(cfg.protocols.size() == 4);
    CHECK(cfg.shots == std::vector<int>{300});
    CHECK(cfg.repetitions == 2);
    CHECK(cfg.seed == 17);
    CHECK(cfg.observables.size() == 3);
    CHECK(cfg.observables[2].text == "ribbon: (0, 3)");

    auto over = parse_config("schema = 1\nlattices = 2x2, 4x2\nobservable.a = loop: [0]\nobservable.a@4x2 = loop: [5]\n");
    System small(over.lattices[0]), big(over.lattices[1]);
    CHECK(small.observables(over.observables)[0].spec == "loop: [0]");
    CHECK(big.observables(over.observables)[0].spec == "loop: [5]");
}

TEST_CASE("config errors name the offending line") {
    CHECK_THROWS_WITH(parse_config("schema = 1\nbogus = 3\n"), doctest::Contains("line 2"));
    CHECK_THROWS_WITH(parse_config("lattice = 2x2\n"), doctest::Contains("schema"));
    CHECK_THROWS(parse_config("schema = 2\n"));
    CHECK_THROWS(parse_config("schema = 1\nlattice = 2by2\n"));
    CHECK_THROWS(parse_config("schema = 1\nshots = 0\n"));
    CHECK_THROWS(parse_config("schema = 1\nprotocols = shadows\n"));
    CHECK_THROWS(parse_config("schema = 1\nno equals sign\n"));
}

TEST_CASE("CSV quoting") {
    CsvTable t;
    t.header = {"a", "b"};
    t.rows = {{"x,y", "say \"hi\""}};
    CHECK(t.to_string() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("log-log fit recovers a power law") {
    std::vector<double> x{10, 100, 1000}, y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -0.5));
    auto [slope, intercept] = loglog_fit(x, y);
    CHECK(slope == doctest::Approx(-0.5));
    CHECK(intercept == doctest::Approx(std::log(3.0)));
}

TEST_CASE("runs are reproducible and independent of the thread count") {
    auto cfg = parse_config(kSmallConfig);
    omp_set_num_threads(1);
    const std::string one = run_experiment(cfg).to_string();
    CHECK(run_experiment(cfg).to_string() == one);
    omp_set_num_threads(4);
    CHECK(run_experiment(cfg).to_string() == one);
    cfg.seed = 18;
    CHECK(run_experiment(cfg).to_string() != one);
}

TEST_CASE("estimate rows carry exact values and flags") {
    auto cfg = parse_config(kSmallConfig);
    auto t = run_experiment(cfg);
    CHECK(t.rows.size() == 2 * 4 * 3);
    for (const auto &r : t.rows) {
        CHECK(r.size() == t.header.size());
        CHECK(r[15] != "");
        CHECK(std::abs(std::stod(r[17]) - std::stod(r[18])) < 1e-8);
    }
}

TEST_CASE("odd plaquette counts mark the pairs protocols unavailable") {
    auto cfg = parse_config("schema = 1\nlattice = 4x4\nbc = fbc\nbackend = ising\ng = 1\nprotocols = global_pairs, dual_product\n"
                            "shots = 50\nobservable.w = loop: [0]\n");
    auto t = run_experiment(cfg);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].back() == "unavailable");
    CHECK(t.rows[1].back() == "");
}

TEST_CASE("exact and costs tables") {
    auto cfg = parse_config(kSmallConfig);
    auto ex = run_exact(cfg);
    CHECK(ex.rows.size() == 2 * 3);
    for (const auto &r : ex.rows) CHECK(std::abs(std::stod(r[9]) - std::stod(r[10])) < 1e-8);
    cfg.cost_samples = 4;
    auto costs = report_costs(cfg);
    CHECK(costs.rows.size() == 4 * 3);
    CHECK(report_costs(cfg).to_string() == costs.to_string());
    for (const auto &r : costs.rows) CHECK(r[17] == "");
}

TEST_CASE("costs leave the Local bound blank for observables wider than a patch") {
    auto cfg = parse_config("schema = 1\nlattice = 4x4\nbackend = ising\nprotocols = local_pairs\ncost_samples = 2\n"
                            "observable.small = loop: [0, 1]\nobservable.wide = ribbon: (0, 2)\n");
    auto t = report_costs(cfg);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][15] != "");
    CHECK(t.rows[1][15] == "");
}

TEST_CASE("CSV headers match the documented schema") {
    auto cfg = parse_config(kSmallConfig);
    cfg.g = {0.5};
    cfg.protocols = {Protocol::DualProduct};
    cfg.shots = {40, 80};
    const std::vector<std::string> estimate = {
        "experiment", "lattice", "bc", "V", "g", "protocol", "backend", "observable", "spec", "k", "k_dual", "nu",
        "repetitions", "aggregator", "estimate", "std_dev", "std_error", "exact_value", "exact_ising", "abs_error",
        "relative_error", "eps_avg", "eps_std_error", "retained_shots", "flag"};
    CHECK(run_experiment(cfg).header == estimate);
    CHECK(run_scaling_volume(cfg).header == estimate);
    CsvTable slopes;
    CHECK(run_scaling_nu(cfg, &slopes).header == estimate);
    CHECK(slopes.header == std::vector<std::string>{"experiment", "lattice", "bc", "V", "g", "protocol", "observable",
                                                    "k_dual", "nu_min", "nu_max", "points", "slope", "intercept"});
    CHECK(slopes.rows.size() == 3);
    CHECK(report_costs(cfg).header ==
          std::vector<std::string>{"experiment", "lattice", "bc", "V", "protocol", "observable", "k", "k_dual",
                                   "samples", "rotations_mean", "rotation_layers_mean", "cnot_depth_mean",
                                   "cnot_depth_max", "sequential_cnot_depth_mean", "max_generator_weight",
                                   "variance_bound", "sample_bound", "classical_us_per_shot", "table_depth",
                                   "table_classical", "table_samples"});
    CHECK(run_exact(cfg).header == std::vector<std::string>{"experiment", "lattice", "bc", "V", "g", "observable",
                                                            "spec", "k", "k_dual", "exact_lgt", "exact_ising",
                                                            "energy_lgt", "energy_ising"});
}

TEST_CASE("plotting columns are filled for regular rows") {
    auto cfg = parse_config(kSmallConfig);
    cfg.shots = {60, 120};
    CsvTable slopes;
    auto t = run_scaling_nu(cfg, &slopes);
    for (const auto &r : t.rows) {
        if (!r[24].empty()) continue;
        for (int c : {4, 11, 14, 15, 17, 21, 22}) CHECK(!r[c].empty());
        CHECK(std::stod(r[22]) >= 0);
    }
}

TEST_CASE("the ancilla duality is skipped when the link register is full") {
    System full({8, 4, Boundary::PBC});
    CHECK(full.ancilla_duality() == nullptr);
    System small({4, 2, Boundary::PBC});
    CHECK(small.ancilla_duality() != nullptr);
    auto cfg = parse_config("schema = 1\nlattice = 8x4\nprotocols = dual_product\ncost_samples = 1\n");
    CHECK_THROWS_WITH(report_costs(cfg), doctest::Contains("ancilla"));
}
