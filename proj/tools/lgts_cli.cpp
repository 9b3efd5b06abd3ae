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

// Experiment runner: lgts <run|scale-nu|scale-v|fbc|costs|exact> --config PATH [--seed N] [--out PATH] [--threads N]

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "lgts/harness.hpp"

namespace {

std::string slopes_path(const std::string &out) {
    const std::string ext = ".csv";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
        return out.substr(0, out.size() - ext.size()) + "_slopes.csv";
    }
    return out + "_slopes.csv";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symmetry-aware classical shadows for the Z2 lattice gauge theory"};
    app.require_subcommand(1);

    std::string config_path, out;
    std::optional<uint64_t> seed;
    int threads = 0;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"run", "estimates versus coupling for each protocol"},
        {"scale-nu", "average relative error versus shot count"},
        {"scale-v", "average relative error versus volume"},
        {"fbc", "fixed-boundary Global Dual Pairs demonstration"},
        {"costs", "circuit depth, classical cost and sample bounds"},
        {"exact", "exact diagonalization baseline"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "experiment config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "master seed (overrides the config)");
        sub->add_option("--out", out, "output CSV (overrides the config; default stdout)");
        sub->add_option("--threads", threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
    }
    CLI11_PARSE(app, argc, argv);

    try {
        lgts::ExperimentConfig cfg = lgts::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (!out.empty()) cfg.out = out;
        if (threads > 0) omp_set_num_threads(threads);

        const std::string cmd = app.get_subcommands().front()->get_name();
        lgts::CsvTable table, slopes;
        if (cmd == "run") table = lgts::run_experiment(cfg);
        else if (cmd == "scale-nu") table = lgts::run_scaling_nu(cfg, &slopes);
        else if (cmd == "scale-v") table = lgts::run_scaling_volume(cfg);
        else if (cmd == "fbc") table = lgts::run_fbc_demo(cfg);
        else if (cmd == "costs") table = lgts::report_costs(cfg);
        else table = lgts::run_exact(cfg);

        if (cfg.out.empty()) {
            std::cout << table.to_string();
            if (!slopes.header.empty()) std::cout << '\n' << slopes.to_string();
        } else {
            table.write(cfg.out);
            if (!slopes.header.empty()) slopes.write(slopes_path(cfg.out));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
