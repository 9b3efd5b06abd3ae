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

#include "lgts/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lgts/circuit.hpp"
#include "lgts/hamiltonian.hpp"

namespace lgts {

std::string to_string(Backend b) { return b == Backend::LGT ? "lgt" : "ising"; }

Backend parse_backend(const std::string &text) {
    if (text == "lgt") return Backend::LGT;
    if (text == "ising") return Backend::Ising;
    throw std::invalid_argument("unknown backend '" + text + "'");
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string trim(const std::string &s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

LatticeShape parse_shape(const std::string &text, Boundary bc) {
    int nx = 0, ny = 0;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> nx >> sep >> ny) || sep != 'x' || nx < 1 || ny < 1) {
        throw std::invalid_argument("lattice must look like NXxNY, got '" + text + "'");
    }
    return {nx, ny, bc};
}

int parse_int(const std::string &key, const std::string &v) {
    size_t used = 0;
    long long r = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(key + ": not an integer: '" + v + "'");
    return static_cast<int>(r);
}

double parse_double(const std::string &key, const std::string &v) {
    size_t used = 0;
    double r = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(key + ": not a number: '" + v + "'");
    return r;
}

bool parse_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument(key + ": expected true or false");
}

}  // namespace

ExperimentConfig parse_config(const std::string &text) {
    ExperimentConfig cfg;
    std::vector<std::string> shapes;
    Boundary bc = Boundary::PBC;
    bool have_schema = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "schema") {
                cfg.schema = parse_int(key, value);
                have_schema = true;
            } else if (key == "lattice" || key == "lattices") {
                shapes = split_list(value);
            } else if (key == "bc") {
                bc = parse_boundary(value);
            } else if (key == "g") {
                cfg.g.clear();
                for (const auto &v : split_list(value)) cfg.g.push_back(parse_double(key, v));
            } else if (key == "protocols") {
                cfg.protocols.clear();
                for (const auto &v : split_list(value)) cfg.protocols.push_back(parse_protocol(v));
            } else if (key == "shots") {
                cfg.shots.clear();
                for (const auto &v : split_list(value)) cfg.shots.push_back(parse_int(key, v));
            } else if (key == "repetitions") {
                cfg.repetitions = parse_int(key, value);
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "patch") {
                cfg.patch = parse_int(key, value);
            } else if (key == "aggregator") {
                cfg.aggregator = parse_aggregator(value);
            } else if (key == "backend") {
                cfg.backend = parse_backend(value);
            } else if (key == "reference_plaquette") {
                cfg.reference_plaquette = parse_int(key, value);
            } else if (key == "lgt_ed_max_qubits") {
                cfg.lgt_ed_max_qubits = parse_int(key, value);
            } else if (key == "cost_samples") {
                cfg.cost_samples = parse_int(key, value);
            } else if (key == "epsilon") {
                cfg.epsilon = parse_double(key, value);
            } else if (key == "timing") {
                cfg.timing = parse_bool(key, value);
            } else if (key == "out") {
                cfg.out = value;
            } else if (key.rfind("observable.", 0) == 0) {
                ObservableEntry e;
                e.id = key.substr(11);
                const size_t at = e.id.find('@');
                if (at != std::string::npos) {
                    e.lattice = e.id.substr(at + 1);
                    e.id = e.id.substr(0, at);
                }
                if (e.id.empty()) throw std::invalid_argument("observable needs an id");
                e.text = value;
                cfg.observables.push_back(e);
            } else {
                throw std::invalid_argument("unknown key");
            }
        } catch (const std::exception &ex) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + " (" + key + "): " + ex.what());
        }
    }
    if (!have_schema) throw std::invalid_argument("config is missing 'schema = " + std::to_string(kConfigSchema) + "'");
    if (cfg.schema != kConfigSchema) throw std::invalid_argument("unsupported config schema " + std::to_string(cfg.schema));
    for (const auto &s : shapes) cfg.lattices.push_back(parse_shape(s, bc));
    if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    for (int nu : cfg.shots) {
        if (nu < 1) throw std::invalid_argument("shots must be >= 1");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(double v) {
    if (!std::isfinite(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string CsvTable::to_string() const {
    std::string out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (size_t k = 0; k < cells.size(); ++k) {
            if (k) out += ',';
            out += csv_escape(cells[k]);
        }
        out += '\n';
    };
    line(header);
    for (const auto &r : rows) line(r);
    return out;
}

void CsvTable::write(const std::string &path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_string();
}

// ---------------------------------------------------------------------------
// Systems and states

System::System(const LatticeShape &shape, int reference_plaquette, int patch) : shape_(shape), patch_(patch) {
    lat_ = std::make_unique<Lattice>(shape.nx, shape.ny, shape.bc);
    DualityOptions opts;
    opts.reference_plaquette = reference_plaquette;
    ctx_ = std::make_unique<DualityContext>(*lat_, opts);
    if (lat_->periodic() && lat_->n_links() < PauliString::kMaxQubits) {
        opts.ancilla = true;
        actx_ = std::make_unique<DualityContext>(*lat_, opts);
    }
    if (patch > 0) tilings_ = enumerate_tilings(*lat_, patch);
}

std::vector<Observable> System::observables(const std::vector<ObservableEntry> &entries) const {
    std::vector<Observable> out;
    std::map<std::string, size_t> index;
    for (const auto &e : entries) {
        if (!e.lattice.empty() && e.lattice != shape_.label()) continue;
        Observable o = parse_observable(e.text, *ctx_, e.id);
        auto it = index.find(e.id);
        if (it == index.end()) {
            index[e.id] = out.size();
            out.push_back(std::move(o));
        } else if (!e.lattice.empty()) {
            out[it->second] = std::move(o);
        }
    }
    return out;
}

PreparedState prepare_ground_states(const System &sys, double g, int lgt_cap) {
    PreparedState st;
    st.g = g;
    const Lattice &lat = sys.lattice();
    auto ih = ising_hamiltonian(lat, g);
    auto isector = ising_sector(lat);
    GroundState igs = ground_state(ih, isector);
    st.ising = std::move(igs.state);
    st.energy_ising = igs.energy;
    if (lat.n_links() <= lgt_cap) {
        auto lh = lgt_hamiltonian(lat, g);
        auto lsector = lgt_sector(lat);
        GroundStateOptions opts;
        opts.max_qubits = std::max(opts.max_qubits, lat.n_links());
        GroundState lgs = ground_state(lh, lsector, opts);
        st.energy_lgt = lgs.energy;
        st.lgt = std::move(lgs.state);
        if (sys.ancilla_duality()) st.lgt_ancilla = prepare_ancilla_state(*sys.ancilla_duality(), *st.lgt);
    }
    return st;
}

std::vector<ShadowRecord> simulate_shots(const System &sys, const PreparedState &state, Protocol p, Backend backend,
                                         uint64_t master_seed, uint64_t stream, size_t nu) {
    const bool on_links = backend == Backend::LGT || p == Protocol::Product;
    if (on_links && !state.lgt) throw std::invalid_argument("link-register ground state exceeds the ED cap");
    if (p == Protocol::LocalPairs && sys.tilings().empty()) throw std::invalid_argument("Local Dual Pairs needs a patch size");
    if (p == Protocol::DualProduct && on_links && sys.lattice().periodic() && !state.lgt_ancilla) {
        throw std::invalid_argument("Dual Product needs the ancilla-extended state");
    }
    std::vector<ShadowRecord> records(nu);
    std::exception_ptr error;
    std::mutex error_lock;
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t k = 0; k < static_cast<int64_t>(nu); ++k) {
        try {
            Rng rng = make_rng(master_seed, {stream, static_cast<uint64_t>(k)});
            ShadowRecord r;
            const Lattice &lat = sys.lattice();
            switch (p) {
                case Protocol::GlobalPairs:
                    r = on_links ? run_shot_global(sys.duality(), *state.lgt, rng) : run_shot_global_dual(lat, state.ising, rng);
                    break;
                case Protocol::LocalPairs:
                    r = on_links ? run_shot_local(sys.duality(), *state.lgt, sys.tilings(), rng)
                                 : run_shot_local_dual(lat, state.ising, sys.tilings(), rng);
                    break;
                case Protocol::DualProduct:
                    if (!on_links) {
                        r = run_shot_dual_product_dual(state.ising, rng);
                    } else if (lat.periodic()) {
                        r = run_shot_dual_product(*sys.ancilla_duality(), *state.lgt_ancilla, rng);
                    } else {
                        r = run_shot_dual_product(sys.duality(), *state.lgt, rng);
                    }
                    break;
                case Protocol::Product: r = run_shot_product(*state.lgt, rng); break;
            }
            r.seed = master_seed;
            r.shot = static_cast<uint64_t>(k);
            records[k] = std::move(r);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_lock);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return records;
}

std::vector<double> shot_values(const System &sys, Protocol p, const std::vector<ShadowRecord> &records,
                                const Observable &obs) {
    std::vector<double> out;
    switch (p) {
        case Protocol::GlobalPairs: {
            const ChannelCoeff c = pairs_coeff(sys.lattice().n_plaquettes(), obs.ising, sys.lattice().bc());
            for (const auto &r : records) out.push_back(estimate_shot_dual_pairs(r, obs.ising, c));
            break;
        }
        case Protocol::LocalPairs: {
            const LocalSelection sel = filter_local(records, sys.tilings(), obs.ising.support());
            const ChannelCoeff c = local_pairs_coeff(sys.patch(), obs.ising);
            for (size_t k : sel.indices) out.push_back(estimate_shot_dual_pairs(records[k], obs.ising, c));
            break;
        }
        case Protocol::DualProduct:
            for (const auto &r : records) out.push_back(estimate_shot_product_type(r, obs.ising, Side::Ising));
            break;
        case Protocol::Product:
            for (const auto &r : records) out.push_back(estimate_shot_product_type(r, obs.lgt, Side::LGT));
            break;
    }
    return out;
}

double exact_value(const PreparedState &state, const Observable &obs, Protocol p) {
    if (p == Protocol::Product && !state.lgt) throw std::invalid_argument("no link-register ground state");
    return state.lgt ? state.lgt->expectation(obs.lgt) : state.ising.expectation(obs.ising);
}

std::pair<double, double> loglog_fit(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
        const double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

enum class Experiment : uint64_t { Run = 1, ScaleNu = 2, ScaleV = 3, Fbc = 4, Costs = 5, Exact = 6 };

const char *experiment_name(Experiment e) {
    switch (e) {
        case Experiment::Run: return "run";
        case Experiment::ScaleNu: return "scale-nu";
        case Experiment::ScaleV: return "scale-v";
        case Experiment::Fbc: return "fbc";
        case Experiment::Costs: return "costs";
        case Experiment::Exact: return "exact";
    }
    return "?";
}

uint64_t stream_key(Experiment e, size_t lattice, size_t g, Protocol p, int rep, int nu) {
    return derive_seed(static_cast<uint64_t>(e), {lattice, g, static_cast<uint64_t>(p), static_cast<uint64_t>(rep),
                                                  static_cast<uint64_t>(nu)});
}

const std::vector<std::string> kEstimateHeader = {
    "experiment", "lattice",   "bc",          "V",         "g",          "protocol",     "backend",
    "observable", "spec",      "k",           "k_dual",    "nu",         "repetitions",  "aggregator",
    "estimate",   "std_dev",   "std_error",   "exact_value", "exact_ising", "abs_error", "relative_error",
    "eps_avg",    "eps_std_error", "retained_shots", "flag"};

bool needs_patch(const ExperimentConfig &cfg) {
    return std::find(cfg.protocols.begin(), cfg.protocols.end(), Protocol::LocalPairs) != cfg.protocols.end();
}

int system_patch(const ExperimentConfig &cfg, const LatticeShape &shape) {
    return needs_patch(cfg) && shape.bc == Boundary::PBC ? cfg.patch : 0;
}

void require(const ExperimentConfig &cfg, bool need_shots) {
    if (cfg.lattices.empty()) throw std::invalid_argument("config lists no lattice");
    if (cfg.g.empty()) throw std::invalid_argument("config lists no coupling g");
    if (need_shots && cfg.shots.empty()) throw std::invalid_argument("config lists no shot count");
    if (need_shots && cfg.protocols.empty()) throw std::invalid_argument("config lists no protocol");
}

struct SeriesResult {
    double mean = 0;
    double std_dev = 0;
    double std_error = 0;
    double eps_avg = 0;
    double eps_std_error = 0;
    double retained = 0;
};

// M repetitions of nu shots for every observable; returns one result per observable.
std::vector<SeriesResult> run_series(const ExperimentConfig &cfg, Experiment ex, const System &sys,
                                     const PreparedState &st, const std::vector<Observable> &obs,
                                     const std::vector<double> &exact, Protocol p, size_t li, size_t gi, int nu, int M) {
    const Backend backend = p == Protocol::Product ? Backend::LGT : cfg.backend;
    std::vector<std::vector<double>> reps(obs.size());
    std::vector<double> within(obs.size()), retained(obs.size());
    for (int r = 0; r < M; ++r) {
        auto records = simulate_shots(sys, st, p, backend, cfg.seed, stream_key(ex, li, gi, p, r, nu), nu);
        for (size_t o = 0; o < obs.size(); ++o) {
            auto values = shot_values(sys, p, records, obs[o]);
            if (values.empty()) throw std::runtime_error("no shots retained for observable " + obs[o].id);
            Estimate e = aggregate(values, cfg.aggregator);
            reps[o].push_back(e.value);
            within[o] = e.std_error;
            retained[o] += static_cast<double>(values.size()) / M;
        }
    }
    std::vector<SeriesResult> out(obs.size());
    for (size_t o = 0; o < obs.size(); ++o) {
        SeriesResult &s = out[o];
        Estimate e = sample_mean(reps[o]);
        s.mean = e.value;
        if (M > 1) {
            s.std_error = e.std_error;
            s.std_dev = e.std_error * std::sqrt(static_cast<double>(M));
        } else {
            s.std_error = s.std_dev = within[o];
        }
        s.retained = retained[o];
        std::vector<double> eps;
        for (double v : reps[o]) eps.push_back(std::abs(v - exact[o]) / std::abs(exact[o]));
        Estimate ee = sample_mean(eps);
        s.eps_avg = ee.value;
        s.eps_std_error = M > 1 ? ee.std_error : within[o] / std::abs(exact[o]);
    }
    return out;
}

void estimate_rows(const ExperimentConfig &cfg, Experiment ex, const std::vector<int> &nus, int M, CsvTable &table) {
    for (size_t li = 0; li < cfg.lattices.size(); ++li) {
        const LatticeShape &shape = cfg.lattices[li];
        System sys(shape, cfg.reference_plaquette, system_patch(cfg, shape));
        const auto obs = sys.observables(cfg.observables);
        if (obs.empty()) throw std::invalid_argument("no observable applies to lattice " + shape.label());
        const int V = sys.lattice().n_plaquettes();
        for (size_t gi = 0; gi < cfg.g.size(); ++gi) {
            const PreparedState st = prepare_ground_states(sys, cfg.g[gi], cfg.lgt_ed_max_qubits);
            std::vector<double> exact, exact_ising;
            for (const auto &o : obs) {
                exact_ising.push_back(st.ising.expectation(o.ising));
                exact.push_back(st.lgt ? st.lgt->expectation(o.lgt) : exact_ising.back());
                if (std::abs(exact.back() - exact_ising.back()) > 1e-8) {
                    throw std::runtime_error("duality cross-check failed for " + o.id + " at g=" + num(cfg.g[gi]));
                }
            }
            for (Protocol p : cfg.protocols) {
                const Backend backend = p == Protocol::Product ? Backend::LGT : cfg.backend;
                const bool pairs = p == Protocol::GlobalPairs || p == Protocol::LocalPairs;
                for (int nu : nus) {
                    auto base_row = [&](const Observable &o) {
                        return std::vector<std::string>{experiment_name(ex), shape.label(), to_string(shape.bc),
                                                        std::to_string(V), num(cfg.g[gi]), to_string(p),
                                                        to_string(backend), o.id, o.spec,
                                                        std::to_string(o.lgt.weight()),
                                                        std::to_string(o.ising.weight()), std::to_string(nu),
                                                        std::to_string(M), to_string(cfg.aggregator)};
                    };
                    if (pairs && V % 2 != 0) {
                        for (const auto &o : obs) {
                            auto row = base_row(o);
                            row.resize(kEstimateHeader.size());
                            row.back() = "unavailable";
                            table.rows.push_back(row);
                        }
                        continue;
                    }
                    auto res = run_series(cfg, ex, sys, st, obs, exact, p, li, gi, nu, M);
                    for (size_t o = 0; o < obs.size(); ++o) {
                        auto row = base_row(obs[o]);
                        const bool zero = std::abs(exact[o]) < 1e-12;
                        const double abs_err = std::abs(res[o].mean - exact[o]);
                        row.insert(row.end(), {num(res[o].mean), num(res[o].std_dev), num(res[o].std_error),
                                               num(exact[o]), num(exact_ising[o]), num(abs_err),
                                               zero ? "" : num(abs_err / std::abs(exact[o])),
                                               zero ? "" : num(res[o].eps_avg),
                                               zero ? "" : num(res[o].eps_std_error), num(res[o].retained),
                                               zero ? "zero_exact" : ""});
                        table.rows.push_back(row);
                    }
                }
            }
        }
    }
}

}  // namespace

CsvTable run_experiment(const ExperimentConfig &cfg) {
    require(cfg, true);
    CsvTable t;
    t.header = kEstimateHeader;
    estimate_rows(cfg, Experiment::Run, {cfg.shots.front()}, cfg.repetitions, t);
    return t;
}

CsvTable run_scaling_nu(const ExperimentConfig &cfg, CsvTable *slopes) {
    require(cfg, true);
    CsvTable t;
    t.header = kEstimateHeader;
    estimate_rows(cfg, Experiment::ScaleNu, cfg.shots, cfg.repetitions, t);
    if (slopes) {
        slopes->header = {"experiment", "lattice", "bc", "V", "g", "protocol", "observable", "k_dual",
                          "nu_min", "nu_max", "points", "slope", "intercept"};
        slopes->rows.clear();
        std::map<std::vector<std::string>, std::pair<std::vector<double>, std::vector<double>>> series;
        std::vector<std::vector<std::string>> order;
        for (const auto &r : t.rows) {
            if (r[21].empty()) continue;
            std::vector<std::string> key = {r[1], r[2], r[3], r[4], r[5], r[7], r[10]};
            if (!series.count(key)) order.push_back(key);
            series[key].first.push_back(std::stod(r[11]));
            series[key].second.push_back(std::stod(r[21]));
        }
        for (const auto &key : order) {
            const auto &[x, y] = series[key];
            if (x.size() < 2) continue;
            auto [slope, intercept] = loglog_fit(x, y);
            slopes->rows.push_back({"scale-nu", key[0], key[1], key[2], key[3], key[4], key[5], key[6],
                                    num(*std::min_element(x.begin(), x.end())),
                                    num(*std::max_element(x.begin(), x.end())), std::to_string(x.size()), num(slope),
                                    num(intercept)});
        }
    }
    return t;
}

CsvTable run_scaling_volume(const ExperimentConfig &cfg) {
    require(cfg, true);
    CsvTable t;
    t.header = kEstimateHeader;
    estimate_rows(cfg, Experiment::ScaleV, {cfg.shots.front()}, cfg.repetitions, t);
    return t;
}

CsvTable run_fbc_demo(const ExperimentConfig &cfg) {
    require(cfg, true);
    for (const auto &s : cfg.lattices) {
        if (s.bc != Boundary::FBC) throw std::invalid_argument("fbc experiment needs bc = fbc");
    }
    CsvTable t;
    t.header = kEstimateHeader;
    estimate_rows(cfg, Experiment::Fbc, {cfg.shots.front()}, 1, t);
    return t;
}

CsvTable run_exact(const ExperimentConfig &cfg) {
    require(cfg, false);
    CsvTable t;
    t.header = {"experiment", "lattice", "bc", "V", "g", "observable", "spec", "k", "k_dual",
                "exact_lgt", "exact_ising", "energy_lgt", "energy_ising"};
    for (const auto &shape : cfg.lattices) {
        System sys(shape, cfg.reference_plaquette);
        const auto obs = sys.observables(cfg.observables);
        for (double g : cfg.g) {
            const PreparedState st = prepare_ground_states(sys, g, cfg.lgt_ed_max_qubits);
            for (const auto &o : obs) {
                t.rows.push_back({"exact", shape.label(), to_string(shape.bc),
                                  std::to_string(sys.lattice().n_plaquettes()), num(g), o.id, o.spec,
                                  std::to_string(o.lgt.weight()), std::to_string(o.ising.weight()),
                                  st.lgt ? num(st.lgt->expectation(o.lgt)) : "", num(st.ising.expectation(o.ising)),
                                  st.lgt ? num(st.energy_lgt) : "", num(st.energy_ising)});
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Costs

namespace {

struct DepthSample {
    double rotations = 0;
    double layers = 0;
    double cnot = 0;
    double cnot_max = 0;
    double sequential = 0;
    int max_weight = 0;
};

void add_circuit(DepthSample &d, const Circuit &scheduled, const Circuit &sequential) {
    d.rotations += static_cast<double>(scheduled.gates.size());
    d.layers += circuit_depth(scheduled, DepthMode::RotationLayers);
    const double cnot = circuit_depth(scheduled, DepthMode::CnotLadder);
    d.cnot += cnot;
    d.cnot_max = std::max(d.cnot_max, cnot);
    d.sequential += circuit_depth(sequential, DepthMode::CnotLadder);
    for (const auto &g : scheduled.gates) d.max_weight = std::max(d.max_weight, g.generator.weight());
}

Circuit serialized(Circuit c) {
    for (size_t k = 0; k < c.gates.size(); ++k) {
        c.gates[k].layer = static_cast<int>(k);
        c.gates[k].lane = 0;
    }
    c.num_layers = static_cast<int>(c.gates.size());
    return c;
}

const char *table_depth(Protocol p) {
    switch (p) {
        case Protocol::GlobalPairs: return "O(V^2)";
        case Protocol::LocalPairs: return "O(L^4)";
        case Protocol::DualProduct: return "O(V^2)";
        case Protocol::Product: return "1";
    }
    return "";
}

const char *table_classical(Protocol p) {
    switch (p) {
        case Protocol::GlobalPairs:
        case Protocol::LocalPairs: return "O(poly(V))";
        case Protocol::DualProduct: return "O(V)";
        case Protocol::Product: return "Theta(k)";
    }
    return "";
}

const char *table_samples(Protocol p) {
    switch (p) {
        case Protocol::GlobalPairs: return "O(poly(V)/eps^2)";
        case Protocol::LocalPairs: return "O(poly(L)/eps^2)";
        case Protocol::DualProduct: return "O(1/eps^2)";
        case Protocol::Product: return "O(4^k/eps^2)";
    }
    return "";
}

}  // namespace

CsvTable report_costs(const ExperimentConfig &cfg) {
    if (cfg.lattices.empty()) throw std::invalid_argument("config lists no lattice");
    if (cfg.protocols.empty()) throw std::invalid_argument("config lists no protocol");
    if (cfg.cost_samples < 1) throw std::invalid_argument("cost_samples must be >= 1");
    CsvTable t;
    t.header = {"experiment", "lattice", "bc", "V", "protocol", "observable", "k", "k_dual", "samples",
                "rotations_mean", "rotation_layers_mean", "cnot_depth_mean", "cnot_depth_max",
                "sequential_cnot_depth_mean", "max_generator_weight", "variance_bound", "sample_bound",
                "classical_us_per_shot", "table_depth", "table_classical", "table_samples"};
    for (size_t li = 0; li < cfg.lattices.size(); ++li) {
        const LatticeShape &shape = cfg.lattices[li];
        System sys(shape, cfg.reference_plaquette, system_patch(cfg, shape));
        const Lattice &lat = sys.lattice();
        const int V = lat.n_plaquettes();
        auto obs = sys.observables(cfg.observables);
        for (Protocol p : cfg.protocols) {
            if ((p == Protocol::GlobalPairs || p == Protocol::LocalPairs) && V % 2 != 0) continue;
            DepthSample d;
            std::vector<ShadowRecord> synthetic;
            if (p == Protocol::DualProduct && lat.periodic() && !sys.ancilla_duality()) {
                throw std::invalid_argument("dual_product needs a spare qubit for the ancilla on lattice " +
                                            shape.label());
            }
            const DualityContext &dp_ctx =
                lat.periodic() && sys.ancilla_duality() ? *sys.ancilla_duality() : sys.duality();
            for (int s = 0; s < cfg.cost_samples; ++s) {
                Rng rng = make_rng(cfg.seed, {stream_key(Experiment::Costs, li, 0, p, s, 0)});
                ShadowRecord rec;
                rec.protocol = p;
                switch (p) {
                    case Protocol::GlobalPairs:
                    case Protocol::LocalPairs: {
                        PairsRandomization r = p == Protocol::GlobalPairs
                                                   ? sample_global_randomization(lat, rng)
                                                   : sample_local_randomization(lat, sys.tilings(), rng);
                        RouteFilter filter;
                        if (p == Protocol::LocalPairs) filter = sys.tilings()[r.tiling].route_filter();
                        auto paths = assign_paths(lat, r.pairing, p == Protocol::LocalPairs ? &filter : nullptr);
                        Circuit c = lower_dual_pairs_circuit(sys.duality(), paths, r.unitaries);
                        add_circuit(d, c, serialized(c));
                        rec.pairing = r.pairing;
                        rec.unitaries = r.unitaries;
                        rec.tiling = r.tiling;
                        break;
                    }
                    case Protocol::DualProduct: {
                        rec.bases = sample_bases(V, rng);
                        Circuit c = dual_product_circuit(dp_ctx, rec.bases);
                        add_circuit(d, c, serialized(c));
                        break;
                    }
                    case Protocol::Product: {
                        rec.bases = sample_bases(lat.n_links(), rng);
                        Circuit c = product_circuit(lat.n_links(), rec.bases);
                        add_circuit(d, c, serialized(c));
                        break;
                    }
                }
                const int n_meas = p == Protocol::Product ? lat.n_links() : dp_ctx.num_lgt_qubits();
                rec.s = rng() & (n_meas >= 64 ? ~uint64_t{0} : (uint64_t{1} << n_meas) - 1);
                rec.s_bits = p == Protocol::GlobalPairs || p == Protocol::LocalPairs ? lat.n_links() : n_meas;
                rec.b_bits = V;
                synthetic.push_back(rec);
            }
            const double n = cfg.cost_samples;
            std::vector<const Observable *> targets;
            for (const auto &o : obs) targets.push_back(&o);
            if (targets.empty()) targets.push_back(nullptr);
            for (const Observable *o : targets) {
                std::string vb, sb, us;
                bool fits = true;
                if (o && p == Protocol::LocalPairs) {
                    try {
                        filter_local({}, sys.tilings(), o->ising.support());
                    } catch (const std::invalid_argument &) {
                        fits = false;
                    }
                }
                if (o && fits) {
                    const PauliString &s = p == Protocol::Product ? o->lgt : o->ising;
                    const double bound = variance_bound(p, s, lat, 1.0, sys.patch());
                    vb = num(bound);
                    sb = num(sample_bound(static_cast<int>(obs.size()), cfg.epsilon, bound));
                    if (cfg.timing) {
                        const auto t0 = std::chrono::steady_clock::now();
                        volatile double sink = 0;
                        for (auto rec : synthetic) {
                            if (p == Protocol::Product) {
                                sink = sink + estimate_shot_product_type(rec, o->lgt, Side::LGT);
                            } else {
                                const DualityContext &c = p == Protocol::DualProduct ? dp_ctx : sys.duality();
                                rec.b = c.map_bits(rec.s & ((uint64_t{1} << c.num_lgt_qubits()) - 1));
                                if (p == Protocol::DualProduct) {
                                    sink = sink + estimate_shot_product_type(rec, o->ising, Side::Ising);
                                } else if (p == Protocol::GlobalPairs) {
                                    sink = sink + estimate_shot_dual_pairs(rec, o->ising, pairs_coeff(V, o->ising, lat.bc()));
                                } else {
                                    sink = sink + estimate_shot_dual_pairs(rec, o->ising, local_pairs_coeff(sys.patch(), o->ising));
                                }
                            }
                        }
                        const auto t1 = std::chrono::steady_clock::now();
                        us = num(std::chrono::duration<double, std::micro>(t1 - t0).count() / n);
                    }
                }
                t.rows.push_back({"costs", shape.label(), to_string(shape.bc), std::to_string(V), to_string(p),
                                  o ? o->id : "", o ? std::to_string(o->lgt.weight()) : "",
                                  o ? std::to_string(o->ising.weight()) : "", std::to_string(cfg.cost_samples),
                                  num(d.rotations / n), num(d.layers / n), num(d.cnot / n), num(d.cnot_max),
                                  num(d.sequential / n), std::to_string(d.max_weight), vb, sb, us, table_depth(p),
                                  table_classical(p), table_samples(p)});
            }
        }
    }
    return t;
}

}  // namespace lgts
