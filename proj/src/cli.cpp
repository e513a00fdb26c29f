// Copyright 2026 The nvcpf Authors
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


#include "nvcpf/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "nvcpf/analytic.hpp"
#include "nvcpf/config.hpp"
#include "nvcpf/csv.hpp"
#include "nvcpf/engine.hpp"
#include "nvcpf/errors.hpp"
#include "nvcpf/physical.hpp"
#include "nvcpf/version.hpp"

namespace nvcpf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fixed6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::string sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6e", x);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string base_name(const std::string &path) {
    const auto p = path.find_last_of('/');
    return p == std::string::npos ? path : path.substr(p + 1);
}

GateTarget parse_target(const std::string &s) { return s == "realized" ? GateTarget::realized : GateTarget::ideal; }

void add_config_metadata(ResultTable &table, const RunConfig &cfg) {
    for (auto &[k, v] : cfg.as_metadata()) table.metadata[k] = v;
}

int run_gate(double m, int k, std::ostream &out) {
    const GatePhases p = gate_phases(m, k);
    out << "m = " << format_exact(m) << "\n";
    out << "k = " << k << "\n";
    out << "alpha = " << fixed6(p.alpha.real()) << "\n";
    out << "beta = " << fixed6(p.beta) << "\n";
    out << "t0 = " << fixed6(p.t0) << " (1/G3)\n";
    const ComplexMatrix u = realized_gate(m, k);
    out << "realized_gate diagonal =";
    for (std::size_t i = 0; i < 8; ++i) out << " " << fixed6(u(i, i).real());
    out << "\n";
    return kExitOk;
}

int run_evolve(const std::string &config_path, const std::string &out_flag, std::ostream &out) {
    RunConfig cfg = parse_config(read_file(config_path));
    const std::string out_path = out_flag.empty() ? cfg.get_string("out_path") : out_flag;
    if (out_path.empty()) throw CLI::ValidationError("--out", "no output path (--out or out_path)");
    if (!out_flag.empty()) cfg.set("out_path", out_flag);

    const double m = cfg.get_double("m");
    NoiseParams noise{cfg.get_double("kappa_ratio"), cfg.get_double("gamma_eg_ratio"),
                      cfg.get_double("gamma_fg_ratio")};
    const auto grid = linspace(0.0, cfg.get_double("t_max"), static_cast<std::size_t>(cfg.get_int("grid_points")));
    const double dt = cfg.get_double("dt") > 0 ? cfg.get_double("dt") : default_dt(m);
    FidelityRunOptions opts;
    opts.target = parse_target(cfg.get_string("target"));
    opts.k = static_cast<int>(cfg.get_int("k_index"));
    opts.n_max = static_cast<int>(cfg.get_int("n_max"));

    ResultTable table = gate_fidelity_run(m, noise, grid, dt, opts);
    add_config_metadata(table, cfg);
    write_file(out_path, emit_csv(table));
    out << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
    return kExitOk;
}

int run_sweep(const std::string &panel_name, const std::string &out_path, const std::string &config_path,
              std::ostream &out) {
    const char panel = panel_name.at(0);
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config(read_file(config_path));
    cfg.set("panel", panel_name);
    cfg.set("out_path", out_path);

    const bool time_panel = panel == 'a' || panel == 'c';
    std::size_t points = 0;
    if (cfg.is_overridden("grid_points")) points = static_cast<std::size_t>(cfg.get_int("grid_points"));
    SweepSpec spec = panel_spec(panel, points);
    if (time_panel && cfg.is_overridden("t_max")) spec.grid = linspace(0.0, cfg.get_double("t_max"), spec.grid.size());
    if (cfg.is_overridden("m")) spec.m = cfg.get_double("m");
    if (cfg.is_overridden("kappa_ratio")) spec.noise.kappa = cfg.get_double("kappa_ratio");
    spec.noise.gamma_eg = cfg.get_double("gamma_eg_ratio");
    spec.noise.gamma_fg = cfg.get_double("gamma_fg_ratio");
    spec.dt = cfg.get_double("dt");
    spec.run.target = parse_target(cfg.get_string("target"));
    spec.run.k = static_cast<int>(cfg.get_int("k_index"));
    spec.run.n_max = static_cast<int>(cfg.get_int("n_max"));

    ResultTable table = sweep(spec);
    add_config_metadata(table, cfg);
    write_file(out_path, emit_csv(table));
    write_file(out_path + ".plot", plot_script(table, panel, base_name(out_path)));
    out << "wrote " << out_path << " and " << out_path << ".plot (" << table.rows.size() << " rows)\n";
    return kExitOk;
}

std::vector<double> parse_ratio_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !(v > 0)) {
            throw CLI::ValidationError("--delta-ratios", "bad ratio '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--delta-ratios", "empty list");
    return out;
}

int run_validate(const std::string &ratios, const std::string &out_path, double m, double t, double dt,
                 std::ostream &out) {
    const auto r = parse_ratio_list(ratios);
    ResultTable table = compare_full_effective(m, r, t, dt);
    write_file(out_path, emit_csv(table));
    for (const auto &row : table.rows) {
        out << "delta/G = " << format_csv_number(row[0]) << "  eps = " << sci(row[1])
            << "  E_pop_peak = " << sci(row[2]) << "  E_pop_mean = " << sci(row[3]) << "\n";
    }
    out << "wrote " << out_path << "\n";
    return kExitOk;
}

int run_params(const PhysicalInputs &in, double omega_max, double delta, double g3, std::ostream &out) {
    const PhysicalReport rep = derive_physical_params(in, omega_max, delta, g3);
    const PhysicalDerived &d = rep.derived;
    out << "V_a = " << sci(d.interaction_volume) << " m^3\n";
    out << "G_max = " << sci(d.g_max) << " rad/s (2pi x " << sci(d.g_max / kTwoPi) << " Hz)\n";
    out << "kappa = " << sci(d.kappa) << " rad/s (2pi x " << sci(d.kappa / kTwoPi) << " Hz)\n";
    out << "kappa_convention = " << rep.kappa_convention << "\n";
    out << "Gamma_eg = " << sci(d.gamma_eg_est) << " rad/s (2pi x " << sci(d.gamma_eg_est / kTwoPi) << " Hz)\n";
    out << "p_E = " << sci(d.excited_population) << "\n";
    out << "t0 = " << sci(d.gate_time) << " s\n";
    for (const auto &c : rep.comparisons) {
        char dev[32];
        std::snprintf(dev, sizeof(dev), "%+.2f%%", 100.0 * c.relative_deviation());
        out << "compare " << c.quantity << ": computed " << sci(c.computed) << " vs quoted " << sci(c.quoted)
            << " (" << dev << ") " << (c.agrees() ? "[agrees]" : "[DIFFERS]") << " " << c.note << "\n";
    }
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Three-qubit conditional phase flip gate simulator", "nvcpf"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    double gate_m = 0;
    int gate_k = 0;
    auto *gate = app.add_subcommand("gate", "Print alpha, beta, t0 and the realized gate diagonal");
    gate->add_option("--m", gate_m, "Coupling ratio m = G3/G1 (0 < m <= 1)")->required();
    gate->add_option("--k", gate_k, "Gate-time index k, t0 = (2k+1)pi/G3")->check(CLI::NonNegativeNumber);

    std::string evolve_config, evolve_out;
    auto *evolve = app.add_subcommand("evolve", "Fidelity versus time for one configuration");
    evolve->add_option("--config", evolve_config, "Config file (key = value lines)")->required();
    evolve->add_option("--out", evolve_out, "Output CSV path (default: out_path from the config)");

    std::string sweep_panel, sweep_out, sweep_config;
    auto *sweep_cmd = app.add_subcommand("sweep", "Reproduce one fidelity panel and a gnuplot script");
    sweep_cmd->add_option("--panel", sweep_panel, "Panel a, b, c or d")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path; the plot script goes to <out>.plot")->required();
    sweep_cmd->add_option("--config", sweep_config, "Config file with overrides");

    std::string ratios, validate_out;
    double validate_m = 0.1, validate_t = std::numbers::pi, validate_dt = 0.01;
    auto *validate = app.add_subcommand("validate", "Compare the full and effective models");
    validate->add_option("--delta-ratios", ratios, "Comma-separated Delta/G values")->required();
    validate->add_option("--out", validate_out, "Output CSV path")->required();
    validate->add_option("--m", validate_m, "Coupling ratio m")->capture_default_str();
    validate->add_option("--t", validate_t, "Evolution time in 1/G3")->capture_default_str();
    validate->add_option("--dt", validate_dt, "Sampling step for |E> statistics")->capture_default_str();

    PhysicalInputs phys = published_inputs();
    double omega_max = kTwoPi * 2.5e9, delta = kTwoPi * 25e9, g3 = kTwoPi * 55e6;
    auto *params = app.add_subcommand("params", "Derived physical parameters versus published values (SI)");
    params->add_option("--lambda", phys.wavelength, "Wavelength, m")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--gamma0", phys.gamma0, "Spontaneous decay rate, rad/s")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--vm", phys.mode_volume, "Mode volume, m^3")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--q", phys.quality, "Quality factor")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--omega-max", omega_max, "Laser Rabi frequency, rad/s")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--delta", delta, "Detuning, rad/s")->capture_default_str()->check(CLI::PositiveNumber);
    params->add_option("--g3", g3, "Effective coupling of site 3, rad/s")->capture_default_str()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gate) return run_gate(gate_m, gate_k, out);
        if (*evolve) return run_evolve(evolve_config, evolve_out, out);
        if (*sweep_cmd) return run_sweep(sweep_panel, sweep_out, sweep_config, out);
        if (*validate) return run_validate(ratios, validate_out, validate_m, validate_t, validate_dt, out);
        if (*params) return run_params(phys, omega_max, delta, g3, out);
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError &e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace nvcpf
