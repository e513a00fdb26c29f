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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "nvcpf/analytic.hpp"
#include "nvcpf/engine.hpp"
#include "nvcpf/version.hpp"

namespace nvcpf {

namespace {

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Runs job(i) for i in [0, count) on up to `workers` threads. Each job writes
// only its own result slot, so output order never depends on scheduling.
template <typename Job>
void parallel_for(std::size_t count, unsigned workers, Job job) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::time:
            return "time";
        case SweepParameter::kappa_ratio:
            return "kappa_ratio";
        case SweepParameter::m:
            return "m";
    }
    return "?";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw ArgumentError("linspace: need at least one point");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = hi;
    return out;
}

void SweepSpec::validate() const {
    if (grid.empty()) throw ArgumentError("SweepSpec: grid must not be empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw ArgumentError("SweepSpec: grid must be strictly increasing");
    }
    noise.validate();
    if (panel < 'a' || panel > 'd') throw ArgumentError("SweepSpec: panel must be one of a, b, c, d");
    if (dt < 0) throw ArgumentError("SweepSpec: dt must be positive (or 0 for the default)");
    if (parameter == SweepParameter::time && grid.front() < 0) {
        throw ArgumentError("SweepSpec: times must be non-negative");
    }
    if (!family.empty() && family_parameter == SweepParameter::time) {
        throw ArgumentError("SweepSpec: a curve family cannot be indexed by time");
    }
    if (!family.empty() && family_parameter == parameter) {
        throw ArgumentError("SweepSpec: family parameter must differ from the swept parameter");
    }
}

SweepSpec panel_spec(char panel, std::size_t points) {
    SweepSpec s;
    s.panel = panel;
    s.noise = figure_noise(0.01);
    s.m = 0.1;
    const std::size_t time_points = points ? points : kDefaultTimePoints;
    const std::size_t scan_points = points ? points : kDefaultScanPoints;
    switch (panel) {
        case 'a':
            s.parameter = SweepParameter::time;
            s.grid = linspace(0.0, 1.5 * std::numbers::pi, time_points);
            s.family_parameter = SweepParameter::kappa_ratio;
            s.family = {1.0 / 100, 1.0 / 50, 1.0 / 20};
            break;
        case 'b':
            s.parameter = SweepParameter::kappa_ratio;
            s.grid = linspace(0.005, 0.1, scan_points);
            break;
        case 'c':
            s.parameter = SweepParameter::time;
            s.grid = linspace(0.0, 1.5 * std::numbers::pi, time_points);
            s.family_parameter = SweepParameter::m;
            s.family = {1.0 / 25, 1.0 / 50, 1.0 / 75};
            break;
        case 'd':
            s.parameter = SweepParameter::m;
            s.grid = linspace(0.02, 0.2, scan_points);
            break;
        default:
            throw ArgumentError(std::string("panel_spec: unknown panel '") + panel + "'");
    }
    return s;
}

ResultTable sweep(const SweepSpec &spec) {
    spec.validate();
    const std::vector<double> members = spec.family.empty() ? std::vector<double>{0.0} : spec.family;
    const bool has_family = !spec.family.empty();

    struct Run {
        double m;
        NoiseParams noise;
    };
    auto run_for = [&](double member, double grid_value) {
        Run r{spec.m, spec.noise};
        auto apply = [&](SweepParameter p, double v) {
            if (p == SweepParameter::kappa_ratio) r.noise.kappa = v;
            if (p == SweepParameter::m) r.m = v;
        };
        if (has_family) apply(spec.family_parameter, member);
        if (spec.parameter != SweepParameter::time) apply(spec.parameter, grid_value);
        return r;
    };

    const bool time_sweep = spec.parameter == SweepParameter::time;
    const std::size_t per_member = time_sweep ? 1 : spec.grid.size();
    const std::size_t jobs = members.size() * per_member;
    // results[job] holds one fidelity per grid point for time sweeps, one value otherwise.
    std::vector<std::vector<double>> results(jobs);

    parallel_for(jobs, spec.workers, [&](std::size_t job) {
        const std::size_t member = job / per_member;
        const std::size_t point = job % per_member;
        const Run r = run_for(members[member], time_sweep ? 0.0 : spec.grid[point]);
        const double dt = spec.dt > 0 ? spec.dt : default_dt(r.m);
        if (time_sweep) {
            results[job] = gate_fidelity_run(r.m, r.noise, spec.grid, dt, spec.run).column_values("fidelity");
        } else {
            const double t0 = gate_phases(r.m, spec.run.k).t0;
            const std::vector<double> at{t0};
            results[job] = gate_fidelity_run(r.m, r.noise, at, dt, spec.run).column_values("fidelity");
        }
    });

    ResultTable table;
    table.columns.push_back(time_sweep ? "g3_t" : to_string(spec.parameter));
    for (double member : members) {
        const std::string suffix = has_family ? "_" + to_string(spec.family_parameter) + "=" + short_number(member) : "";
        if (time_sweep && has_family && spec.family_parameter == SweepParameter::m) {
            table.columns.push_back("gi_t" + suffix);
        }
        table.columns.push_back("fidelity" + suffix);
    }
    for (std::size_t p = 0; p < spec.grid.size(); ++p) {
        std::vector<double> row{spec.grid[p]};
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            if (time_sweep) {
                if (has_family && spec.family_parameter == SweepParameter::m) row.push_back(spec.grid[p] / members[mi]);
                row.push_back(results[mi][p]);
            } else {
                row.push_back(results[mi * per_member + p][0]);
            }
        }
        table.add_row(std::move(row));
    }

    auto &md = table.metadata;
    md["code_version"] = kVersion;
    md["dt"] = spec.dt > 0 ? format_exact(spec.dt) : "auto (0.002/G'')";
    md["fidelity_definition"] = "<psi_T|rho(t)|psi_T>, psi_0 = uniform over 8 computational states x vacuum";
    md["gamma_eg_ratio"] = format_exact(spec.noise.gamma_eg);
    md["gamma_fg_ratio"] = format_exact(spec.noise.gamma_fg);
    md["grid_end"] = format_exact(spec.grid.back());
    md["grid_points"] = std::to_string(spec.grid.size());
    md["grid_start"] = format_exact(spec.grid.front());
    md["integrator"] = "rk4-fixed";
    md["k_index"] = std::to_string(spec.run.k);
    md["kappa_ratio"] = format_exact(spec.noise.kappa);
    md["m"] = format_exact(spec.m);
    md["n_max"] = std::to_string(spec.run.n_max);
    md["panel"] = std::string(1, spec.panel);
    md["swept"] = to_string(spec.parameter);
    md["target"] = to_string(spec.run.target);
    md["units"] = "time in 1/G3, rates in G3";
    if (has_family) {
        std::string fam;
        for (double v : spec.family) fam += (fam.empty() ? "" : ";") + format_exact(v);
        md["family"] = to_string(spec.family_parameter) + ":" + fam;
    }
    if (time_sweep && has_family && spec.family_parameter == SweepParameter::m) {
        md["time_axes"] = "g3_t = G3*t; gi_t = G_i*t = g3_t/m per curve";
    }
    if (!time_sweep) md["evaluated_at"] = "t0 = (2k+1)*pi/G3";
    return table;
}

}  // namespace nvcpf
