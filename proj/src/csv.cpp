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

#include "nvcpf/csv.hpp"

#include <charconv>
#include <cstdio>

#include "nvcpf/errors.hpp"

namespace nvcpf {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

}  // namespace

std::string format_csv_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string emit_csv(const ResultTable &table) {
    std::string out;
    for (const auto &[k, v] : table.metadata) out += "# " + k + " = " + v + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_csv_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

ResultTable parse_csv(std::string_view text) {
    ResultTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto eq = line.find(" = ");
            if (eq == std::string_view::npos || line.size() < 2) {
                throw ArgumentError("parse_csv: bad metadata on line " + std::to_string(line_no));
            }
            table.metadata[std::string(line.substr(2, eq - 2))] = std::string(line.substr(eq + 3));
            continue;
        }
        if (!have_header) {
            for (auto c : split(line, ',')) table.columns.emplace_back(c);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        for (auto cell : split(line, ',')) {
            double v = 0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
                throw ArgumentError("parse_csv: bad number on line " + std::to_string(line_no));
            }
            row.push_back(v);
        }
        table.add_row(std::move(row));
    }
    return table;
}

std::string plot_script(const ResultTable &table, char panel, const std::string &csv_name) {
    std::string s;
    s += "# gnuplot script for " + csv_name + " (panel " + std::string(1, panel) + ")\n";
    s += "set datafile separator ','\n";
    s += "set datafile commentschars '#'\n";
    s += "set key autotitle columnhead\n";
    s += "set ylabel 'fidelity'\n";
    std::string xlabel = table.columns.empty() ? "" : table.columns.front();
    if (panel == 'a') xlabel = "G3 t";
    if (panel == 'b') xlabel = "kappa / G3";
    if (panel == 'c') xlabel = "Gi t";
    if (panel == 'd') xlabel = "m";
    s += "set xlabel '" + xlabel + "'\n";

    std::vector<std::string> curves;
    for (std::size_t i = 1; i < table.columns.size(); ++i) {
        const std::string &name = table.columns[i];
        if (name.rfind("fidelity", 0) != 0) continue;
        std::size_t x = 1;
        // A gi_t column directly before a fidelity column is that curve's x axis.
        if (panel == 'c' && i >= 2 && table.columns[i - 1].rfind("gi_t", 0) == 0) x = i;
        curves.push_back("'" + csv_name + "' using " + std::to_string(x) + ":" + std::to_string(i + 1) +
                         " with lines");
    }
    s += "plot ";
    for (std::size_t i = 0; i < curves.size(); ++i) s += (i ? ", \\\n     " : "") + curves[i];
    s += "\n";
    return s;
}

}  // namespace nvcpf
