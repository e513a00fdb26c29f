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

#include "nvcpf/table.hpp"

#include <charconv>

#include "nvcpf/errors.hpp"

namespace nvcpf {

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw DimensionError("ResultTable: row has " + std::to_string(row.size()) + " values for " +
                             std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw ArgumentError("ResultTable: no column named '" + name + "'");
}

std::vector<double> ResultTable::column_values(const std::string &name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &r : rows) out.push_back(r[c]);
    return out;
}

std::string format_exact(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace nvcpf
