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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nvcpf {

/// Rectangular table of reals plus the metadata needed to regenerate it.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> metadata;

    void add_row(std::vector<double> row);
    /// Index of a named column; ArgumentError if absent.
    std::size_t column(const std::string &name) const;
    std::vector<double> column_values(const std::string &name) const;

    friend bool operator==(const ResultTable &, const ResultTable &) = default;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_exact(double x);

}  // namespace nvcpf
