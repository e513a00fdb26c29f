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

#include <string>
#include <string_view>

#include "nvcpf/table.hpp"

namespace nvcpf {

/// `# key = value` metadata lines sorted by key, a header row, then
/// comma-separated rows with 12 significant digits. LF line endings.
std::string emit_csv(const ResultTable &table);

/// Reads emit_csv output back. Values are parsed from their 12-digit text.
ResultTable parse_csv(std::string_view text);

/// Formats a value the way emit_csv does ("%.12g").
std::string format_csv_number(double x);

/// gnuplot script plotting `csv_name` (a path relative to the script) for
/// the given figure panel.
std::string plot_script(const ResultTable &table, char panel, const std::string &csv_name);

}  // namespace nvcpf
