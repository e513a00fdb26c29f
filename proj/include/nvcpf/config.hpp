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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nvcpf {

using ConfigValue = std::variant<bool, std::int64_t, double, std::string>;

/// Run settings: every recognized key always has a value (its default until
/// overridden). Rates are ratios to G̃_3, times are in 1/G̃_3.
///
///   m = 0.1                 k_index = 0           kappa_ratio = 0.01
///   gamma_eg_ratio = 0.01   gamma_fg_ratio = 1e-6 n_max = 1
///   dt = 0 (auto)           t_max = 1.5π          grid_points = 400
///   panel = a               out_path = (empty)    target = ideal
///   compensate_shifts = true
class RunConfig {
   public:
    RunConfig();

    static const std::vector<std::string> &known_keys();
    static bool is_known(std::string_view key);

    double get_double(const std::string &key) const;
    std::int64_t get_int(const std::string &key) const;
    bool get_bool(const std::string &key) const;
    const std::string &get_string(const std::string &key) const;
    const ConfigValue &get(const std::string &key) const;

    /// Sets a key after checking its type and allowed values.
    void set(const std::string &key, ConfigValue value);
    bool is_overridden(const std::string &key) const { return overridden_.count(key) > 0; }

    /// `key = value` lines for every key, sorted by key; parse_config reads
    /// it back to an equal config.
    std::string echo() const;
    /// Effective config as metadata entries named "config.<key>".
    std::map<std::string, std::string> as_metadata() const;

    friend bool operator==(const RunConfig &a, const RunConfig &b) { return a.values_ == b.values_; }

   private:
    std::map<std::string, ConfigValue> values_;
    std::set<std::string> overridden_;
};

std::string format_config_value(const ConfigValue &v);

/// Line-based `key = value`; `#` starts a comment. Throws ConfigError naming
/// the line for malformed lines, unknown keys and bad values, and both lines
/// for duplicate keys.
RunConfig parse_config(std::string_view text);

}  // namespace nvcpf
