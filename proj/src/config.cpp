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

#include "nvcpf/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "nvcpf/errors.hpp"
#include "nvcpf/table.hpp"

namespace nvcpf {

namespace {

enum class Kind { boolean, integer, real, text };

struct KeySpec {
    const char *name;
    Kind kind;
};

constexpr KeySpec kKeys[] = {
    {"compensate_shifts", Kind::boolean}, {"dt", Kind::real},           {"gamma_eg_ratio", Kind::real},
    {"gamma_fg_ratio", Kind::real},       {"grid_points", Kind::integer}, {"k_index", Kind::integer},
    {"kappa_ratio", Kind::real},          {"m", Kind::real},            {"n_max", Kind::integer},
    {"out_path", Kind::text},             {"panel", Kind::text},        {"t_max", Kind::real},
    {"target", Kind::text},
};

const KeySpec *find_key(std::string_view key) {
    for (const auto &k : kKeys) {
        if (key == k.name) return &k;
    }
    return nullptr;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view s, double &out) {
    if (s.empty()) return false;
    std::string_view body = s;
    if (body.front() == '+') body.remove_prefix(1);
    if (body.empty()) return false;
    // Decimal only: digits, one optional point, optional exponent.
    for (char c : body) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || c == '-' ||
              c == '+')) {
            return false;
        }
    }
    const auto res = std::from_chars(body.data(), body.data() + body.size(), out, std::chars_format::general);
    return res.ec == std::errc() && res.ptr == body.data() + body.size() && std::isfinite(out);
}

bool parse_integer(std::string_view s, std::int64_t &out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

void check_allowed(const std::string &key, const ConfigValue &v) {
    if (key == "panel") {
        const auto &s = std::get<std::string>(v);
        if (s != "a" && s != "b" && s != "c" && s != "d") throw ConfigError("panel must be one of a, b, c, d");
    } else if (key == "target") {
        const auto &s = std::get<std::string>(v);
        if (s != "ideal" && s != "realized") throw ConfigError("target must be 'ideal' or 'realized'");
    } else if (key == "n_max" || key == "grid_points") {
        if (std::get<std::int64_t>(v) < 1) throw ConfigError(key + " must be >= 1");
    } else if (key == "k_index") {
        if (std::get<std::int64_t>(v) < 0) throw ConfigError("k_index must be >= 0");
    } else if (key == "m") {
        const double m = std::get<double>(v);
        if (!(m > 0 && m <= 1)) throw ConfigError("m must lie in (0, 1]");
    } else if (key == "dt") {
        if (std::get<double>(v) < 0) throw ConfigError("dt must be >= 0 (0 selects the default)");
    } else if (key == "t_max") {
        if (!(std::get<double>(v) > 0)) throw ConfigError("t_max must be positive");
    } else if (key.ends_with("_ratio")) {
        if (std::get<double>(v) < 0) throw ConfigError(key + " must be non-negative");
    }
}

bool kind_matches(Kind k, const ConfigValue &v) {
    switch (k) {
        case Kind::boolean:
            return std::holds_alternative<bool>(v);
        case Kind::integer:
            return std::holds_alternative<std::int64_t>(v);
        case Kind::real:
            return std::holds_alternative<double>(v);
        case Kind::text:
            return std::holds_alternative<std::string>(v);
    }
    return false;
}

}  // namespace

RunConfig::RunConfig() {
    values_["compensate_shifts"] = true;
    values_["dt"] = 0.0;
    values_["gamma_eg_ratio"] = 0.01;
    values_["gamma_fg_ratio"] = 1e-6;
    values_["grid_points"] = std::int64_t{400};
    values_["k_index"] = std::int64_t{0};
    values_["kappa_ratio"] = 0.01;
    values_["m"] = 0.1;
    values_["n_max"] = std::int64_t{1};
    values_["out_path"] = std::string();
    values_["panel"] = std::string("a");
    values_["t_max"] = 1.5 * std::numbers::pi;
    values_["target"] = std::string("ideal");
}

const std::vector<std::string> &RunConfig::known_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto &spec : kKeys) k.emplace_back(spec.name);
        return k;
    }();
    return keys;
}

bool RunConfig::is_known(std::string_view key) { return find_key(key) != nullptr; }

const ConfigValue &RunConfig::get(const std::string &key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
    return it->second;
}

double RunConfig::get_double(const std::string &key) const { return std::get<double>(get(key)); }
std::int64_t RunConfig::get_int(const std::string &key) const { return std::get<std::int64_t>(get(key)); }
bool RunConfig::get_bool(const std::string &key) const { return std::get<bool>(get(key)); }
const std::string &RunConfig::get_string(const std::string &key) const { return std::get<std::string>(get(key)); }

void RunConfig::set(const std::string &key, ConfigValue value) {
    const KeySpec *spec = find_key(key);
    if (!spec) throw ConfigError("unknown config key '" + key + "'");
    if (!kind_matches(spec->kind, value)) throw ConfigError("wrong value type for '" + key + "'");
    check_allowed(key, value);
    values_[key] = std::move(value);
    overridden_.insert(key);
}

std::string format_config_value(const ConfigValue &v) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_exact(d); }
        std::string operator()(const std::string &s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

std::string RunConfig::echo() const {
    std::string out;
    for (const auto &[k, v] : values_) out += k + " = " + format_config_value(v) + "\n";
    return out;
}

std::map<std::string, std::string> RunConfig::as_metadata() const {
    std::map<std::string, std::string> md;
    for (const auto &[k, v] : values_) md["config." + k] = format_config_value(v);
    return md;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::map<std::string, std::size_t> seen_at;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string where = "line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view raw = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": expected 'key = value'");

        const KeySpec *spec = find_key(key);
        if (!spec) throw ConfigError(where + ": unknown key '" + key + "'");
        if (raw.empty() && spec->kind != Kind::text) throw ConfigError(where + ": missing value for '" + key + "'");
        if (const auto it = seen_at.find(key); it != seen_at.end()) {
            throw ConfigError("duplicate key '" + key + "' on lines " + std::to_string(it->second) + " and " +
                              std::to_string(line_no));
        }
        seen_at[key] = line_no;

        ConfigValue value;
        switch (spec->kind) {
            case Kind::boolean:
                if (raw == "true") {
                    value = true;
                } else if (raw == "false") {
                    value = false;
                } else {
                    throw ConfigError(where + ": '" + key + "' expects true or false");
                }
                break;
            case Kind::integer: {
                std::int64_t i = 0;
                if (!parse_integer(raw, i)) throw ConfigError(where + ": '" + key + "' expects an integer");
                value = i;
                break;
            }
            case Kind::real: {
                double d = 0;
                if (!parse_real(raw, d)) throw ConfigError(where + ": '" + key + "' expects a decimal number");
                value = d;
                break;
            }
            case Kind::text:
                value = std::string(raw);
                break;
        }
        try {
            cfg.set(key, std::move(value));
        } catch (const ConfigError &e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return cfg;
}

}  // namespace nvcpf
