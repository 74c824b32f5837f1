// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/config.hpp"
#include "qss/estimate.hpp"
#include "qss/protocol.hpp"

namespace qss {

using ordered_json = nlohmann::ordered_json;

inline const char *to_string(OutputFormat f) {
    return f == OutputFormat::json ? "json" : "csv";
}

inline ordered_json config_to_json(const SessionConfig &c) {
    ordered_json j;
    j["parties"] = c.parties;
    j["rounds"] = c.rounds;
    j["seed"] = c.seed;
    j["attack"] = c.attack.to_string();
    j["herald_mu"] = c.noise.herald_mu;
    j["coinc_eta"] = c.noise.coincidence_eta;
    j["flip_e"] = c.noise.flip_e;
    j["compare_fraction"] = c.compare_fraction;
    j["abort_threshold"] = c.abort_threshold;
    j["format"] = to_string(c.format);
    return j;
}

namespace detail {

template <typename T>
void read_field(const ordered_json &j, const char *key, T &out) {
    auto it = j.find(key);
    if (it == j.end()) {
        return;
    }
    try {
        if constexpr (std::is_same_v<T, std::uint64_t>) {
            if (!it->is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
        } else if constexpr (std::is_integral_v<T>) {
            if (!it->is_number_integer()) throw ConfigError(key, "expected an integer");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!it->is_number()) throw ConfigError(key, "expected a number");
        }
        out = it->get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(key, e.what());
    }
}

}  // namespace detail

/// Inverse of config_to_json. Missing keys keep their defaults; unknown keys
/// and out-of-range values are rejected.
inline SessionConfig config_from_json(const ordered_json &j) {
    if (!j.is_object()) {
        throw ConfigError("config", "expected a JSON object");
    }
    static const char *known[] = {"parties", "rounds",          "seed",           "attack", "herald_mu", "coinc_eta",
                                  "flip_e",  "compare_fraction", "abort_threshold", "format"};
    for (const auto &[key, value] : j.items()) {
        bool ok = false;
        for (const char *k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(key, "unknown configuration key");
    }
    SessionConfig c;
    detail::read_field(j, "parties", c.parties);
    detail::read_field(j, "rounds", c.rounds);
    detail::read_field(j, "seed", c.seed);
    std::string attack = c.attack.to_string();
    detail::read_field(j, "attack", attack);
    try {
        c.attack = parse_attack(attack);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("attack", e.what());
    }
    detail::read_field(j, "herald_mu", c.noise.herald_mu);
    detail::read_field(j, "coinc_eta", c.noise.coincidence_eta);
    detail::read_field(j, "flip_e", c.noise.flip_e);
    detail::read_field(j, "compare_fraction", c.compare_fraction);
    detail::read_field(j, "abort_threshold", c.abort_threshold);
    std::string format = to_string(c.format);
    detail::read_field(j, "format", format);
    if (format == "json") {
        c.format = OutputFormat::json;
    } else if (format == "csv") {
        c.format = OutputFormat::csv;
    } else {
        throw ConfigError("format", "expected json or csv, got '" + format + "'");
    }
    validate(c);
    return c;
}

/// Bits packed most-significant first; the final nibble is zero padded.
inline std::string key_to_hex(const std::vector<bool> &bits) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            nibble = nibble << 1 | (i + b < bits.size() && bits[i + b]);
        }
        out.push_back(digits[nibble]);
    }
    return out;
}

inline ordered_json report_to_json(const SessionReport &r) {
    ordered_json j;
    j["config"] = config_to_json(r.config_echo);
    j["z_total"] = r.z_total;
    j["z_one"] = r.z_one;
    j["z_raw"] = r.z_raw;
    j["z_val"] = r.z_val;
    if (r.qber) {
        ordered_json q;
        q["q"] = r.qber->q;
        q["stderr"] = r.qber->stderr_;
        q["n"] = r.qber->n;
        j["qber"] = q;
    } else {
        j["qber"] = nullptr;
    }
    j["key_hex"] = key_to_hex(r.key_bits);
    j["key_bits"] = r.key_bits.size();
    j["abort"] = to_string(r.abort);
    return j;
}

inline std::string emit_report_json(const SessionReport &r) {
    return report_to_json(r).dump(2) + "\n";
}

namespace detail {
template <typename T, typename F>
std::string join(const std::vector<T> &items, F &&f) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(';');
        out += f(items[i]);
    }
    return out;
}
}  // namespace detail

/// One row per coincidence round. Phases are in units of pi/4, lists are
/// ';'-separated, booleans are 0/1 and an absent bit is an empty field.
inline std::string emit_transcript_csv(const std::vector<RoundRecord> &records) {
    std::ostringstream out;
    out << "round_index,distributor_phase,recipient_phases,classes,order,outcome,valid,bit,compared,attack_active\n";
    for (const auto &r : records) {
        out << r.round_index << ',' << r.distributor_phase.k() << ','
            << detail::join(r.recipient_phases, [](Phase8 p) { return std::to_string(p.k()); }) << ','
            << detail::join(r.announced_classes, [](ClassLabel c) { return std::string(1, class_char(c)); }) << ','
            << detail::join(r.announcement_order, [](int i) { return std::to_string(i); }) << ','
            << (r.outcome == Outcome::plus ? "+1" : "-1") << ',' << r.valid << ','
            << (r.distributor_bit ? std::to_string(*r.distributor_bit) : "") << ',' << r.compared << ','
            << r.attack_active << '\n';
    }
    return out.str();
}

inline std::string emit_report(const SessionResult &result, OutputFormat format) {
    return format == OutputFormat::json ? emit_report_json(result.report) : emit_transcript_csv(result.records);
}

}  // namespace qss
