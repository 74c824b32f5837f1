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
#include <stdexcept>
#include <string>

#include "qss/adversary.hpp"
#include "qss/physical.hpp"

namespace qss {

enum class OutputFormat { json, csv };

/// Rejected configuration. field() names the offending setting.
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string field, const std::string &message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

/// Parameters of one seeded session. Defaults replay the six-party,
/// 25000-round reference run.
struct SessionConfig {
    int parties = 5;
    std::uint64_t rounds = 25000;
    std::uint64_t seed = 1;
    AttackSpec attack;
    NoiseSpec noise = kReferenceNoise;
    double compare_fraction = 0.5;
    double abort_threshold = 0.11;
    OutputFormat format = OutputFormat::json;

    friend bool operator==(const SessionConfig &, const SessionConfig &) = default;
};

inline void validate(const SessionConfig &config) {
    if (config.parties < 2) {
        throw ConfigError("parties", "need at least 2 recipients, got " + std::to_string(config.parties));
    }
    if (config.attack.active() && (config.attack.link < 0 || config.attack.link >= config.parties)) {
        throw ConfigError("attack", "link " + std::to_string(config.attack.link) + " outside [0, " +
                                        std::to_string(config.parties) + ")");
    }
    try {
        validate(config.noise);
    } catch (const std::invalid_argument &e) {
        std::string what = e.what();
        throw ConfigError(what.substr(0, what.find(' ')), what);
    }
    if (!(config.compare_fraction >= 0 && config.compare_fraction <= 1)) {
        throw ConfigError("compare_fraction", "must lie in [0, 1], got " + std::to_string(config.compare_fraction));
    }
    if (!(config.abort_threshold >= 0 && config.abort_threshold <= 1)) {
        throw ConfigError("abort_threshold", "must lie in [0, 1], got " + std::to_string(config.abort_threshold));
    }
}

}  // namespace qss
