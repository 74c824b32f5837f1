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

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qss/oracle.hpp"
#include "qss/report_io.hpp"

namespace qss::cli {

enum ExitCode : int { ok = 0, failure = 1, config_error = 2, oracle_budget = 3 };

struct Options {
    SessionConfig config;
    std::optional<OracleQuery> oracle;
    unsigned threads = 1;
};

inline SessionConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path + "'");
    }
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("config", e.what());
    }
    return config_from_json(j);
}

/// Builds the argument parser. Values land in raw string/number slots so that
/// a config file can be applied first and explicit flags layered on top.
class ArgParser {
   public:
    ArgParser() : app_("Single-qubit (N+1)-party secret sharing simulator and exact oracle", "qss") {
        app_.add_option("--config", config_path_, "JSON config file (same schema as the report's config)");
        parties_ = app_.add_option("--parties", parties_v_, "number of recipients N (>= 2)");
        rounds_ = app_.add_option("--rounds", rounds_v_, "protocol repetitions");
        seed_ = app_.add_option("--seed", seed_v_, "64-bit master seed");
        attack_ = app_.add_option("--attack", attack_v_, "none | {x|y|breidbart}:<link>");
        mu_ = app_.add_option("--herald-mu", mu_v_, "mean trigger photons per window");
        eta_ = app_.add_option("--coinc-eta", eta_v_, "coincidence probability given one herald");
        flip_ = app_.add_option("--flip-e", flip_v_, "outcome flip probability");
        frac_ = app_.add_option("--compare-fraction", frac_v_, "fraction of valid rounds publicly compared");
        thr_ = app_.add_option("--abort-threshold", thr_v_, "abort when compared QBER exceeds this");
        format_ = app_.add_option("--format", format_v_, "json report or csv transcript")
                      ->check(CLI::IsMember({"json", "csv"}));
        app_.add_option("--oracle", oracle_v_,
                        "exact query: valid-fraction | qber | reconstruction | subset | information | equivalence")
            ->check(CLI::IsMember({"valid-fraction", "qber", "reconstruction", "subset", "information", "equivalence"}));
        app_.add_option("--threads", threads_, "worker threads, 0 = all cores (output does not depend on it)");
    }

    CLI::App &app() {
        return app_;
    }

    /// Throws CLI::ParseError for malformed flags and ConfigError for values
    /// out of range.
    Options parse(int argc, const char *const *argv) {
        app_.parse(argc, argv);
        return finish();
    }
    Options parse(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        app_.parse(args);
        return finish();
    }

   private:
    Options finish() {
        Options o;
        if (!config_path_.empty()) {
            o.config = load_config_file(config_path_);
        }
        SessionConfig &c = o.config;
        if (*parties_) c.parties = parties_v_;
        if (*rounds_) c.rounds = rounds_v_;
        if (*seed_) c.seed = seed_v_;
        if (*attack_) {
            try {
                c.attack = parse_attack(attack_v_);
            } catch (const std::invalid_argument &e) {
                throw ConfigError("attack", e.what());
            }
        }
        if (*mu_) c.noise.herald_mu = mu_v_;
        if (*eta_) c.noise.coincidence_eta = eta_v_;
        if (*flip_) c.noise.flip_e = flip_v_;
        if (*frac_) c.compare_fraction = frac_v_;
        if (*thr_) c.abort_threshold = thr_v_;
        if (*format_) c.format = format_v_ == "csv" ? OutputFormat::csv : OutputFormat::json;
        if (!oracle_v_.empty()) o.oracle = parse_oracle_query(oracle_v_);
        o.threads = threads_;
        // The oracle path checks its own budget; a session config must be runnable.
        validate(c);
        return o;
    }

    CLI::App app_;
    std::string config_path_;
    int parties_v_ = 0;
    std::uint64_t rounds_v_ = 0, seed_v_ = 0;
    std::string attack_v_, format_v_, oracle_v_;
    double mu_v_ = 0, eta_v_ = 0, flip_v_ = 0, frac_v_ = 0, thr_v_ = 0;
    unsigned threads_ = 1;
    CLI::Option *parties_, *rounds_, *seed_, *attack_, *mu_, *eta_, *flip_, *frac_, *thr_, *format_;
};

inline Options parse_args(std::vector<std::string> args) {
    ArgParser parser;
    return parser.parse(std::move(args));
}

}  // namespace qss::cli
