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

#include <iostream>

#include "qss/analysis.hpp"
#include "qss/cli.hpp"
#include "qss/protocol.hpp"
#include "qss/report_io.hpp"

int main(int argc, char **argv) {
    using namespace qss;
    cli::ArgParser parser;
    cli::Options options;
    try {
        options = parser.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return parser.app().exit(e);
    } catch (const CLI::ParseError &e) {
        parser.app().exit(e);
        return cli::config_error;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::config_error;
    }

    try {
        if (options.oracle) {
            const SessionConfig &c = options.config;
            OracleAnswer answer = brute_force_oracle(c.parties, c.attack, *options.oracle);
            std::cout << answer.text << "\n";
            return cli::ok;
        }
        SessionResult result = run_session(options.config, options.threads);
        std::cout << emit_report(result, options.config.format);
    } catch (const OracleBudgetExceeded &e) {
        std::cerr << "oracle budget exceeded: " << e.what() << "\n";
        return cli::oracle_budget;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::failure;
    }
    return cli::ok;
}
