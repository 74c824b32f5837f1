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

// Runs the built qss binary end to end.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "gtest/gtest.h"

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(QSS_CLI_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(cli, oracle_qber_under_attack) {
    auto r = run("--oracle qber --attack x:0 --parties 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1/4 = 0.25\n");
}

TEST(cli, oracle_valid_fraction) {
    auto r = run("--oracle valid-fraction");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1/2 = 0.5\n");
}

TEST(cli, oracle_equivalence) {
    auto r = run("--oracle equivalence --parties 4");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("equal: true", 0), 0u) << r.out;
}

TEST(cli, oracle_budget_exit_code) {
    auto r = run("--oracle qber --parties 6");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.out.find("budget"), std::string::npos);
}

TEST(cli, config_error_exit_code) {
    auto r = run("--compare-fraction 1.5");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.out.find("compare_fraction"), std::string::npos);
    EXPECT_EQ(run("--format yaml").exit_code, 2);
    EXPECT_EQ(run("--attack breidbart:9").exit_code, 2);
}

TEST(cli, help) {
    auto r = run("--help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("--herald-mu"), std::string::npos);
}

TEST(cli, deterministic_bytes) {
    for (std::string fmt : {"json", "csv"}) {
        auto a = run("--rounds 5000 --seed 99 --attack y:1 --format " + fmt);
        auto b = run("--rounds 5000 --seed 99 --attack y:1 --threads 4 --format " + fmt);
        EXPECT_EQ(a.exit_code, 0);
        EXPECT_EQ(a.out, b.out);
        EXPECT_GT(a.out.size(), 100u);
    }
}
