// Copyright 2026 The zpf Authors
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

// Runs the built `zpf` executable and checks outputs and exit codes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string &args) {
    std::string cmd = std::string(ZPF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / ("zpf_cli_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(cli, figure1_default_grid) {
    auto r = run_cli("figure1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, 14), "x,p0,p1,p2,p3\n");
    EXPECT_NE(r.out.find("\n0,0.564189583548,0,"), std::string::npos);
}

TEST(cli, qubit_measure) {
    auto r = run_cli("qubit measure --theta 0 --frame-theta 3.141592653589793");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"kind\": \"qubit\""), std::string::npos);
    EXPECT_NE(r.out.find("\"outcome\": -1,\n      \"probability\": 1,"), std::string::npos) << r.out;
}

TEST(cli, classical_demo) {
    auto r = run_cli("classical demo --eta1 1 --eta2 1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"observed_energy\": 0"), std::string::npos);
    EXPECT_EQ(run_cli("classical demo --eta1 1 --eta2 2").exit_code, 3);
    EXPECT_EQ(run_cli("classical demo --eta1 -1 --eta2 0").exit_code, 3);
}

TEST(cli, oscillator_commands) {
    auto r = run_cli("oscillator measure --n 1 --ell 1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"lambda_outcome\": 0"), std::string::npos);
    auto csv = run_cli("oscillator measure --n 1 --ell 0 --format csv");
    ASSERT_EQ(csv.exit_code, 0);
    EXPECT_NE(csv.out.find("items.0.lambda_outcome,2\n"), std::string::npos) << csv.out;
    auto d = run_cli("oscillator density --n 1 --points 3 --xmin -1 --xmax 1");
    ASSERT_EQ(d.exit_code, 0);
    EXPECT_EQ(d.out, "x,density\n-1,0.415107497421\n0,0\n1,0.415107497421\n");
    EXPECT_EQ(run_cli("oscillator density --n 61").exit_code, 3);
    EXPECT_EQ(run_cli("oscillator density --n 1 --points 1").exit_code, 3);
    EXPECT_EQ(run_cli("oscillator measure --n 1 --ell 0 --mass 0").exit_code, 2);
}

TEST(cli, field_scenario) {
    auto cfg = temp_file("field.json", R"({"kind": "field", "parameters": {"occupations": [0, 2, 0], "offsets": [0, 2, 0]}})");
    auto r = run_cli("field scenario --config " + cfg.string());
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"total_relative_energy\": 0"), std::string::npos);
    EXPECT_NE(r.out.find("\"vacuum_partial_sum\": 1.5"), std::string::npos);

    auto unsupported = temp_file("field_oos.json", R"({"kind": "field", "parameters": {"occupations": [0], "offsets": [1]}})");
    EXPECT_EQ(run_cli("field scenario --config " + unsupported.string()).exit_code, 3);

    auto bad = temp_file("field_bad.json", R"({"kind": "field", "parameters": {"occupations": [0], "offsets": [0], "x": 1}})");
    EXPECT_EQ(run_cli("field scenario --config " + bad.string()).exit_code, 2);

    auto wrong_kind = temp_file("field_kind.json", R"({"kind": "classical", "parameters": {"eta1": 1, "eta2": 1}})");
    EXPECT_EQ(run_cli("field scenario --config " + wrong_kind.string()).exit_code, 2);
    EXPECT_EQ(run_cli("run --config " + wrong_kind.string()).exit_code, 0);
    EXPECT_EQ(run_cli("field scenario --config /nonexistent/file.json").exit_code, 2);
}

TEST(cli, sample_then_infer) {
    auto path = std::filesystem::temp_directory_path() / "zpf_cli_test_batch.csv";
    auto s = run_cli("sample --n 3 --count 20000 --seed 4 --out " + path.string());
    ASSERT_EQ(s.exit_code, 0);
    auto r = run_cli("infer --input " + path.string() + " --max-level 8");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"inferred_level\": 3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"level_claimed\": 3"), std::string::npos);
}

TEST(cli, usage_errors_exit_2) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("bogus").exit_code, 2);
    EXPECT_EQ(run_cli("qubit measure --theta 0").exit_code, 2);
    EXPECT_EQ(run_cli("figure1 --format xml").exit_code, 2);
    EXPECT_EQ(run_cli("sample --n 1 --count 0 --seed 1").exit_code, 2);
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}
