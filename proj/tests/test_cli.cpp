// Copyright 2026 The majorana-clifford Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "majorana/cli.hpp"

using namespace majorana;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string &name, const std::string &content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

/// Runs a shell command through the built binary; returns (exit code, stdout).
std::pair<int, std::string> shell(const std::string &cmd) {
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, got);
    }
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Order) {
    auto r = run({"order", "--group", "o", "--dim", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "48\n");
    EXPECT_EQ(run({"order", "--group", "sp", "--dim", "4"}).out, "720\n");
    EXPECT_EQ(run({"order", "--group", "o", "--n", "3"}).out, "23040\n");
}

TEST(Cli, FrameExactJson) {
    auto r = run({"frame", "--group", "o", "--dim", "4", "--t", "3", "--exact", "--parity-restricted"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"], 5);
    EXPECT_EQ(j["ensemble"], "o");
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_EQ(j["seed"], kDefaultSeed);
}

TEST(Cli, FrameMonteCarloIsSeeded) {
    std::vector<std::string> args{"frame", "--group", "sp", "--dim", "2", "--t", "2", "--samples", "5000", "--seed", "9"};
    auto a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, run(args).out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["mode"], "monte_carlo");
    EXPECT_EQ(j["samples"], 5000);
    EXPECT_EQ(j["seed"], 9);
    EXPECT_TRUE(j.contains("std_error"));
    EXPECT_FALSE(j.contains("value"));
}

TEST(Cli, SampleVerifyRoundTrip) {
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        std::string d = std::to_string(dim);
        const auto order = group_order(GroupKind::orthogonal, dim).convert_to<int>();
        for (int i = 1; i <= order; ++i) {
            auto s = run({"sample", "--group", "o", "--dim", d, "--index", std::to_string(i)});
            ASSERT_EQ(s.code, 0) << s.err;
            auto v = run({"verify", "--group", "o"}, s.out);
            ASSERT_EQ(v.code, 0) << s.out;
            ASSERT_EQ(v.out, "orthogonal\n");
        }
    }
    for (int i = 1; i <= 6; ++i) {
        auto s = run({"sample", "--group", "sp", "--dim", "2", "--index", std::to_string(i)});
        EXPECT_EQ(run({"verify", "--group", "sp"}, s.out).out, "symplectic\n");
        auto m = run({"sample", "--group", "sp", "--dim", "2", "--index", std::to_string(i), "--basis", "majorana"});
        EXPECT_EQ(run({"verify", "--group", "sp", "--basis", "majorana"}, m.out).out, "symplectic\n");
    }
}

TEST(Cli, VerifyRejectsNonMembers) {
    auto r = run({"verify", "--group", "o"}, "11\n01\n");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "not orthogonal\n");
    EXPECT_EQ(run({"verify", "--group", "o"}, "").code, 1);
}

TEST(Cli, SampleRandomDependsOnlyOnSeed) {
    auto a = run({"sample", "--group", "o", "--dim", "8", "--seed", "5"});
    auto b = run({"sample", "--group", "o", "--dim", "8", "--seed", "5"});
    auto c = run({"sample", "--group", "o", "--dim", "8", "--seed", "6"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_EQ(run({"sample", "--group", "o", "--dim", "8"}).out,
              run({"sample", "--group", "o", "--dim", "8", "--seed", std::to_string(kDefaultSeed)}).out);
}

TEST(Cli, JordanWignerAndCompose) {
    EXPECT_EQ(run({"jw", "i^0 1100"}).out, "i^0 1100\n");
    auto r = run({"jw", "--basis", "majorana"}, "i^1 10\ni^0 0110\n");
    EXPECT_EQ(r.out, "i^1 10\ni^0 1010\n");
    EXPECT_EQ(run({"compose", "i^0 1000", "i^0 0100"}).out, "i^3 1100\n");
    EXPECT_EQ(run({"compose", "i^0 1100", "i^0 1100"}).out, "i^0 0000\n");
    EXPECT_EQ(run({"compose", "--basis", "pauli"}, "i^0 10\ni^0 01\n").out,
              to_string(compose(parse_string("i^0 10", Basis::pauli), parse_string("i^0 01", Basis::pauli))) + "\n");
    EXPECT_EQ(run({"compose", "i^0 10", "i^0 1100"}).code, 1);
}

TEST(Cli, StabEncodeReplaysToInput) {
    std::string path = temp_file("stab3.txt", "n=3 r=1\n111100\n");
    auto r = run({"stab-encode", "--input", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    auto m = read_matrix(in);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_orthogonal(*m));
    CliffordWord w = parse_word(in);
    EXPECT_EQ(reflection_product(6, w.gens), *m);
    EXPECT_EQ(m->apply(BitVec::from_string("110000")), BitVec::from_string("111100"));
}

TEST(Cli, StabEncodeAddsAncillaForParity) {
    auto r = run({"stab-encode"}, "n=2 r=2\n1100\n0011\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("ancilla"), std::string::npos);
    std::istringstream in(r.out);
    auto m = read_matrix(in);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->rows(), 6u);
}

TEST(Cli, StabEncodeRejectsBadInput) {
    EXPECT_EQ(run({"stab-encode"}, "n=2 r=2\n1100\n1010\n").code, 1);
    EXPECT_EQ(run({"stab-encode"}, "n=2 r=1\n110\n").code, 1);
    EXPECT_EQ(run({"stab-encode", "--input", "/nonexistent/file"}).code, 1);
}

TEST(Cli, Orbits) {
    auto j = nlohmann::json::parse(run({"orbits", "--group", "o", "--dim", "4"}).out);
    EXPECT_EQ(j["count"], 4);
    EXPECT_EQ(j["sizes"], nlohmann::json({1, 1, 6, 8}));
    j = nlohmann::json::parse(run({"orbits", "--group", "o", "--dim", "4", "--tuple", "2", "--even-quotient"}).out);
    EXPECT_EQ(j["count"], 5);
    EXPECT_EQ(run({"orbits", "--group", "sp", "--dim", "4", "--even-quotient"}).code, 1);
}

TEST(Cli, VerifySuitesPass) {
    auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"order", "--dim", "4", "--unknown"}).code, 1);
    EXPECT_EQ(run({"order", "--group", "x", "--dim", "4"}).code, 1);
    EXPECT_EQ(run({"order", "--group", "o"}).code, 1);
    EXPECT_EQ(run({"order", "--group", "o", "--dim", "4", "--n", "3"}).code, 1);
    EXPECT_EQ(run({"sample", "--group", "o", "--dim", "4", "--index", "49"}).code, 1);
    EXPECT_EQ(run({"sample", "--group", "o", "--dim", "4", "--index", "-3"}).code, 1);
    EXPECT_EQ(run({"frame", "--group", "o", "--dim", "4", "--exact", "--samples", "10"}).code, 1);
    EXPECT_EQ(run({"frame", "--group", "sp", "--dim", "4", "--parity-restricted"}).code, 1);
    auto r = run({"order", "--group", "sp", "--dim", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliBinary, PipesAndExitCodes) {
    const std::string bin = MAJORANA_CLI_PATH;
    auto [code, out] = shell("'" + bin + "' order --group o --dim 4");
    EXPECT_EQ(code, 0);
    EXPECT_EQ(out, "48\n");
    for (int i : {1, 17, 48}) {
        auto [c, o] = shell("'" + bin + "' sample --group o --dim 4 --index " + std::to_string(i) + " | '" + bin +
                            "' verify --group o");
        EXPECT_EQ(c, 0);
        EXPECT_EQ(o, "orthogonal\n");
    }
    EXPECT_EQ(shell("'" + bin + "' order --group o 2>/dev/null").first, 1);
    EXPECT_EQ(shell("'" + bin + "' 2>/dev/null").first, 1);
}
