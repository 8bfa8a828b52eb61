/* Copyright 2026 The stochalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace stochalg::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "stochalg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, VerifyFullSuitePasses) {
    const auto r = call({"verify", "--property", "all", "--n", "1..3", "--d", "1..2"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.find("verdict=fail"), std::string::npos);
    EXPECT_NE(r.out.find("property=odd n=3 d=2"), std::string::npos);
    EXPECT_EQ(r.out.find("property=odd n=2"), std::string::npos);
}

TEST(Cli, VerifySinglePropertyLine) {
    const auto r = call({"verify", "--property", "3", "--n", "2", "--d", "2", "--vseed", "7"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "property=3 n=2 d=2 seed=7 verdict=pass\n");
}

TEST(Cli, VerifyCsv) {
    const auto r = call({"--format", "csv", "verify", "--property", "1,8", "--n", "1", "--d", "1", "--vseed", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "property,n,d,alphabet,subspace,seed,verdict,detail\n"
              "1,1,1,01,eq:1,2,pass,\n"
              "8,1,1,01,eq:1,2,pass,\n");
}

TEST(Cli, VerifyHypothesisViolationsAreUsageErrors) {
    auto r = call({"verify", "--property", "8", "--subspace", "le:2"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("eq:n"), std::string::npos);
    EXPECT_EQ(call({"verify", "--property", "3", "--subspace", "le:2"}).code, kExitUsage);
    EXPECT_EQ(call({"--alphabet", "12", "verify", "--property", "3", "--subspace", "le:2"}).code, kExitOk);
    EXPECT_EQ(call({"verify", "--property", "9"}).code, kExitUsage);
    EXPECT_EQ(call({"verify", "--n", "1", "--subspace", "eq:1"}).code, kExitUsage);
    EXPECT_EQ(call({"verify", "--subspace", "ge:1"}).code, kExitUsage);
    EXPECT_EQ(call({"--alphabet", "12", "--d", "2", "verify"}).code, kExitUsage);
    EXPECT_EQ(call({"--cap", "2", "verify", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(call({"--format", "xml", "verify", "--n", "1"}).code, kExitUsage);
}

TEST(Cli, ExcessArgmaxAtOne) {
    const auto r = call({"excess", "--n", "1", "--d", "2", "--grid", "0.25,0.5,1,2,4", "--t", "1"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out,
              "epsilon,t,excess_value,closed_form_value\n"
              "1/4,1,8/5,8/5\n"
              "1/2,1,20/9,20/9\n"
              "1,1,5/2,5/2\n"
              "2,1,20/9,20/9\n"
              "4,1,8/5,8/5\n");
    EXPECT_NE(r.err.find("argmax t=1 epsilon=1"), std::string::npos);
}

TEST(Cli, ExcessGridsAndRejections) {
    EXPECT_EQ(call({"excess", "--grid", "0.5,1,3", "--vseed", "3"}).code, kExitOk);
    const auto r = call({"excess", "--n", "2", "--grid", "1/2,2", "--t", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("argmax t=1 epsilon=1/2"), std::string::npos);
    EXPECT_EQ(call({"excess", "--grid", "-1"}).code, kExitUsage);
    EXPECT_EQ(call({"excess", "--grid", "-2"}).code, kExitUsage);
    EXPECT_EQ(call({"excess", "--grid", "abc"}).code, kExitUsage);
    EXPECT_EQ(call({"excess", "--t", "0"}).code, kExitUsage);
}

TEST(Cli, GramTable) {
    const auto r = call({"gram", "--subspace", "eq:1", "--d", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "row,col,value\n0,0,1*t^2\n0,1,0\n1,0,0\n1,1,1*t\n");
    EXPECT_EQ(call({"gram", "--subspace", "ge:1"}).code, kExitUsage);
    EXPECT_EQ(call({"gram", "--subspace", "eq"}).code, kExitUsage);
}

TEST(Cli, DumpNamedEndomorphisms) {
    auto r = call({"--cap", "2", "--alphabet", "12", "dump", "--endo", "sinhlog"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("12 -> 1/2*12 - 1/2*21\n"), std::string::npos);
    r = call({"--cap", "2", "--d", "1", "dump", "--endo", "S"});
    EXPECT_NE(r.out.find("01 -> 1*10\n"), std::string::npos);
    for (const char* name : {"id", "nu", "J", "rev", "D", "inverse", "coshlog", "log", "explog", "f:1/2", "Q:2:1",
                             "R:1/2:1"})
        EXPECT_EQ(call({"--cap", "3", "dump", "--endo", name}).code, kExitOk) << name;
    EXPECT_EQ(call({"dump", "--endo", "R:-1:1"}).code, kExitUsage);
    EXPECT_EQ(call({"dump", "--endo", "R:1:9"}).code, kExitUsage);
    EXPECT_EQ(call({"dump", "--endo", "bogus"}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
    const std::string path = testing::TempDir() + "gram.csv";
    EXPECT_EQ(call({"--output", path, "gram", "--subspace", "eq:0", "--d", "1"}).code, kExitOk);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "row,col,value\ne,e,1\n");
    std::remove(path.c_str());
}

TEST(Cli, BenchSmokeAndConfigErrors) {
    const std::string path = testing::TempDir() + "tiny.cfg";
    {
        std::ofstream f(path);
        f << "dim = 2\nd = 2\na0 = -0.5, 1, 0, -1\na1 = 0, 1, 0, 0\na2 = 0, 0, 1, 0\ny0 = 1, 0.5\nT = 0.1\n"
             "h_grid = 0.1, 0.05\npaths = 50\nfine_factor = 20\ngrades = 1\nmethods = taylor, sinhlog\n";
    }
    const auto r = call({"bench", "--config", path});
    EXPECT_TRUE(r.code == kExitOk || r.code == kExitViolation) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "method,grade,h,paths,rms_local,rms_global,std_error_local,std_error_global");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_EQ(call({"bench", "--config", path}).out, r.out);
    EXPECT_EQ(call({"bench", "--config", "/nonexistent.cfg"}).code, kExitUsage);
    {
        std::ofstream f(path);
        f << "dim = 2\nd = 2\n";
    }
    EXPECT_EQ(call({"bench", "--config", path}).code, kExitUsage);
    EXPECT_EQ(call({"bench"}).code, kExitUsage);
    std::remove(path.c_str());
}

TEST(Cli, UsageAndHelp) {
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(call({"--help"}).code, kExitOk);
    EXPECT_EQ(call({"--cap", "x", "gram"}).code, kExitUsage);
}

}  // namespace
}  // namespace stochalg::cli
