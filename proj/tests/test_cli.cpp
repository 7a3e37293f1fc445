/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int status;
    std::string out;
};

// stdout only; stderr is merged when `merge` is set
Result run(const std::string& args, bool merge = false) {
    std::string cmd = std::string("\"" TORUSMOD_CLI "\" ") + args + (merge ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& name) { return std::string(TORUSMOD_DATA_DIR "/") + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("torusmod_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ValidatePasses) {
    Result r = run("validate " + data("heisenberg.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST_F(Cli, ValidateFailsOnBrokenRelation) {
    json j = json::parse(slurp(data("heisenberg.json")));
    j["heisenberg"]["Z"] = json{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
    Result r = run("validate " + write("broken.json", j.dump()));
    EXPECT_EQ(r.status, 1);
}

TEST_F(Cli, MalformedJsonIsAnInputError) {
    std::string f = write("bad.json", "{bad");
    Result r = run("validate " + f, true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find(f), std::string::npos);
}

TEST_F(Cli, SchemaErrorNamesFileAndField) {
    json j = json::parse(slurp(data("heisenberg.json")));
    j.erase("K_max");
    std::string f = write("schema.json", j.dump());
    Result r = run("validate " + f, true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find(f), std::string::npos);
    EXPECT_NE(r.out.find("K_max"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("validate " + path("missing.json")).status, 2);
    EXPECT_EQ(run("hwv --N 1 --grade 0").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST_F(Cli, HighestWeightVector) {
    Result r = run("hwv --N 2 --grade 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "x^[2,0] D_2\n");
}

TEST_F(Cli, Dims) {
    Result r = run("dims --N 3 --max-grade 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "-1 3\n0 8\n1 15\n");
}

TEST_F(Cli, Act) {
    std::string v = write("v.json", R"({"components":[{"s":[1,0],"u":["0","0","1"]}]})");
    Result r = run("act " + data("heisenberg.json") + " --element \"t^[1,0] d_2\" --vector " + v);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "t^[2,0] (x) [-1,0,0]\n");
}

TEST_F(Cli, IrreducibleReportsWitness) {
    Result r = run("irreducible " + data("trivial_rank2.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("reducible", 0), 0u);
    Result j = run("irreducible " + data("trivial_rank2.json") + " --quiet --json -");
    json rep = json::parse(j.out);
    EXPECT_EQ(rep["status"], "ok");
    EXPECT_FALSE(rep["result"]["witness"].empty());
}

TEST_F(Cli, BuildSimpleThenVerify) {
    std::string out = path("sl2.json");
    ASSERT_EQ(run("build-simple " + data("sl2_natural.json") + " -o " + out).status, 0);
    EXPECT_EQ(run("validate " + out).status, 0);
    EXPECT_EQ(run("verify " + out + " --box 2 --samples 100").status, 0);
    Result r = run("irreducible " + out);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("irreducible", 0), 0u);
}

TEST_F(Cli, GridDumpRoundTrip) {
    std::string grid = path("grid.json");
    ASSERT_EQ(run("assemble " + data("heisenberg.json") + " --a 1 --b 2 --grid 3 --puncture -o " + grid).status, 0);
    Result r = run("detect-poly " + grid + " --k-max 2 --quiet --json -");
    EXPECT_EQ(r.status, 0);
    json rep = json::parse(r.out);
    EXPECT_EQ(rep["result"]["degree"], 1);

    std::string full = path("full.json");
    ASSERT_EQ(run("assemble " + data("heisenberg.json") + " --a 1 --b 2 --grid 3 -o " + full).status, 0);
    Result f = run("detect-poly " + full + " --k-max 2");
    EXPECT_NE(f.out.find("not a polynomial"), std::string::npos);
}

TEST_F(Cli, ReportsAreByteIdentical) {
    std::string out = path("report.json");
    std::string cmd = "identities " + data("poly_functions.json") + " --samples 150 --seed 4 --quiet --json " + out;
    ASSERT_EQ(run(cmd).status, 0);
    std::string first = slurp(out);
    ASSERT_EQ(run(cmd).status, 0);
    EXPECT_EQ(first, slurp(out));
    json rep = json::parse(first);
    EXPECT_EQ(rep["tool"], "torusmod");
    EXPECT_EQ(rep["status"], "pass");
}

TEST_F(Cli, CheckSimple) {
    EXPECT_EQ(run("check-simple " + data("sl2_trivial_sum.json") + " --box 2 --samples 50").status, 0);
}
