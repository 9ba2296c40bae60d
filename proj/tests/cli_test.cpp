// Copyright 2026 The Counterlab Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Result cli(const std::string &args) {
    std::string command = std::string(COUNTERLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        r.out.append(buffer, n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void dump(const fs::path &p, const std::string &text) {
    std::ofstream(p, std::ios::binary) << text;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("counterlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    // Emits a zoo machine to a file and returns its path.
    std::string emit(const std::string &name) {
        std::string p = path(name + ".cma");
        EXPECT_EQ(cli("zoo emit " + name + " --out " + p).code, 0);
        return p;
    }

    fs::path dir_;
};

std::string replace_once(std::string text, const std::string &from, const std::string &to) {
    auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    if (at != std::string::npos) {
        text.replace(at, from.size(), to);
    }
    return text;
}

TEST_F(Cli, ValidateAndRun) {
    std::string f = emit("eq-star-p1bca-k2");
    Result v = cli("validate " + f);
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "OK\n");
    Result r = cli("run " + f + " --input abbaab");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "accept=1/2 reject=1/2 dontknow=0/1\n");
    EXPECT_EQ(cli("run " + f + " --input ''").out, "accept=1/1 reject=0/1 dontknow=0/1\n");
    EXPECT_EQ(cli("run " + f + " --input abc").code, 2);
}

TEST_F(Cli, LasVegasVerdict) {
    std::string f = emit("onenone-lv");
    EXPECT_EQ(cli("run " + f + " --input aabcddddabbccccdddddddd").out, "accept=1/3 reject=0/1 dontknow=2/3\n");
    Result s = cli("run " + f + " --input aabcddddabbccccdddddddd --sample --seed 7");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, cli("run " + f + " --input aabcddddabbccccdddddddd --sample --seed 7").out);
    EXPECT_EQ(cli("run " + f + " --input abcd --sample").code, 2);
}

TEST_F(Cli, ValidateReportsBrokenStochasticity) {
    std::string text = slurp(emit("eq-star-p1bca-k2"));
    dump(path("broken.cma"), replace_once(text, "-> a2 , 2 @ 1/2", "-> a2 , 2 @ 1/3"));
    Result v = cli("validate " + path("broken.cma"));
    EXPECT_EQ(v.code, 2);
    EXPECT_NE(v.out.find("(start, a, "), std::string::npos) << v.out;
}

TEST_F(Cli, ValidateReportsSyntaxError) {
    dump(path("bad.cma"), "machine x\nclass p1ca\nalphabet a\nstates q\ninitial q\ntrans q , a , * -> q , 0 @ 3/2\n");
    Result v = cli("validate " + path("bad.cma"));
    EXPECT_EQ(v.code, 2);
    EXPECT_NE(v.out.find("bad.cma:"), std::string::npos) << v.out;
}

TEST_F(Cli, ValidateReportsPerturbedAmplitude) {
    std::string text = slurp(emit("m1"));
    text = replace_once(text, "class d1ca", "class q1ca");
    dump(path("q.cma"), text);
    EXPECT_EQ(cli("validate " + path("q.cma")).out, "OK\n");
    dump(path("q.cma"), replace_once(text, "trans q1_1 , 0 , * -> q1_1 , 1\n", "trans q1_1 , 0 , * -> q1_1 , 1 @ 1/2\n"));
    Result v = cli("validate " + path("q.cma"));
    EXPECT_EQ(v.code, 2);
    EXPECT_FALSE(v.out.empty());
}

TEST_F(Cli, MissingFile) {
    EXPECT_EQ(cli("validate " + path("absent.cma")).code, 1);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST_F(Cli, BatchIsByteIdentical) {
    std::string a = path("a.json");
    std::string b = path("b.json");
    Result first = cli("batch --zoo eq-star-p1bca-k3 --max-n 8 --out " + a);
    EXPECT_EQ(first.code, 0);
    EXPECT_NE(first.out.find("claimed bounds hold"), std::string::npos);
    EXPECT_NE(first.out.find("max_accept_on_no=1/3"), std::string::npos);
    EXPECT_EQ(cli("batch --zoo eq-star-p1bca-k3 --max-n 8 --out " + b).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_NE(slurp(a).find("\"input\": \"abab\""), std::string::npos);
    Result stdout_run = cli("batch --zoo eq-star-p1bca-k3 --max-n 8");
    EXPECT_EQ(stdout_run.out, slurp(a));
}

TEST_F(Cli, BatchWithFile) {
    std::string f = emit("eq3-p1bca-k4");
    EXPECT_EQ(cli("batch " + f + " --problem eq3 --max-n 6 --out " + path("r.json")).code, 0);
    EXPECT_EQ(cli("batch " + f + " --max-n 6").code, 2);
    EXPECT_EQ(cli("batch " + f + " --problem nope --max-n 6").code, 2);
}

TEST_F(Cli, BatchOnForeignProblem) {
    // Claimed bounds belong to the machine's own problem and are not checked elsewhere.
    Result r = cli("batch --zoo m1 --problem xor-eq --max-n 19 --out " + path("r.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("max_accept_on_no=1/1"), std::string::npos);
    EXPECT_EQ(r.out.find("claimed bounds"), std::string::npos);
}

TEST_F(Cli, AdversaryBrute) {
    Result none = cli("adversary brute zoo:eq-star-p1bca-k3 --problem eq-star --max-n 10 --rule threshold");
    EXPECT_EQ(none.code, 3);
    EXPECT_NE(none.out.find("\"misclassification\": null"), std::string::npos);
    Result hit = cli("adversary brute zoo:m1 --problem xor-eq --max-n 19");
    EXPECT_EQ(hit.code, 0);
    EXPECT_NE(hit.out.find("\"misclassification\": {"), std::string::npos);
    EXPECT_EQ(cli("adversary brute zoo:m1 --problem xor-eq").code, 2);
    EXPECT_EQ(cli("adversary brute zoo:m1 --problem xor-eq --max-n 19 --rule bogus").code, 2);
}

TEST_F(Cli, AdversaryFoolAndPump) {
    Result fool = cli("adversary fool-xoreq zoo:m2");
    EXPECT_EQ(fool.code, 0);
    EXPECT_NE(fool.out.find("\"prefix\": \"00#00#\""), std::string::npos) << fool.out;
    EXPECT_EQ(cli("adversary fool-xoreq zoo:eq-star-p1bca-k3").code, 2);

    dump(path("all.cma"),
         "machine all\nclass u1bca\nalphabet a b\nstates q\ninitial q\naccept q\n"
         "trans q , LEND , * -> q , 0 @ 1\ntrans q , a , * -> q , 0 @ 1\n"
         "trans q , b , * -> q , 0 @ 1\ntrans q , REND , * -> q , 0 @ 1\n");
    Result pump = cli("adversary pump-u1bca " + path("all.cma"));
    EXPECT_EQ(pump.code, 0);
    EXPECT_NE(pump.out.find("accepts a member of EQ*"), std::string::npos) << pump.out;
    EXPECT_EQ(cli("adversary pump-u1bca " + path("all.cma") + " --input ab").code, 2);
}

TEST_F(Cli, Zoo) {
    Result list = cli("zoo list");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("lang-L-p1ca-k<k>\n"), std::string::npos);
    EXPECT_EQ(cli("zoo emit nope").code, 2);
    EXPECT_EQ(cli("zoo emit m1").out, slurp(emit("m1")));
}

}  // namespace
