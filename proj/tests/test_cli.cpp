// Copyright 2026 The mqsym Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mqsym/generators.hpp"
#include "mqsym/io.hpp"

using namespace mqsym;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

CliRun run(const std::string &args) {
    const std::string cmd = std::string(MQSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mqsym_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string write_state(const std::string &name, const StateVector &psi) {
        return write(name, state_to_json(psi).dump());
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

StateVector ket(std::initializer_list<int> digits) { return StateVector::basis(2, std::vector<int>(digits)); }

}  // namespace

TEST_F(cli, classify_examples) {
    CliRun r = run("classify " + write_state("ghz.json", ghz(3)));
    ASSERT_EQ(r.code, 0) << r.out;
    Json j = r.json();
    ASSERT_EQ(j["symmetry"]["class"], "symmetric");
    ASSERT_EQ(j["factorization"]["M"], 1);
    ASSERT_EQ(j["factorization"]["class"], "globally_entangled");
    ASSERT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);

    j = run("factorize " + write_state("zero.json", ket({0, 0, 0}))).json();
    ASSERT_EQ(j["symmetry"]["class"], "symmetric");
    ASSERT_EQ(j["factorization"]["M"], 3);
    ASSERT_EQ(j["factorization"]["class"], "fully_separable");
    for (const Json &row : j["equipollence"])
        for (const Json &cell : row) ASSERT_EQ(cell["status"], "strict");

    j = run("classify " + write_state("singlet.json", normalize(ket({0, 1}) - ket({1, 0})))).json();
    ASSERT_EQ(j["symmetry"]["class"], "antisymmetric");
    ASSERT_EQ(j["factorization"]["M"], 1);
}

TEST_F(cli, classify_reports_original_norm) {
    const Json j = run("classify " + write_state("two.json", 2.0 * ket({0, 1}))).json();
    ASSERT_DOUBLE_EQ(j["norm"].get<double>(), 2.0);
    ASSERT_EQ(j["factorization"]["M"], 2);
}

TEST_F(cli, digest_is_sha256_of_file_bytes) {
    const std::string f = write("abc.json", R"({"format":"mqstate-v1","local_dim":2,"num_sites":1,"amplitudes":[{"index":[0],"re":1,"im":0}]})");
    const Json a = run("classify " + f).json();
    const Json b = run("classify " + write("abc2.json", R"({"num_sites":1,"format":"mqstate-v1","local_dim":2,"amplitudes":[{"index":[0],"re":1,"im":0}]})")).json();
    ASSERT_NE(a["input_digest"], b["input_digest"]);
    ASSERT_EQ(a["input_digest"].get<std::string>().size(), 7u + 64u);
}

TEST_F(cli, symmetrize_and_reduce_examples) {
    CliRun r = run("symmetrize " + write_state("p01.json", ket({0, 1})));
    ASSERT_EQ(r.code, 0);
    StateVector out = state_from_json(r.json());
    ASSERT_LT((out.amplitudes() - (0.5 * (ket({0, 1}) + ket({1, 0}))).amplitudes()).norm(), 1e-15);

    r = run("symmetrize --normalize " + path("p01.json") + " --out " + path("sym.json"));
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.json()["written"], path("sym.json"));
    std::ifstream in(path("sym.json"));
    ASSERT_NEAR(read_state(in).norm(), 1.0, 1e-15);

    r = run("reduce " + write_state("ghz.json", ghz(3)) + " --keep 1");
    ASSERT_EQ(r.code, 0);
    const DensityMatrix rho = density_from_json(r.json());
    ASSERT_LT((rho.entries() - Eigen::MatrixXcd::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);

    r = run("reduce " + path("ghz.json") + " --keep 3,1");
    ASSERT_EQ(density_from_json(r.json()).sites(), (std::vector<int>{1, 3}));
}

TEST_F(cli, gen_examples) {
    CliRun r = run("gen dicke --sites 4 --k 2");
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    ASSERT_EQ(j["amplitudes"].size(), 6u);
    for (const Json &a : j["amplitudes"]) ASSERT_NEAR(a["re"].get<double>(), 1.0 / std::sqrt(6.0), 1e-15);

    ASSERT_EQ(run("gen random --sites 3 --seed 5").out, run("--seed 5 gen random --sites 3").out);
    ASSERT_NE(run("gen random --sites 3 --seed 5").out, run("gen random --sites 3 --seed 6").out);
}

TEST_F(cli, gen_classify_round_trip) {
    struct Case {
        std::string args;
        std::string symmetry;
        int m;
    };
    const std::vector<Case> cases{
        {"ghz --sites 4", "symmetric", 1},
        {"ghz --sites 3 --dim 3", "symmetric", 1},
        {"w --sites 4", "symmetric", 1},
        {"dicke --sites 5 --k 2", "symmetric", 1},
        {"dicke --sites 3 --k 0", "symmetric", 3},
        {"slater --sites 3 --dim 4 --levels 0,2,3", "antisymmetric", 1},
        {"random-product --sites 4 --seed 2", "none", 4},
        {"random-symmetric --sites 3 --seed 2", "symmetric", 1},
        {"random-antisymmetric --sites 3 --dim 3 --seed 2", "antisymmetric", 1},
        {"equipollent-product --sites 4 --dim 3 --seed 2", "symmetric", 4},
    };
    for (const Case &c : cases) {
        const std::string file = path("gen.json");
        ASSERT_EQ(run("gen " + c.args + " --out " + file).code, 0) << c.args;
        const Json j = run("factorize " + file).json();
        ASSERT_EQ(j["symmetry"]["class"], c.symmetry) << c.args;
        ASSERT_EQ(j["factorization"]["M"], c.m) << c.args;
    }
}

TEST_F(cli, verify_exit_codes) {
    CliRun r = run("verify --suite prop2 --trials 20 --sites 3 --dim 2 --seed 4");
    ASSERT_EQ(r.code, 0);
    ASSERT_TRUE(r.json()["passed"].get<bool>());
    ASSERT_EQ(r.json()["trials"], 20);

    r = run("verify --suite theorem1 --trials 50 --sites 4 --dim 2 --tol 0.5");
    ASSERT_EQ(r.code, 1);
    ASSERT_FALSE(r.json()["passed"].get<bool>());

    r = run("verify --suite all --trials 5 --sites 3 --dim 2");
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.json()["suites"].size(), 7u);

    ASSERT_EQ(run("verify --suite nope").code, 6);
}

TEST_F(cli, error_exit_codes) {
    struct Case {
        std::string args;
        int code;
        std::string kind;
    };
    const std::vector<Case> cases{
        {"classify " + write("bad.json", "{oops"), 2, "parse_error"},
        {"classify " + write("dup.json", R"({"format":"mqstate-v1","local_dim":2,"num_sites":1,"amplitudes":[{"index":[0],"re":1,"im":0},{"index":[0],"re":1,"im":0}]})"), 2, "parse_error"},
        {"frobnicate", 2, "usage"},
        {"classify", 2, "usage"},
        {"classify " + write("big.json", R"({"format":"mqstate-v1","local_dim":2,"num_sites":40,"amplitudes":[]})"), 3, "dimension_overflow"},
        {"classify " + write("zero.json", R"({"format":"mqstate-v1","local_dim":2,"num_sites":2,"amplitudes":[]})"), 4, "zero_state"},
        {"symmetrize --normalize " + write_state("singlet.json", normalize(ket({0, 1}) - ket({1, 0}))), 4, "zero_state"},
        {"classify " + path("missing.json"), 5, "io_error"},
        {"gen ghz --sites 2 --out " + path("no/such/dir/x.json"), 5, "io_error"},
        {"gen slater --sites 3 --dim 2 --levels 0,1,2", 6, "invalid_argument"},
        {"gen bogus", 6, "invalid_argument"},
        {"reduce " + write_state("p.json", ket({0, 1})) + " --keep 3", 6, "invalid_argument"},
    };
    for (const Case &c : cases) {
        const CliRun r = run(c.args);
        ASSERT_EQ(r.code, c.code) << c.args << "\n" << r.out;
        ASSERT_EQ(r.json()["error"]["kind"], c.kind) << c.args;
    }
}

TEST_F(cli, symmetrize_without_normalize_writes_zero_projection) {
    const CliRun r = run("symmetrize " + write_state("singlet.json", normalize(ket({0, 1}) - ket({1, 0}))));
    ASSERT_EQ(r.code, 0);
    ASSERT_LT(state_from_json(r.json()).norm(), 1e-15);
}

TEST_F(cli, pretty_flag_indents) {
    const CliRun flat = run("gen ghz --sites 2");
    const CliRun pretty = run("gen ghz --sites 2 --pretty");
    ASSERT_EQ(flat.json(), pretty.json());
    ASSERT_EQ(std::count(flat.out.begin(), flat.out.end(), '\n'), 1);
    ASSERT_GT(std::count(pretty.out.begin(), pretty.out.end(), '\n'), 5);
}
