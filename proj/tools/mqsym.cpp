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

// mqsym command-line front end. Every command writes one JSON document to
// stdout. Exit codes:
//   0  success
//   1  a verifier suite found a counterexample
//   2  malformed input file or command line
//   3  requested dimension exceeds dense storage
//   4  zero state where a nonzero state is required
//   5  file could not be read or written
//   6  argument outside an operation's domain
//   7  factorization residual above the tolerance bound

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mqsym/error.hpp"
#include "mqsym/generators.hpp"
#include "mqsym/io.hpp"
#include "mqsym/permutation.hpp"
#include "mqsym/report.hpp"
#include "mqsym/verifier.hpp"

namespace {

using mqsym::Json;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kOverflow = 3,
    kZero = 4,
    kIo = 5,
    kInvalid = 6,
    kTolerance = 7,
};

class IoError : public mqsym::Error {
  public:
    using mqsym::Error::Error;
};

struct Globals {
    double tol = mqsym::kPureTol;
    mqsym::Seed seed = 0;
    bool pretty = false;
};

void emit(const Json &j, const Globals &g) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << std::endl; }

int fail_with(const Globals &g, const char *kind, const std::string &message, int code) {
    emit(Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}, g);
    return code;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed on '" + path + "'");
    }
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text << '\n';
    out.close();
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
}

std::string sha256_hex(const std::string &bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw mqsym::Error("sha256 failed");
    }
    std::string hex = "sha256:";
    char byte[3];
    for (unsigned int k = 0; k < len; ++k) {
        std::snprintf(byte, sizeof(byte), "%02x", md[k]);
        hex += byte;
    }
    return hex;
}

// Writes `doc` to `out_path` and prints a short receipt, or prints `doc` itself.
void deliver(const Json &doc, const std::string &out_path, const Globals &g, Json receipt) {
    if (out_path.empty()) {
        emit(doc, g);
        return;
    }
    write_file(out_path, g.pretty ? doc.dump(2) : doc.dump());
    receipt["written"] = out_path;
    emit(receipt, g);
}

mqsym::StateVector generate(const std::string &kind, int sites, int dim, int k, const std::vector<int> &levels,
                            mqsym::Seed seed) {
    if (kind == "ghz") return mqsym::ghz(sites, dim);
    if (kind == "w") return mqsym::w_state(sites);
    if (kind == "dicke") return mqsym::dicke(sites, k);
    if (kind == "slater") return mqsym::slater(sites, dim, levels);
    if (kind == "random") return mqsym::random_state(sites, dim, seed);
    if (kind == "random-product") return mqsym::random_product(sites, dim, seed);
    if (kind == "random-symmetric") return mqsym::random_symmetric(sites, dim, seed);
    if (kind == "random-antisymmetric") return mqsym::random_antisymmetric(sites, dim, seed);
    if (kind == "equipollent-product") {
        return mqsym::equipollent_product(sites, mqsym::random_local_unitary(dim, seed));
    }
    throw mqsym::InvalidArgument("unknown state kind '" + kind + "'");
}

}  // namespace

int main(int argc, char **argv) {
    Globals g;
    CLI::App app{"Exchange symmetry and product structure of multipartite pure states", "mqsym"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", mqsym::tool_version());
    app.add_option("--tol", g.tol, "Purity / residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random generators and verifier suites");
    app.add_flag("--pretty", g.pretty, "Indent JSON output");

    std::string file;
    std::string out_path;

    auto *classify = app.add_subcommand("classify", "Report exchange symmetry and factorization of a state file");
    classify->add_option("file", file, "mqstate-v1 input")->required();
    auto *factorize = app.add_subcommand("factorize", "Report the finest product decomposition of a state file");
    factorize->add_option("file", file, "mqstate-v1 input")->required();

    bool normalize_flag = false;
    auto *symmetrize = app.add_subcommand("symmetrize", "Apply the total symmetrizer T");
    symmetrize->add_option("file", file, "mqstate-v1 input")->required();
    symmetrize->add_option("--out", out_path, "Write the mqstate-v1 result here");
    symmetrize->add_flag("--normalize", normalize_flag, "Normalize T psi (fails on a zero projection)");

    std::vector<int> keep;
    auto *reduce = app.add_subcommand("reduce", "Reduced density matrix on a set of sites");
    reduce->add_option("file", file, "mqstate-v1 input")->required();
    reduce->add_option("--keep", keep, "1-based site labels to keep, comma separated")->required()->delimiter(',');
    reduce->add_option("--out", out_path, "Write the mqdm-v1 result here");

    std::string kind;
    int sites = 3;
    int dim = 2;
    int excitations = 1;
    std::vector<int> levels;
    auto *gen = app.add_subcommand("gen", "Generate a canonical or seeded random state");
    gen->add_option("kind", kind,
                    "ghz | w | dicke | slater | random | random-product | random-symmetric | "
                    "random-antisymmetric | equipollent-product")
        ->required();
    gen->add_option("--sites", sites, "Number of sites N");
    gen->add_option("--dim", dim, "Local dimension n");
    gen->add_option("--k", excitations, "Excitations for dicke");
    gen->add_option("--levels", levels, "Distinct levels for slater, comma separated")->delimiter(',');
    gen->add_option("--out", out_path, "Write the mqstate-v1 result here");

    mqsym::CheckOptions check;
    std::string suite;
    bool tol_given = false;
    auto *verify = app.add_subcommand("verify", "Run a seeded randomized check suite");
    verify->add_option("--suite", suite, "Suite id, or 'all'")->required();
    verify->add_option("--trials", check.trials, "Number of trials")->check(CLI::NonNegativeNumber);
    verify->add_option("--sites", check.num_sites, "Number of sites N");
    verify->add_option("--dim", check.local_dim, "Local dimension n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return fail_with(g, "usage", e.what(), kUsage);
    }
    tol_given = app.count("--tol") > 0;

    try {
        if (*classify || *factorize) {
            const std::string bytes = read_file(file);
            const mqsym::StateVector psi = mqsym::state_from_json(mqsym::parse_json(bytes));
            Json report = mqsym::build_report(psi, sha256_hex(bytes), g.tol);
            emit(report, g);
        } else if (*symmetrize) {
            const mqsym::StateVector psi = mqsym::state_from_json(mqsym::parse_json(read_file(file)));
            mqsym::StateVector out = mqsym::symmetrize(psi);
            const double projected_norm = out.norm();
            if (normalize_flag) {
                out = mqsym::normalize(out);
            }
            deliver(mqsym::state_to_json(out), out_path, g, Json{{"norm", projected_norm}});
        } else if (*reduce) {
            const mqsym::StateVector psi = mqsym::state_from_json(mqsym::parse_json(read_file(file)));
            const mqsym::SubsetMask mask = mqsym::SubsetMask::from_labels(keep);
            if (keep.empty() || mask.size() != static_cast<int>(keep.size()) || mask.highest() > psi.num_sites()) {
                throw mqsym::InvalidArgument("--keep needs distinct labels in 1.." + std::to_string(psi.num_sites()));
            }
            const mqsym::DensityMatrix rho = mqsym::partial_trace(mqsym::normalize(psi), mask);
            deliver(mqsym::density_to_json(rho), out_path, g, Json{{"sites", rho.sites()}});
        } else if (*gen) {
            const mqsym::StateVector psi = generate(kind, sites, dim, excitations, levels, g.seed);
            deliver(mqsym::state_to_json(psi), out_path, g, Json{{"kind", kind}});
        } else if (*verify) {
            check.seed = g.seed;
            if (tol_given) {
                check.tol = g.tol;
            }
            std::vector<std::string> ids{suite};
            if (suite == "all") {
                ids = mqsym::suite_ids();
            }
            bool passed = true;
            Json verdicts = Json::array();
            for (const std::string &id : ids) {
                const mqsym::CheckVerdict v = mqsym::run_suite(id, check);
                passed = passed && v.passed();
                verdicts.push_back(mqsym::to_json(v));
            }
            emit(suite == "all" ? Json{{"passed", passed}, {"suites", verdicts}} : verdicts.front(), g);
            return passed ? kOk : kCheckFailed;
        }
    } catch (const mqsym::ParseError &e) {
        return fail_with(g, "parse_error", e.what(), kUsage);
    } catch (const mqsym::DimensionOverflow &e) {
        return fail_with(g, "dimension_overflow", e.what(), kOverflow);
    } catch (const mqsym::ZeroStateError &e) {
        return fail_with(g, "zero_state", e.what(), kZero);
    } catch (const IoError &e) {
        return fail_with(g, "io_error", e.what(), kIo);
    } catch (const mqsym::ToleranceError &e) {
        return fail_with(g, "tolerance", e.what(), kTolerance);
    } catch (const mqsym::Error &e) {
        return fail_with(g, "invalid_argument", e.what(), kInvalid);
    }
    return kOk;
}
