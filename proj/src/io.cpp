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

#include "mqsym/io.hpp"

#include <istream>
#include <iterator>
#include <set>

#include "mqsym/error.hpp"

namespace mqsym {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object()) {
        throw ParseError("expected a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return *it;
}

int int_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

double number_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number()) {
        throw ParseError(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

void expect_format(const Json &j, const char *format) {
    const Json &f = field(j, "format");
    if (!f.is_string() || f.get<std::string>() != format) {
        throw ParseError(std::string("expected format '") + format + "'");
    }
}

void check_shape(int num_sites, int local_dim) {
    if (local_dim < 2) {
        throw ParseError("local_dim must be >= 2, got " + std::to_string(local_dim));
    }
    if (num_sites < 1 || num_sites > kMaxSites) {
        throw ParseError("site count " + std::to_string(num_sites) + " out of range 1.." + std::to_string(kMaxSites));
    }
}

IndexTuple digits_field(const Json &j, const char *key, int num_sites, int local_dim) {
    const Json &v = field(j, key);
    if (!v.is_array() || static_cast<int>(v.size()) != num_sites) {
        throw ParseError(std::string("'") + key + "' must be an array of " + std::to_string(num_sites) + " digits");
    }
    IndexTuple out;
    out.reserve(v.size());
    for (const Json &d : v) {
        if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() >= local_dim) {
            throw ParseError(std::string("'") + key + "' digit " + d.dump() + " out of range 0.." +
                             std::to_string(local_dim - 1));
        }
        out.push_back(d.get<int>());
    }
    return out;
}

Json digits_json(std::uint64_t flat, int num_sites, int local_dim) {
    Json out = Json::array();
    for (int d : decode(flat, num_sites, local_dim)) {
        out.push_back(d);
    }
    return out;
}

std::string slurp(std::istream &in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw Error("read failed");
    }
    return text;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

StateVector state_from_json(const Json &j) {
    expect_format(j, "mqstate-v1");
    const int local_dim = int_field(j, "local_dim");
    const int num_sites = int_field(j, "num_sites");
    check_shape(num_sites, local_dim);
    StateVector psi(num_sites, local_dim);
    const Json &amps = field(j, "amplitudes");
    if (!amps.is_array()) {
        throw ParseError("'amplitudes' must be an array");
    }
    std::set<std::uint64_t> seen;
    for (const Json &entry : amps) {
        const IndexTuple digits = digits_field(entry, "index", num_sites, local_dim);
        const std::uint64_t flat = encode(digits, local_dim);
        if (!seen.insert(flat).second) {
            throw ParseError("duplicate amplitude index " + field(entry, "index").dump());
        }
        psi[flat] = Complex{number_field(entry, "re"), number_field(entry, "im")};
    }
    return psi;
}

Json state_to_json(const StateVector &psi, double drop_tol) {
    Json out;
    out["format"] = "mqstate-v1";
    out["local_dim"] = psi.local_dim();
    out["num_sites"] = psi.num_sites();
    Json amps = Json::array();
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        const Complex z = psi[k];
        if (std::abs(z) <= drop_tol) {
            continue;
        }
        Json entry;
        entry["index"] = digits_json(k, psi.num_sites(), psi.local_dim());
        entry["re"] = z.real();
        entry["im"] = z.imag();
        amps.push_back(std::move(entry));
    }
    out["amplitudes"] = std::move(amps);
    return out;
}

DensityMatrix density_from_json(const Json &j) {
    expect_format(j, "mqdm-v1");
    const int local_dim = int_field(j, "local_dim");
    const Json &sites_json = field(j, "sites");
    if (!sites_json.is_array()) {
        throw ParseError("'sites' must be an array");
    }
    std::vector<int> sites;
    for (const Json &s : sites_json) {
        if (!s.is_number_integer()) {
            throw ParseError("site labels must be integers");
        }
        sites.push_back(s.get<int>());
    }
    check_shape(static_cast<int>(sites.size()), local_dim);
    const int k = static_cast<int>(sites.size());
    const auto dim = static_cast<Eigen::Index>(checked_dimension(k, local_dim));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const Json &entries = field(j, "entries");
    if (!entries.is_array()) {
        throw ParseError("'entries' must be an array");
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const Json &entry : entries) {
        const std::uint64_t r = encode(digits_field(entry, "row", k, local_dim), local_dim);
        const std::uint64_t c = encode(digits_field(entry, "col", k, local_dim), local_dim);
        if (!seen.insert({r, c}).second) {
            throw ParseError("duplicate density matrix entry");
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            Complex{number_field(entry, "re"), number_field(entry, "im")};
    }
    try {
        return DensityMatrix(std::move(sites), local_dim, std::move(m));
    } catch (const InvalidArgument &e) {
        throw ParseError(e.what());
    }
}

Json density_to_json(const DensityMatrix &rho, double drop_tol) {
    Json out;
    out["format"] = "mqdm-v1";
    out["local_dim"] = rho.local_dim();
    out["sites"] = rho.sites();
    Json entries = Json::array();
    const auto &m = rho.entries();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Complex z = m(r, c);
            if (std::abs(z) <= drop_tol) {
                continue;
            }
            Json entry;
            entry["row"] = digits_json(static_cast<std::uint64_t>(r), rho.num_sites(), rho.local_dim());
            entry["col"] = digits_json(static_cast<std::uint64_t>(c), rho.num_sites(), rho.local_dim());
            entry["re"] = z.real();
            entry["im"] = z.imag();
            entries.push_back(std::move(entry));
        }
    }
    out["entries"] = std::move(entries);
    return out;
}

StateVector read_state(std::istream &in) { return state_from_json(parse_json(slurp(in))); }

DensityMatrix read_density(std::istream &in) { return density_from_json(parse_json(slurp(in))); }

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json partition_to_json(const Partition &p) {
    Json out = Json::array();
    for (SubsetMask block : p.blocks()) {
        out.push_back(block.labels());
    }
    return out;
}

Json to_json(const SymmetryReport &report) {
    Json out;
    out["class"] = to_string(report.exchange_class);
    Json list = Json::array();
    for (const TranspositionResult &t : report.transpositions) {
        Json entry;
        entry["pair"] = {t.i, t.j};
        switch (t.verdict) {
            case TranspositionVerdict::plus_one:
                entry["lambda"] = 1;
                break;
            case TranspositionVerdict::minus_one:
                entry["lambda"] = -1;
                break;
            case TranspositionVerdict::not_eigenstate:
                entry["lambda"] = nullptr;
                break;
        }
        entry["residual"] = t.residual;
        list.push_back(std::move(entry));
    }
    out["transpositions"] = std::move(list);
    return out;
}

Json to_json(const FactorizationResult &result) {
    Json out;
    out["M"] = result.M();
    out["class"] = to_string(result.separability);
    out["partition"] = partition_to_json(result.finest);
    Json blocks = Json::array();
    for (const FactorBlock &b : result.blocks) {
        Json entry;
        entry["sites"] = b.sites.labels();
        entry["state"] = state_to_json(b.state);
        blocks.push_back(std::move(entry));
    }
    out["blocks"] = std::move(blocks);
    out["global_phase"] = complex_to_json(result.global_phase);
    out["residual"] = result.residual;
    return out;
}

Json to_json(const EquipollenceVerdict &verdict) {
    Json out;
    out["status"] = to_string(verdict.status);
    out["phase"] = verdict.phase ? complex_to_json(*verdict.phase) : Json(nullptr);
    out["max_deviation"] = verdict.max_deviation;
    return out;
}

Json to_json(const CheckVerdict &verdict) {
    Json out;
    out["claim"] = verdict.claim;
    out["passed"] = verdict.passed();
    out["trials"] = verdict.trials;
    out["skipped"] = verdict.skipped;
    out["failures"] = verdict.failures;
    out["max_residual"] = verdict.max_residual;
    Json tallies = Json::object();
    for (const auto &[k, v] : verdict.tallies) {
        tallies[k] = v;
    }
    out["tallies"] = std::move(tallies);
    Json metrics = Json::object();
    for (const auto &[k, v] : verdict.metrics) {
        metrics[k] = v;
    }
    out["metrics"] = std::move(metrics);
    Json examples = Json::array();
    for (const Counterexample &c : verdict.counterexamples) {
        Json entry;
        entry["trial"] = c.trial;
        entry["seed"] = c.seed;
        entry["note"] = c.note;
        if (c.state) {
            entry["state"] = state_to_json(*c.state);
        }
        if (c.density) {
            entry["density"] = density_to_json(*c.density);
        }
        examples.push_back(std::move(entry));
    }
    out["counterexamples"] = std::move(examples);
    out["skip_log"] = verdict.skip_log;
    return out;
}

}  // namespace mqsym
