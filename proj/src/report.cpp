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

#include "mqsym/report.hpp"

#include "mqsym/factorization.hpp"
#include "mqsym/permutation.hpp"

namespace mqsym {

const char *tool_version() { return MQSYM_VERSION; }

Json build_report(const StateVector &psi, const std::string &input_digest, double tol, double zero_tol) {
    const StateVector unit = normalize(psi, zero_tol);
    const FactorizationResult f = finest_factorization(unit, tol);

    Json out;
    out["tool_version"] = tool_version();
    out["input_digest"] = input_digest;
    out["num_sites"] = psi.num_sites();
    out["local_dim"] = psi.local_dim();
    out["norm"] = psi.norm();
    out["symmetry"] = to_json(classify_exchange(unit, tol));
    out["factorization"] = to_json(f);
    if (f.M() == static_cast<std::size_t>(psi.num_sites())) {
        Json matrix = Json::array();
        for (const FactorBlock &a : f.blocks) {
            Json row = Json::array();
            for (const FactorBlock &b : f.blocks) {
                row.push_back(to_json(equipollent(a.state.amplitudes(), b.state.amplitudes())));
            }
            matrix.push_back(std::move(row));
        }
        out["equipollence"] = std::move(matrix);
    } else {
        out["equipollence"] = nullptr;
    }
    return out;
}

}  // namespace mqsym
