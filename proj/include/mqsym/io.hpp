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

/**
 * @file
 * JSON file formats and JSON views of analysis results.
 *
 * mqstate-v1 stores a pure state as a sparse amplitude list keyed by digit
 * tuples; omitted tuples are zero. mqdm-v1 stores a density matrix on an
 * ordered site list as sparse (row, col) entries. Digits are 0-based, site
 * labels 1-based.
 */
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mqsym/factorization.hpp"
#include "mqsym/permutation.hpp"
#include "mqsym/state.hpp"
#include "mqsym/verifier.hpp"

namespace mqsym {

using Json = nlohmann::ordered_json;

/// Entries with modulus at or below this are left out when writing.
inline constexpr double kWriteZeroTol = 0.0;

StateVector state_from_json(const Json &j);
Json state_to_json(const StateVector &psi, double drop_tol = kWriteZeroTol);
DensityMatrix density_from_json(const Json &j);
Json density_to_json(const DensityMatrix &rho, double drop_tol = kWriteZeroTol);

/// Parses text into JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string &text);

StateVector read_state(std::istream &in);
DensityMatrix read_density(std::istream &in);

Json complex_to_json(Complex z);
Json partition_to_json(const Partition &p);
Json to_json(const SymmetryReport &report);
Json to_json(const FactorizationResult &result);
Json to_json(const EquipollenceVerdict &verdict);
Json to_json(const CheckVerdict &verdict);

}  // namespace mqsym
