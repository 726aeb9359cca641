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

#pragma once

#include <string>

#include "mqsym/io.hpp"

namespace mqsym {

const char *tool_version();

/// Full analysis of one input state: norm, exchange symmetry, finest
/// factorization and, when every block is a single site, the pairwise
/// equipollence matrix. Field order is fixed.
///
/// `psi` may be unnormalized; its norm is reported and the analysis runs on
/// psi / ||psi||. Throws ZeroStateError when ||psi|| <= zero_tol.
Json build_report(const StateVector &psi, const std::string &input_digest, double tol = kPureTol,
                  double zero_tol = kZeroTol);

}  // namespace mqsym
