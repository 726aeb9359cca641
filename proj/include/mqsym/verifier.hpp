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
 * Seeded randomized checks of the structural claims relating exchange
 * symmetry to product structure.
 *
 * Each check draws `trials` inputs from seeds derived from (seed, trial), so
 * a failing trial can be replayed from its recorded seed alone. Inputs whose
 * premise does not hold are counted in `skipped`, never in `trials`, so a
 * pass is not vacuous unless `trials` is zero.
 *
 * Suites:
 *   lemma1      two factoring partitions imply factoring over their meet
 *   theorem1    antisymmetric => M = 1; symmetric => M in {1, N}, with strictly
 *               equipollent constituents when M = N
 *   prop1       transposition eigenstates: lambda = -1 keeps i, j in one block;
 *               lambda = +1 either does too or splits them into strictly
 *               equipollent single-site factors
 *   prop2       a product state is never annihilated by the symmetrizer
 *   prop3       a non-symmetric product state loses full separability under T
 *   corollary2  symmetric fully separable states are exactly (x) U|0>
 *   lemma3      direct separability of mixed states is closed under meet
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mqsym/generators.hpp"
#include "mqsym/partition.hpp"
#include "mqsym/state.hpp"

namespace mqsym {

struct CheckOptions {
    int trials = 100;
    int num_sites = 4;
    int local_dim = 2;
    Seed seed = 0;
    /// A subset factors when its reduced purity exceeds 1 - tol.
    double tol = kPureTol;
    double equipollence_tol = kEquipollenceTol;
    double zero_tol = kZeroTol;
    /// Bound on the reconstruction residual of a claimed factorization
    /// (theorem1) and on || (x) U|0> - psi || (corollary2 reverse direction).
    double reconstruction_tol = 1e-8;
    /// Frobenius bound for direct separability in lemma3.
    double separability_tol = 1e-10;
};

struct Counterexample {
    int trial = -1;
    Seed seed = 0;
    std::string note;
    std::optional<StateVector> state;
    std::optional<DensityMatrix> density;
};

struct CheckVerdict {
    std::string claim;
    int trials = 0;
    int skipped = 0;
    int failures = 0;
    double max_residual = 0.0;
    std::vector<Counterexample> counterexamples;
    /// Why inputs were skipped (premise filter), one line each.
    std::vector<std::string> skip_log;
    /// Named counters, e.g. how often each branch of a dichotomy was taken.
    std::map<std::string, int> tallies;
    /// Named extrema such as the smallest ||T psi|| seen.
    std::map<std::string, double> metrics;

    bool passed() const { return failures == 0; }
};

/// Counterexamples kept per verdict; failures beyond this are only counted.
inline constexpr std::size_t kMaxCounterexamples = 8;

CheckVerdict check_lemma1(const CheckOptions &options);
CheckVerdict check_theorem1(const CheckOptions &options);
CheckVerdict check_prop1_corollary1(const CheckOptions &options);
CheckVerdict check_prop2(const CheckOptions &options);
CheckVerdict check_prop3(const CheckOptions &options);
CheckVerdict check_corollary2(const CheckOptions &options);
CheckVerdict check_lemma3(const CheckOptions &options);

/// Suite ids accepted by run_suite, in a stable order.
const std::vector<std::string> &suite_ids();
/// Dispatches on a suite id; throws InvalidArgument for unknown ids.
CheckVerdict run_suite(const std::string &id, const CheckOptions &options);

/// One two-partition instance of the meet-factoring claim for a pure state.
struct MeetFactoringOutcome {
    bool premise_holds = false;
    bool conclusion_holds = false;
    /// max over meet blocks of 1 - purity of the block's reduced state.
    double max_purity_deficit = 0.0;
};

MeetFactoringOutcome check_meet_factoring(const StateVector &psi, const Partition &a, const Partition &b,
                                          double tol = kPureTol);

}  // namespace mqsym
