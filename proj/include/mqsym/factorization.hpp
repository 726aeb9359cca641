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
 * Product structure of pure states.
 *
 * A subset S of labels factors out of psi when psi = |S> (x) |complement>,
 * which for a pure state is equivalent to the reduced state on S being pure.
 * Factoring subsets are closed under intersection, so every label i has a
 * unique smallest factoring block, and those blocks form the finest product
 * partition of psi. Its block count is the maximal partition number M(psi).
 */
#pragma once

#include <unordered_map>
#include <vector>

#include "mqsym/partition.hpp"
#include "mqsym/state.hpp"

namespace mqsym {

enum class SeparabilityClass { fully_separable, globally_entangled, partially_entangled };

const char *to_string(SeparabilityClass c);

struct FactorBlock {
    SubsetMask sites;
    /// State on `sites` (ascending labels), phase-fixed so its first amplitude
    /// of modulus above sqrt(tol) is real and positive.
    StateVector state;
};

struct FactorizationResult {
    Partition finest;
    std::vector<FactorBlock> blocks;
    /// psi = global_phase * (x)_k blocks[k].state
    Complex global_phase{1.0, 0.0};
    SeparabilityClass separability = SeparabilityClass::globally_entangled;
    /// ||global_phase * (x)_k blocks[k].state - psi||
    double residual = 0.0;

    std::size_t M() const { return finest.size(); }
    int num_sites() const { return finest.num_sites(); }
    /// Reassembles psi from the blocks and global phase.
    StateVector reconstruct() const;
};

/// Memoizing purity oracle for one pure state. Purity of S and of its
/// complement coincide for pure states, so each lookup fills both entries.
class SubsetPurityCache {
  public:
    explicit SubsetPurityCache(const StateVector &psi);

    /// Tr(rho_S^2) for nonempty S; 1 for S = all sites.
    double purity(SubsetMask subset);
    bool factors(SubsetMask subset, double tol) { return purity(subset) > 1.0 - tol; }
    std::size_t evaluations() const { return evaluations_; }
    const StateVector &state() const { return psi_; }

  private:
    const StateVector &psi_;
    std::unordered_map<std::uint64_t, double> memo_;
    std::size_t evaluations_ = 0;
};

/// True iff purity(Tr_{complement} |psi><psi|) > 1 - tol. Always true for S = all sites.
/// Throws on empty S or unnormalized psi.
bool is_factoring_subset(const StateVector &psi, SubsetMask subset, double tol = kPureTol);

/// Smallest factoring subset containing `label`, searched by increasing size with
/// ties broken by mask value. Never fails: the full label set always factors.
SubsetMask minimal_factoring_block(const StateVector &psi, int label, double tol = kPureTol);
SubsetMask minimal_factoring_block(SubsetPurityCache &cache, int label, double tol = kPureTol,
                                   SubsetMask search_within = SubsetMask(~std::uint64_t{0}));

/// Finest product decomposition. Throws ToleranceError when the reassembled
/// state misses psi by more than 10 * tol.
FactorizationResult finest_factorization(const StateVector &psi, double tol = kPureTol);

/// True iff labels i and j sit in different blocks of result.finest.
bool separates(const FactorizationResult &result, int i, int j);

}  // namespace mqsym
