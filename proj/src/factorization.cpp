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

#include "mqsym/factorization.hpp"

#include <cmath>
#include <string>

#include "mqsym/error.hpp"

namespace mqsym {

namespace {

// Bit b of `pattern` selects labels[b].
SubsetMask expand(std::uint64_t pattern, const std::vector<int> &labels) {
    SubsetMask out;
    for (std::size_t b = 0; b < labels.size(); ++b) {
        if ((pattern >> b) & 1U) {
            out |= SubsetMask::single(labels[b]);
        }
    }
    return out;
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

StateVector fix_phase(StateVector state, double tol) {
    const double floor = std::sqrt(tol);
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        if (std::abs(state[k]) > floor) {
            state *= std::conj(state[k]) / std::abs(state[k]);
            state[k] = std::abs(state[k]);
            break;
        }
    }
    return state;
}

StateVector dominant_eigenvector(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries());
    const Eigen::Index top = solver.eigenvalues().size() - 1;
    return StateVector(rho.num_sites(), rho.local_dim(), solver.eigenvectors().col(top));
}

}  // namespace

const char *to_string(SeparabilityClass c) {
    switch (c) {
        case SeparabilityClass::fully_separable:
            return "fully_separable";
        case SeparabilityClass::globally_entangled:
            return "globally_entangled";
        case SeparabilityClass::partially_entangled:
            return "partially_entangled";
    }
    return "?";
}

StateVector FactorizationResult::reconstruct() const {
    std::vector<std::pair<SubsetMask, StateVector>> parts;
    parts.reserve(blocks.size());
    for (const FactorBlock &b : blocks) {
        parts.emplace_back(b.sites, b.state);
    }
    StateVector out = tensor_product(parts, finest.num_sites());
    out *= global_phase;
    return out;
}

SubsetPurityCache::SubsetPurityCache(const StateVector &psi) : psi_(psi) {
    if (!psi.is_normalized(kNormTol)) {
        throw InvalidArgument("factorization needs a normalized state (norm " + std::to_string(psi.norm()) + ")");
    }
}

double SubsetPurityCache::purity(SubsetMask subset) {
    const int num_sites = psi_.num_sites();
    const SubsetMask all = SubsetMask::full(num_sites);
    if (subset.empty()) {
        throw InvalidArgument("factoring test on the empty set");
    }
    if (!subset.is_subset_of(all)) {
        throw InvalidArgument("subset " + subset.str() + " exceeds the state's sites");
    }
    if (subset == all) {
        return 1.0;
    }
    if (auto it = memo_.find(subset.bits()); it != memo_.end()) {
        return it->second;
    }
    const SubsetMask rest = complement(subset, num_sites);
    const SubsetMask smaller = subset.size() <= rest.size() ? subset : rest;
    const double p = mqsym::purity(partial_trace(psi_, smaller));
    ++evaluations_;
    memo_.emplace(subset.bits(), p);
    memo_.emplace(rest.bits(), p);
    return p;
}

bool is_factoring_subset(const StateVector &psi, SubsetMask subset, double tol) {
    if (subset.empty()) {
        throw InvalidArgument("factoring test on the empty set");
    }
    const SubsetMask all = SubsetMask::full(psi.num_sites());
    if (!subset.is_subset_of(all)) {
        throw InvalidArgument("subset " + subset.str() + " exceeds the state's sites");
    }
    if (!psi.is_normalized(kNormTol)) {
        throw InvalidArgument("factoring test needs a normalized state");
    }
    if (subset == all) {
        return true;
    }
    return purity(partial_trace(psi, subset)) > 1.0 - tol;
}

SubsetMask minimal_factoring_block(SubsetPurityCache &cache, int label, double tol, SubsetMask search_within) {
    const int num_sites = cache.state().num_sites();
    if (label < 1 || label > num_sites) {
        throw InvalidArgument("label " + std::to_string(label) + " outside 1.." + std::to_string(num_sites));
    }
    const SubsetMask within = search_within & SubsetMask::full(num_sites);
    if (!within.contains(label)) {
        throw InvalidArgument("search set does not contain label " + std::to_string(label));
    }
    const std::vector<int> labels = within.labels();
    const auto m = static_cast<int>(labels.size());
    for (int k = 1; k < m; ++k) {
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t pattern = (std::uint64_t{1} << k) - 1; pattern < limit;
             pattern = next_combination(pattern)) {
            const SubsetMask candidate = expand(pattern, labels);
            if (candidate.contains(label) && cache.factors(candidate, tol)) {
                return candidate;
            }
        }
    }
    return within;
}

SubsetMask minimal_factoring_block(const StateVector &psi, int label, double tol) {
    SubsetPurityCache cache(psi);
    return minimal_factoring_block(cache, label, tol);
}

FactorizationResult finest_factorization(const StateVector &psi, double tol) {
    SubsetPurityCache cache(psi);
    const int num_sites = psi.num_sites();
    std::vector<SubsetMask> masks;
    SubsetMask uncovered = SubsetMask::full(num_sites);
    // Blocks are disjoint, so each search only needs the labels not yet assigned.
    while (!uncovered.empty()) {
        const SubsetMask block = minimal_factoring_block(cache, uncovered.lowest(), tol, uncovered);
        masks.push_back(block);
        uncovered = SubsetMask(uncovered.bits() & ~block.bits());
    }

    FactorizationResult result{Partition::validate(masks, num_sites), {}, {1.0, 0.0},
                               SeparabilityClass::globally_entangled, 0.0};
    for (SubsetMask block : result.finest.blocks()) {
        StateVector state = block.size() == num_sites ? psi : dominant_eigenvector(partial_trace(psi, block));
        result.blocks.push_back({block, fix_phase(std::move(state), tol)});
    }

    StateVector assembled = result.reconstruct();
    const Complex overlap = inner(assembled, psi);
    if (std::abs(overlap) > 0.0) {
        result.global_phase = overlap / std::abs(overlap);
    }
    assembled *= result.global_phase;
    result.residual = (assembled.amplitudes() - psi.amplitudes()).norm();
    if (result.residual > 10.0 * tol) {
        throw ToleranceError("reconstruction residual " + std::to_string(result.residual) +
                             " exceeds 10 * tol; the state sits too close to a product boundary for tol " +
                             std::to_string(tol));
    }

    const std::size_t m = result.finest.size();
    if (m == static_cast<std::size_t>(num_sites)) {
        result.separability = SeparabilityClass::fully_separable;
    } else if (m == 1) {
        result.separability = SeparabilityClass::globally_entangled;
    } else {
        result.separability = SeparabilityClass::partially_entangled;
    }
    return result;
}

bool separates(const FactorizationResult &result, int i, int j) {
    return result.finest.block_of(i) != result.finest.block_of(j);
}

}  // namespace mqsym
