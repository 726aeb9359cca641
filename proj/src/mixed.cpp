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

#include "mqsym/mixed.hpp"

#include <string>

#include "mqsym/error.hpp"

namespace mqsym {

DensityMatrix product_of_marginals(const DensityMatrix &rho, const Partition &partition) {
    if (rho.site_mask() != SubsetMask::full(partition.num_sites()) ||
        rho.num_sites() != partition.num_sites()) {
        throw InvalidArgument("density matrix on sites " + rho.site_mask().str() + " does not match a partition of 1.." +
                              std::to_string(partition.num_sites()));
    }
    std::vector<DensityMatrix> marginals;
    marginals.reserve(partition.size());
    for (SubsetMask block : partition.blocks()) {
        // Marginals come back in rho's site order; put each block ascending so
        // the product is assembled in canonical label order.
        marginals.push_back(partial_trace(rho, block).reordered(block.labels()));
    }
    return tensor_product(marginals).reordered(rho.sites());
}

DirectSeparabilityVerdict is_directly_separable(const DensityMatrix &rho, const Partition &partition, double tol) {
    const DensityMatrix product = product_of_marginals(rho, partition);
    DirectSeparabilityVerdict verdict{partition, false, frobenius_distance(rho, product)};
    verdict.is_direct = verdict.deviation < tol;
    return verdict;
}

const char *to_string(MeetStatus s) {
    switch (s) {
        case MeetStatus::holds:
            return "holds";
        case MeetStatus::premise_failed:
            return "premise_failed";
        case MeetStatus::conclusion_failed:
            return "conclusion_failed";
    }
    return "?";
}

MeetSeparabilityVerdict check_meet_separability(const DensityMatrix &rho, const Partition &a, const Partition &b,
                                                double tol) {
    MeetSeparabilityVerdict verdict{MeetStatus::premise_failed, is_directly_separable(rho, a, tol),
                                    is_directly_separable(rho, b, tol), std::nullopt};
    if (!verdict.premise_a.is_direct || !verdict.premise_b.is_direct) {
        return verdict;
    }
    verdict.conclusion = is_directly_separable(rho, meet(a, b), tol);
    verdict.status = verdict.conclusion->is_direct ? MeetStatus::holds : MeetStatus::conclusion_failed;
    return verdict;
}

}  // namespace mqsym
