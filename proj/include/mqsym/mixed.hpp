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

#include <optional>

#include "mqsym/partition.hpp"
#include "mqsym/state.hpp"

namespace mqsym {

/// rho is directly separable w.r.t. a partition when it equals the tensor
/// product of its own block marginals.
struct DirectSeparabilityVerdict {
    Partition partition;
    bool is_direct = false;
    /// Frobenius distance between rho and the product of its marginals.
    double deviation = 0.0;
};

/// rho must cover exactly the labels 1..N of the partition (in any order).
DirectSeparabilityVerdict is_directly_separable(const DensityMatrix &rho, const Partition &partition,
                                                double tol = kNormTol);

/// Product of rho's marginals over `partition`, listed in rho's site order.
DensityMatrix product_of_marginals(const DensityMatrix &rho, const Partition &partition);

enum class MeetStatus { holds, premise_failed, conclusion_failed };

const char *to_string(MeetStatus s);

struct MeetSeparabilityVerdict {
    MeetStatus status = MeetStatus::premise_failed;
    DirectSeparabilityVerdict premise_a;
    DirectSeparabilityVerdict premise_b;
    /// Evaluated only when both premises hold.
    std::optional<DirectSeparabilityVerdict> conclusion;
};

/// Given rho directly separable w.r.t. both a and b, checks direct
/// separability w.r.t. meet(a, b). A premise failure is reported as such and
/// the conclusion is not evaluated.
MeetSeparabilityVerdict check_meet_separability(const DensityMatrix &rho, const Partition &a, const Partition &b,
                                                double tol = kNormTol);

}  // namespace mqsym
