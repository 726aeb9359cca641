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

#include <gtest/gtest.h>

#include <cmath>

#include "mqsym/error.hpp"
#include "mqsym/generators.hpp"
#include "oracles.hpp"

using namespace mqsym;

namespace {

StateVector bell_plus() { return normalize(StateVector::basis(2, {{0, 0}}) + StateVector::basis(2, {{1, 1}})); }

DensityMatrix random_rho(int k, int n, Seed seed) {
    std::vector<int> sites(static_cast<std::size_t>(k));
    std::iota(sites.begin(), sites.end(), 1);
    return random_density_matrix(sites, n, seed);
}

}  // namespace

TEST(codec, encode_examples) {
    ASSERT_EQ(encode(std::vector<int>{0, 0, 0}, 2), 0u);
    ASSERT_EQ(encode(std::vector<int>{1, 0}, 2), 2u);
    ASSERT_EQ(encode(std::vector<int>{2, 1}, 3), 7u);
    ASSERT_THROW(encode(std::vector<int>{2}, 2), InvalidArgument);
    ASSERT_THROW(encode(std::vector<int>{-1}, 2), InvalidArgument);
}

TEST(codec, round_trip) {
    for (int n = 2; n <= 4; ++n) {
        for (int N = 1; N <= 8; ++N) {
            const std::uint64_t dim = checked_dimension(N, n);
            for (std::uint64_t flat = 0; flat < dim; ++flat) {
                const IndexTuple d = decode(flat, N, n);
                ASSERT_EQ(encode(d, n), flat);
                ASSERT_EQ(oracle::index_of(d, n), flat);
            }
        }
    }
}

TEST(codec, dimension_overflow) {
    ASSERT_THROW(checked_dimension(40, 2), DimensionOverflow);
    ASSERT_THROW(StateVector(30, 3), DimensionOverflow);
    ASSERT_EQ(checked_dimension(24, 2), kMaxDimension);
}

TEST(state, inner_examples) {
    const StateVector psi = random_state(3, 2, 1);
    ASSERT_NEAR(std::abs(inner(psi, psi) - 1.0), 0.0, 1e-12);
    ASSERT_EQ(inner(StateVector::basis(2, {{0, 0}}), StateVector::basis(2, {{1, 1}})), Complex(0.0));
    ASSERT_NEAR(std::abs(inner(ghz(3), StateVector::basis(2, {{0, 0, 0}})) - M_SQRT1_2), 0.0, 1e-15);
    const StateVector phi = random_state(3, 2, 2);
    ASSERT_NEAR(std::abs(inner(Complex(0, 1) * phi, psi) - Complex(0, -1) * inner(phi, psi)), 0.0, 1e-15);
    ASSERT_THROW(inner(psi, random_state(2, 2, 1)), InvalidArgument);
}

TEST(state, normalize_examples) {
    const StateVector two = 2.0 * StateVector::basis(2, {{0, 0}});
    ASSERT_EQ(normalize(two).amplitudes(), StateVector::basis(2, {{0, 0}}).amplitudes());
    const StateVector sum = StateVector::basis(2, {{0, 1}}) + StateVector::basis(2, {{1, 0}});
    ASSERT_NEAR(normalize(sum)[1].real(), M_SQRT1_2, 1e-15);
    try {
        normalize(StateVector(2, 2));
        FAIL();
    } catch (const ZeroStateError &e) {
        ASSERT_STREQ(e.what(), "zero state");
    }
}

TEST(state, constructor_rejects_bad_shapes) {
    ASSERT_THROW(StateVector(0, 2), InvalidArgument);
    ASSERT_THROW(StateVector(2, 1), InvalidArgument);
    ASSERT_THROW(StateVector(2, 2, Eigen::VectorXcd::Zero(3)), InvalidArgument);
}

TEST(partial_trace, examples) {
    const StateVector p01 = StateVector::basis(2, {{0, 1}});
    const DensityMatrix r = partial_trace(p01, SubsetMask::single(2));
    ASSERT_EQ(r.sites(), std::vector<int>{2});
    ASSERT_NEAR(std::abs(r.entries()(1, 1) - 1.0), 0.0, 1e-15);
    ASSERT_NEAR(r.entries().cwiseAbs().sum(), 1.0, 1e-15);

    const DensityMatrix g = partial_trace(ghz(3), SubsetMask::from_labels({1, 2}));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    ASSERT_LT((g.entries() - expected).cwiseAbs().maxCoeff(), 1e-15);
    ASSERT_LT((g.entries() - oracle::reduced(ghz(3).amplitudes(), 3, 2, {1, 2})).cwiseAbs().maxCoeff(), 1e-15);

    const DensityMatrix rho = random_rho(3, 2, 5);
    ASSERT_LT((partial_trace(rho, SubsetMask::full(3)).entries() - rho.entries()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(partial_trace, errors) {
    const StateVector psi = random_state(3, 2, 1);
    ASSERT_THROW(partial_trace(psi, SubsetMask()), InvalidArgument);
    ASSERT_THROW(partial_trace(psi, SubsetMask::single(4)), InvalidArgument);
    const DensityMatrix rho = partial_trace(psi, SubsetMask::from_labels({1, 2}));
    ASSERT_THROW(partial_trace(rho, SubsetMask::single(3)), InvalidArgument);
}

TEST(partial_trace, matches_index_summation_oracle) {
    for (int t = 0; t < 40; ++t) {
        const int N = 2 + t % 4;
        const int n = 2 + t % 2;
        const StateVector psi = random_state(N, n, static_cast<Seed>(t));
        for (std::uint64_t bits = 1; bits < (1ULL << N); ++bits) {
            const SubsetMask keep(bits);
            const DensityMatrix r = partial_trace(psi, keep);
            const DensityMatrix via_rho = partial_trace(DensityMatrix::from_state(psi), keep);
            const Eigen::MatrixXcd expected = oracle::reduced(psi.amplitudes(), N, n, keep.labels());
            ASSERT_LT((r.entries() - expected).cwiseAbs().maxCoeff(), 1e-12);
            ASSERT_LT((via_rho.entries() - expected).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(partial_trace, preserves_trace_and_hermiticity) {
    for (int t = 0; t < 30; ++t) {
        const int k = 2 + t % 3;
        const DensityMatrix rho = random_rho(k, 2, static_cast<Seed>(100 + t));
        for (std::uint64_t bits = 1; bits < (1ULL << k); ++bits) {
            const DensityMatrix r = partial_trace(rho, SubsetMask(bits));
            ASSERT_NEAR(std::abs(r.trace() - rho.trace()), 0.0, 1e-12);
            ASSERT_TRUE(r.is_hermitian(1e-12));
            ASSERT_GT(r.min_eigenvalue(), -1e-12);
        }
    }
}

TEST(partial_trace, nested_equals_direct) {
    for (int t = 0; t < 20; ++t) {
        const DensityMatrix rho = random_rho(4, 2, static_cast<Seed>(t));
        for (std::uint64_t keep = 1; keep < 16; ++keep) {
            for (std::uint64_t mid = keep; mid < 16; ++mid) {
                if ((mid & keep) != keep) continue;
                const DensityMatrix step = partial_trace(partial_trace(rho, SubsetMask(mid)), SubsetMask(keep));
                const DensityMatrix direct = partial_trace(rho, SubsetMask(keep));
                ASSERT_EQ(step.sites(), direct.sites());
                ASSERT_LT((step.entries() - direct.entries()).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(partial_trace, keeps_site_identity_for_reordered_input) {
    const StateVector psi = random_product(3, 2, 9);
    const DensityMatrix rho = DensityMatrix::from_state(psi).reordered({3, 1, 2});
    ASSERT_EQ(rho.sites(), (std::vector<int>{3, 1, 2}));
    const DensityMatrix r = partial_trace(rho, SubsetMask::from_labels({1, 3}));
    ASSERT_EQ(r.sites(), (std::vector<int>{3, 1}));
    const DensityMatrix ascending = partial_trace(psi, SubsetMask::from_labels({1, 3}));
    ASSERT_LT((r.reordered({1, 3}).entries() - ascending.entries()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(purity, examples) {
    ASSERT_NEAR(purity(DensityMatrix::from_state(random_state(3, 3, 4))), 1.0, 1e-12);
    const DensityMatrix mixed({1}, 2, Eigen::MatrixXcd::Identity(2, 2) / 2.0);
    ASSERT_NEAR(purity(mixed), 0.5, 1e-15);
    ASSERT_NEAR(purity(partial_trace(ghz(3), SubsetMask::single(1))), 0.5, 1e-15);
    const DensityMatrix bad({1}, 2, Eigen::MatrixXcd::Identity(2, 2));
    ASSERT_THROW(purity(bad), InvalidArgument);
}

TEST(purity, bounded_by_one) {
    for (int t = 0; t < 50; ++t) {
        const DensityMatrix rho = random_rho(1 + t % 3, 2, static_cast<Seed>(t));
        const double p = purity(rho);
        ASSERT_LE(p, 1.0 + 1e-12);
        ASSERT_GT(p, 0.0);
        ASSERT_NEAR(purity(DensityMatrix::from_state(random_state(1 + t % 4, 2, static_cast<Seed>(t)))), 1.0, 1e-12);
    }
}

TEST(tensor_product, blocks_land_on_their_labels) {
    const StateVector bell = bell_plus();
    const StateVector zero = StateVector::basis(2, {{0}});
    const StateVector psi =
        tensor_product({{SubsetMask::from_labels({1, 3}), bell}, {SubsetMask::single(2), zero}}, 3);
    ASSERT_NEAR(psi[encode(std::vector<int>{0, 0, 0}, 2)].real(), M_SQRT1_2, 1e-15);
    ASSERT_NEAR(psi[encode(std::vector<int>{1, 0, 1}, 2)].real(), M_SQRT1_2, 1e-15);
    ASSERT_NEAR(psi.norm(), 1.0, 1e-15);
    ASSERT_THROW(tensor_product({{SubsetMask::from_labels({1, 2}), bell}}, 3), InvalidArgument);
}

TEST(tensor_product, density_concatenates_sites) {
    const DensityMatrix a = random_density_matrix({2}, 2, 1);
    const DensityMatrix b = random_density_matrix({1, 3}, 2, 2);
    const DensityMatrix ab = tensor_product({a, b});
    ASSERT_EQ(ab.sites(), (std::vector<int>{2, 1, 3}));
    ASSERT_NEAR(std::abs(ab.trace() - 1.0), 0.0, 1e-12);
    const DensityMatrix back = partial_trace(ab, SubsetMask::from_labels({1, 3}));
    ASSERT_LT((back.entries() - b.entries()).cwiseAbs().maxCoeff(), 1e-12);
}
