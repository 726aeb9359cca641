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

#include "mqsym/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mqsym/error.hpp"
#include "mqsym/permutation.hpp"

namespace mqsym {

namespace {

constexpr double kRedrawNorm = 1e-6;

Complex complex_gaussian(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

void require_min_sites(int num_sites, int minimum) {
    if (num_sites < minimum) {
        throw InvalidArgument("need at least " + std::to_string(minimum) + " sites, got " +
                              std::to_string(num_sites));
    }
}

}  // namespace

Seed derive_seed(Seed seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StateVector ghz(int num_sites, int local_dim) {
    require_min_sites(num_sites, 2);
    StateVector out(num_sites, local_dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
    for (int a = 0; a < local_dim; ++a) {
        const IndexTuple digits(static_cast<std::size_t>(num_sites), a);
        out[encode(digits, local_dim)] = amp;
    }
    return out;
}

StateVector w_state(int num_sites) { return dicke(num_sites, 1); }

StateVector dicke(int num_sites, int excitations) {
    require_min_sites(num_sites, 2);
    if (excitations < 0 || excitations > num_sites) {
        throw InvalidArgument("Dicke excitation count " + std::to_string(excitations) + " outside 0.." +
                              std::to_string(num_sites));
    }
    IndexTuple digits(static_cast<std::size_t>(num_sites), 0);
    std::fill(digits.begin(), digits.begin() + excitations, 1);
    return normalize(symmetrize(StateVector::basis(2, digits)));
}

StateVector slater(int num_sites, int local_dim, const std::vector<int> &levels) {
    if (static_cast<int>(levels.size()) != num_sites) {
        throw InvalidArgument("slater needs exactly one level per site");
    }
    if (local_dim < num_sites) {
        throw InvalidArgument("no antisymmetric state of " + std::to_string(num_sites) + " sites exists for n = " +
                              std::to_string(local_dim));
    }
    std::vector<int> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("slater levels repeat; the antisymmetrized product vanishes");
    }
    if (sorted.front() < 0 || sorted.back() >= local_dim) {
        throw InvalidArgument("slater level out of range 0.." + std::to_string(local_dim - 1));
    }
    StateVector out(num_sites, local_dim);
    std::vector<int> order(levels.size());
    std::iota(order.begin(), order.end(), 1);
    double count = 0.0;
    do {
        const Permutation p(order);
        IndexTuple digits(levels.size());
        for (std::size_t i = 0; i < levels.size(); ++i) {
            digits[i] = levels[static_cast<std::size_t>(order[i] - 1)];
        }
        out[encode(digits, local_dim)] += static_cast<double>(p.sign());
        count += 1.0;
    } while (std::next_permutation(order.begin(), order.end()));
    out *= 1.0 / std::sqrt(count);
    return out;
}

Eigen::VectorXcd random_unit_vector(Eigen::Index dim, Rng &rng) {
    Eigen::VectorXcd v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        v[k] = complex_gaussian(rng);
    }
    return v / v.norm();
}

StateVector random_state(int num_sites, int local_dim, Seed seed) {
    Rng rng(seed);
    const auto dim = static_cast<Eigen::Index>(checked_dimension(num_sites, local_dim));
    return StateVector(num_sites, local_dim, random_unit_vector(dim, rng));
}

StateVector random_product(int num_sites, int local_dim, Seed seed) {
    Rng rng(seed);
    StateVector out(1, local_dim, random_unit_vector(local_dim, rng));
    for (int i = 1; i < num_sites; ++i) {
        out = kron(out, StateVector(1, local_dim, random_unit_vector(local_dim, rng)));
    }
    return out;
}

StateVector random_symmetric(int num_sites, int local_dim, Seed seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const Seed s = attempt == 0 ? seed : derive_seed(seed, attempt);
        StateVector projected = symmetrize(random_state(num_sites, local_dim, s));
        if (projected.norm() >= kRedrawNorm) {
            return normalize(projected);
        }
    }
}

StateVector random_antisymmetric(int num_sites, int local_dim, Seed seed) {
    if (local_dim < num_sites) {
        throw InvalidArgument("no antisymmetric state of " + std::to_string(num_sites) + " sites exists for n = " +
                              std::to_string(local_dim));
    }
    for (std::uint64_t attempt = 0;; ++attempt) {
        const Seed s = attempt == 0 ? seed : derive_seed(seed, attempt);
        StateVector projected = antisymmetrize(random_state(num_sites, local_dim, s));
        if (projected.norm() >= kRedrawNorm) {
            return normalize(projected);
        }
    }
}

Eigen::MatrixXcd random_local_unitary(int local_dim, Seed seed) {
    if (local_dim < 1) {
        throw InvalidArgument("unitary dimension must be positive");
    }
    Rng rng(seed);
    Eigen::MatrixXcd z(local_dim, local_dim);
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
        for (Eigen::Index r = 0; r < z.rows(); ++r) {
            z(r, c) = complex_gaussian(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < local_dim; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex{1.0, 0.0};
    }
    return q;
}

StateVector equipollent_product(int num_sites, const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols()) {
        throw InvalidArgument("equipollent_product needs a square unitary");
    }
    const StateVector site(1, static_cast<int>(u.rows()), u.col(0));
    StateVector out = site;
    for (int i = 1; i < num_sites; ++i) {
        out = kron(out, site);
    }
    return out;
}

Eigen::MatrixXcd unitary_with_first_column(const Eigen::VectorXcd &v) {
    const Eigen::Index n = v.size();
    if (v.norm() <= kZeroTol) {
        throw ZeroStateError("cannot complete a unitary from a zero column");
    }
    Eigen::MatrixXcd u(n, n);
    u.col(0) = v / v.norm();
    Eigen::Index filled = 1;
    for (Eigen::Index e = 0; e < n && filled < n; ++e) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Unit(n, e);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < filled; ++k) {
                w -= u.col(k).dot(w) * u.col(k);
            }
        }
        if (w.norm() > 1e-8) {
            u.col(filled++) = w / w.norm();
        }
    }
    return u;
}

DensityMatrix random_density_matrix(const std::vector<int> &sites, int local_dim, Seed seed) {
    Rng rng(seed);
    const auto dim = static_cast<Eigen::Index>(checked_dimension(static_cast<int>(sites.size()), local_dim));
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            g(r, c) = complex_gaussian(rng);
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityMatrix(sites, local_dim, std::move(rho));
}

Partition random_partition(int num_sites, Rng &rng) {
    std::uniform_int_distribution<int> pick(0, num_sites - 1);
    std::vector<SubsetMask> buckets(static_cast<std::size_t>(num_sites));
    for (int i = 1; i <= num_sites; ++i) {
        buckets[static_cast<std::size_t>(pick(rng))] |= SubsetMask::single(i);
    }
    std::erase_if(buckets, [](SubsetMask m) { return m.empty(); });
    return Partition::validate(std::move(buckets), num_sites);
}

std::pair<Partition, Partition> random_coarsening_pair(const Partition &finest, Rng &rng) {
    const auto u = static_cast<int>(finest.size());
    const int rows = std::uniform_int_distribution<int>(1, u)(rng);
    const int min_cols = (u + rows - 1) / rows;
    const int cols = std::uniform_int_distribution<int>(min_cols, u)(rng);
    std::vector<int> cells(static_cast<std::size_t>(rows * cols));
    std::iota(cells.begin(), cells.end(), 0);
    std::shuffle(cells.begin(), cells.end(), rng);

    std::vector<SubsetMask> by_row(static_cast<std::size_t>(rows));
    std::vector<SubsetMask> by_col(static_cast<std::size_t>(cols));
    for (int k = 0; k < u; ++k) {
        const int cell = cells[static_cast<std::size_t>(k)];
        by_row[static_cast<std::size_t>(cell / cols)] |= finest[static_cast<std::size_t>(k)];
        by_col[static_cast<std::size_t>(cell % cols)] |= finest[static_cast<std::size_t>(k)];
    }
    std::erase_if(by_row, [](SubsetMask m) { return m.empty(); });
    std::erase_if(by_col, [](SubsetMask m) { return m.empty(); });
    return {Partition::validate(std::move(by_row), finest.num_sites()),
            Partition::validate(std::move(by_col), finest.num_sites())};
}

}  // namespace mqsym
