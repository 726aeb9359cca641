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
 * Canonical and seeded random state constructors.
 *
 * Every random generator is a pure function of its parameters and a 64-bit
 * seed: there is no shared RNG state, and equal seeds give bit-identical
 * output on a given standard library.
 */
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mqsym/partition.hpp"
#include "mqsym/state.hpp"

namespace mqsym {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

/// Mixes (seed, stream) into an independent child seed (splitmix64 finalizer).
Seed derive_seed(Seed seed, std::uint64_t stream);

/// (sum_{a<n} |a...a>) / sqrt(n); needs N >= 2.
StateVector ghz(int num_sites, int local_dim = 2);
/// Dicke(N, 1).
StateVector w_state(int num_sites);
/// Normalized symmetrization of |1>^k |0>^(N-k) on qubits; needs N >= 2, 0 <= k <= N.
StateVector dicke(int num_sites, int excitations);

/// Normalized antisymmetrization of |l_1> (x) ... (x) |l_N> (a Slater determinant).
/// Throws InvalidArgument when n < N, a level is out of range, or levels repeat.
StateVector slater(int num_sites, int local_dim, const std::vector<int> &levels);

/// Normalized complex Gaussian vector of length `dim`.
Eigen::VectorXcd random_unit_vector(Eigen::Index dim, Rng &rng);

StateVector random_state(int num_sites, int local_dim, Seed seed);
/// Tensor product of independent random single-site unit vectors.
StateVector random_product(int num_sites, int local_dim, Seed seed);
/// normalize(T random_state), redrawing from a derived seed while ||T phi|| < 1e-6.
StateVector random_symmetric(int num_sites, int local_dim, Seed seed);
/// normalize(A random_state) for the antisymmetrizer A; needs n >= N.
StateVector random_antisymmetric(int num_sites, int local_dim, Seed seed);

/// Haar-distributed n x n unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
Eigen::MatrixXcd random_local_unitary(int local_dim, Seed seed);

/// (x)_{i=1..N} U|0>
StateVector equipollent_product(int num_sites, const Eigen::MatrixXcd &u);

/// A unitary whose first column is v/||v||, completed by Gram-Schmidt over the
/// computational basis.
Eigen::MatrixXcd unitary_with_first_column(const Eigen::VectorXcd &v);

/// Random full-rank density matrix G G^dag / Tr(G G^dag) on `sites`.
DensityMatrix random_density_matrix(const std::vector<int> &sites, int local_dim, Seed seed);

/// Uniformly random label -> block assignment, canonicalized.
Partition random_partition(int num_sites, Rng &rng);

/// Two coarsenings (a, b) of `finest` with meet(a, b) == finest. Each block of
/// `finest` gets a distinct cell of a grid; a groups blocks by row, b by column.
std::pair<Partition, Partition> random_coarsening_pair(const Partition &finest, Rng &rng);

}  // namespace mqsym
