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
 * Dense pure states and density matrices on N constituents of local
 * dimension n.
 *
 * Flat indices are big-endian: for digits (a_1, ..., a_N) the flat index is
 * sum_i a_i * n^(N-i), so site 1 is the most significant digit and a ket
 * reads left to right. Density matrices carry an ordered site list and use
 * the same codec restricted to those sites, in list order.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mqsym/partition.hpp"
#include "mqsym/tolerances.hpp"

namespace mqsym {

using Complex = std::complex<double>;
using IndexTuple = std::vector<int>;

/// Largest dense dimension n^N accepted (2^24 amplitudes).
inline constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 24;

/// n^N, throwing DimensionOverflow past kMaxDimension.
std::uint64_t checked_dimension(int num_sites, int local_dim);

std::uint64_t encode(std::span<const int> digits, int local_dim);
IndexTuple decode(std::uint64_t flat, int num_sites, int local_dim);

class StateVector {
  public:
    /// The zero vector on N sites.
    StateVector(int num_sites, int local_dim);
    StateVector(int num_sites, int local_dim, Eigen::VectorXcd amplitudes);

    /// Computational basis state |a_1 ... a_N>.
    static StateVector basis(int local_dim, std::span<const int> digits);
    static StateVector basis(int local_dim, std::initializer_list<int> digits) {
        return basis(local_dim, std::span<const int>(digits.begin(), digits.size()));
    }

    int num_sites() const { return num_sites_; }
    int local_dim() const { return local_dim_; }
    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

    const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
    Eigen::VectorXcd &amplitudes() { return amplitudes_; }

    Complex operator[](std::size_t flat) const { return amplitudes_[static_cast<Eigen::Index>(flat)]; }
    Complex &operator[](std::size_t flat) { return amplitudes_[static_cast<Eigen::Index>(flat)]; }
    Complex at(std::span<const int> digits) const { return (*this)[encode(digits, local_dim_)]; }

    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(double tol = kNormTol) const;

    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);
    StateVector &operator*=(Complex factor);

  private:
    int num_sites_;
    int local_dim_;
    Eigen::VectorXcd amplitudes_;
};

StateVector operator+(StateVector a, const StateVector &b);
StateVector operator-(StateVector a, const StateVector &b);
StateVector operator*(Complex factor, StateVector a);

/// <phi|psi>, conjugate-linear in phi.
Complex inner(const StateVector &phi, const StateVector &psi);

/// psi / ||psi||. Throws ZeroStateError when ||psi|| <= zero_tol.
StateVector normalize(const StateVector &psi, double zero_tol = kZeroTol);

/// Max-norm distance ||a - b||_inf over amplitudes; sizes must match.
double max_abs_diff(const StateVector &a, const StateVector &b);

class DensityMatrix {
  public:
    DensityMatrix(std::vector<int> sites, int local_dim, Eigen::MatrixXcd entries);

    /// |psi><psi| on sites 1..N.
    static DensityMatrix from_state(const StateVector &psi);

    const std::vector<int> &sites() const { return sites_; }
    SubsetMask site_mask() const;
    int num_sites() const { return static_cast<int>(sites_.size()); }
    int local_dim() const { return local_dim_; }
    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }

    const Eigen::MatrixXcd &entries() const { return entries_; }
    Eigen::MatrixXcd &entries() { return entries_; }

    Complex trace() const { return entries_.trace(); }
    bool is_hermitian(double tol = kHermTol) const;
    double min_eigenvalue() const;

    /// The same operator with its sites listed in `order` (a permutation of sites()).
    DensityMatrix reordered(const std::vector<int> &order) const;

  private:
    std::vector<int> sites_;
    int local_dim_;
    Eigen::MatrixXcd entries_;
};

/// Tr over the sites of rho not in `keep`. `keep` must be a nonempty subset of
/// rho.sites(); the result lists the kept sites in rho's order.
DensityMatrix partial_trace(const DensityMatrix &rho, SubsetMask keep);

/// Reduced density matrix of |psi><psi| on `keep`, sites ascending.
DensityMatrix partial_trace(const StateVector &psi, SubsetMask keep);

/// Tr rho^2. Throws InvalidArgument when |Tr rho - 1| > norm_tol.
double purity(const DensityMatrix &rho, double norm_tol = kNormTol);

/// Frobenius norm of a - b. Both must have the same sites in the same order.
double frobenius_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Tensor product of operators on disjoint site sets. The result's site list is
/// the concatenation of the factors' site lists.
DensityMatrix tensor_product(const std::vector<DensityMatrix> &factors);

/// Assembles a state on N sites from states on disjoint blocks covering 1..N.
/// Each block state is indexed by its block's labels in ascending order.
StateVector tensor_product(const std::vector<std::pair<SubsetMask, StateVector>> &blocks, int num_sites);

/// Kronecker product of two states, `left` on the leading sites.
StateVector kron(const StateVector &left, const StateVector &right);

}  // namespace mqsym
