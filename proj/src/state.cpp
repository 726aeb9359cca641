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

#include "mqsym/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mqsym/error.hpp"

namespace mqsym {

namespace {

void check_shape(int num_sites, int local_dim) {
    if (num_sites < 1 || num_sites > kMaxSites) {
        throw InvalidArgument("num_sites must be in 1.." + std::to_string(kMaxSites) + ", got " +
                              std::to_string(num_sites));
    }
    if (local_dim < 2) {
        throw InvalidArgument("local_dim must be >= 2, got " + std::to_string(local_dim));
    }
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

// Flat-index offsets contributed by every digit assignment of `positions`
// (0-based positions inside an m-digit big-endian register). The assignment
// itself is enumerated big-endian in the order `positions` is given.
std::vector<std::size_t> digit_offsets(const std::vector<int> &positions, int m, int n) {
    std::vector<std::size_t> offsets{0};
    for (int p : positions) {
        const auto stride = static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(n), m - 1 - p));
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * static_cast<std::size_t>(n));
        for (std::size_t base : offsets) {
            for (int d = 0; d < n; ++d) {
                next.push_back(base + static_cast<std::size_t>(d) * stride);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

void require_same_shape(const StateVector &a, const StateVector &b) {
    if (a.num_sites() != b.num_sites() || a.local_dim() != b.local_dim()) {
        throw InvalidArgument("state shapes differ: (N=" + std::to_string(a.num_sites()) +
                              ", n=" + std::to_string(a.local_dim()) + ") vs (N=" +
                              std::to_string(b.num_sites()) + ", n=" + std::to_string(b.local_dim()) + ")");
    }
}

}  // namespace

std::uint64_t checked_dimension(int num_sites, int local_dim) {
    check_shape(num_sites, local_dim);
    std::uint64_t dim = 1;
    for (int i = 0; i < num_sites; ++i) {
        dim *= static_cast<std::uint64_t>(local_dim);
        if (dim > kMaxDimension) {
            throw DimensionOverflow("dimension " + std::to_string(local_dim) + "^" + std::to_string(num_sites) +
                                    " exceeds the dense limit of " + std::to_string(kMaxDimension));
        }
    }
    return dim;
}

std::uint64_t encode(std::span<const int> digits, int local_dim) {
    if (local_dim < 2) {
        throw InvalidArgument("local_dim must be >= 2");
    }
    std::uint64_t flat = 0;
    for (int d : digits) {
        if (d < 0 || d >= local_dim) {
            throw InvalidArgument("digit " + std::to_string(d) + " out of range 0.." +
                                  std::to_string(local_dim - 1));
        }
        flat = flat * static_cast<std::uint64_t>(local_dim) + static_cast<std::uint64_t>(d);
    }
    return flat;
}

IndexTuple decode(std::uint64_t flat, int num_sites, int local_dim) {
    const std::uint64_t dim = checked_dimension(num_sites, local_dim);
    if (flat >= dim) {
        throw InvalidArgument("flat index " + std::to_string(flat) + " out of range");
    }
    IndexTuple digits(static_cast<std::size_t>(num_sites));
    for (int i = num_sites - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::uint64_t>(local_dim));
        flat /= static_cast<std::uint64_t>(local_dim);
    }
    return digits;
}

StateVector::StateVector(int num_sites, int local_dim)
    : num_sites_(num_sites),
      local_dim_(local_dim),
      amplitudes_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(checked_dimension(num_sites, local_dim)))) {}

StateVector::StateVector(int num_sites, int local_dim, Eigen::VectorXcd amplitudes)
    : num_sites_(num_sites), local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
    const std::uint64_t dim = checked_dimension(num_sites, local_dim);
    if (static_cast<std::uint64_t>(amplitudes_.size()) != dim) {
        throw InvalidArgument("amplitude array has length " + std::to_string(amplitudes_.size()) + ", expected " +
                              std::to_string(dim));
    }
}

StateVector StateVector::basis(int local_dim, std::span<const int> digits) {
    StateVector out(static_cast<int>(digits.size()), local_dim);
    out[encode(digits, local_dim)] = 1.0;
    return out;
}

bool StateVector::is_normalized(double tol) const { return std::abs(amplitudes_.squaredNorm() - 1.0) < tol; }

StateVector &StateVector::operator+=(const StateVector &other) {
    require_same_shape(*this, other);
    amplitudes_ += other.amplitudes_;
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    require_same_shape(*this, other);
    amplitudes_ -= other.amplitudes_;
    return *this;
}

StateVector &StateVector::operator*=(Complex factor) {
    amplitudes_ *= factor;
    return *this;
}

StateVector operator+(StateVector a, const StateVector &b) { return a += b; }
StateVector operator-(StateVector a, const StateVector &b) { return a -= b; }
StateVector operator*(Complex factor, StateVector a) { return a *= factor; }

Complex inner(const StateVector &phi, const StateVector &psi) {
    require_same_shape(phi, psi);
    return phi.amplitudes().dot(psi.amplitudes());  // Eigen's dot conjugates the left operand
}

StateVector normalize(const StateVector &psi, double zero_tol) {
    const double nrm = psi.norm();
    if (nrm <= zero_tol) {
        throw ZeroStateError("zero state");
    }
    StateVector out = psi;
    out *= 1.0 / nrm;
    return out;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    require_same_shape(a, b);
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(std::vector<int> sites, int local_dim, Eigen::MatrixXcd entries)
    : sites_(std::move(sites)), local_dim_(local_dim), entries_(std::move(entries)) {
    if (sites_.empty()) {
        throw InvalidArgument("density matrix needs at least one site");
    }
    SubsetMask seen;
    for (int s : sites_) {
        if (s < 1 || s > kMaxSites) {
            throw InvalidArgument("site label " + std::to_string(s) + " out of range");
        }
        if (seen.contains(s)) {
            throw InvalidArgument("site " + std::to_string(s) + " listed twice");
        }
        seen |= SubsetMask::single(s);
    }
    const std::uint64_t dim = checked_dimension(static_cast<int>(sites_.size()), local_dim);
    if (static_cast<std::uint64_t>(entries_.rows()) != dim || static_cast<std::uint64_t>(entries_.cols()) != dim) {
        throw InvalidArgument("density matrix is " + std::to_string(entries_.rows()) + "x" +
                              std::to_string(entries_.cols()) + ", expected " + std::to_string(dim) + "x" +
                              std::to_string(dim));
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector &psi) {
    std::vector<int> sites(static_cast<std::size_t>(psi.num_sites()));
    for (std::size_t i = 0; i < sites.size(); ++i) {
        sites[i] = static_cast<int>(i) + 1;
    }
    return DensityMatrix(std::move(sites), psi.local_dim(), psi.amplitudes() * psi.amplitudes().adjoint());
}

SubsetMask DensityMatrix::site_mask() const { return SubsetMask::from_labels(sites_); }

bool DensityMatrix::is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::reordered(const std::vector<int> &order) const {
    if (order.size() != sites_.size() || SubsetMask::from_labels(order) != site_mask()) {
        throw InvalidArgument("reorder list is not a permutation of the matrix's sites");
    }
    const int m = num_sites();
    std::vector<int> old_positions;
    old_positions.reserve(order.size());
    for (int s : order) {
        old_positions.push_back(static_cast<int>(std::find(sites_.begin(), sites_.end(), s) - sites_.begin()));
    }
    const auto map = digit_offsets(old_positions, m, local_dim_);
    const auto dim = static_cast<Eigen::Index>(map.size());
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            out(r, c) = entries_(static_cast<Eigen::Index>(map[static_cast<std::size_t>(r)]),
                                 static_cast<Eigen::Index>(map[static_cast<std::size_t>(c)]));
        }
    }
    return DensityMatrix(order, local_dim_, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, SubsetMask keep) {
    if (keep.empty()) {
        throw InvalidArgument("partial trace needs a nonempty keep set");
    }
    if (!keep.is_subset_of(rho.site_mask())) {
        throw InvalidArgument("keep set " + keep.str() + " is not a subset of the matrix's sites");
    }
    const int m = rho.num_sites();
    std::vector<int> kept_sites;
    std::vector<int> kept_positions;
    std::vector<int> traced_positions;
    for (int p = 0; p < m; ++p) {
        const int s = rho.sites()[static_cast<std::size_t>(p)];
        if (keep.contains(s)) {
            kept_sites.push_back(s);
            kept_positions.push_back(p);
        } else {
            traced_positions.push_back(p);
        }
    }
    const auto kept = digit_offsets(kept_positions, m, rho.local_dim());
    const auto traced = digit_offsets(traced_positions, m, rho.local_dim());
    const auto dim = static_cast<Eigen::Index>(kept.size());
    const Eigen::MatrixXcd &full = rho.entries();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t t : traced) {
                acc += full(static_cast<Eigen::Index>(kept[static_cast<std::size_t>(r)] + t),
                            static_cast<Eigen::Index>(kept[static_cast<std::size_t>(c)] + t));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(kept_sites), rho.local_dim(), std::move(out));
}

DensityMatrix partial_trace(const StateVector &psi, SubsetMask keep) {
    const int num_sites = psi.num_sites();
    if (keep.empty()) {
        throw InvalidArgument("partial trace needs a nonempty keep set");
    }
    if (!keep.is_subset_of(SubsetMask::full(num_sites))) {
        throw InvalidArgument("keep set " + keep.str() + " is not a subset of the state's sites");
    }
    std::vector<int> kept_positions;
    std::vector<int> traced_positions;
    for (int p = 0; p < num_sites; ++p) {
        (keep.contains(p + 1) ? kept_positions : traced_positions).push_back(p);
    }
    const auto kept = digit_offsets(kept_positions, num_sites, psi.local_dim());
    const auto traced = digit_offsets(traced_positions, num_sites, psi.local_dim());
    // psi reshaped as (kept x traced); rho_keep = M M^dagger.
    Eigen::MatrixXcd reshaped(static_cast<Eigen::Index>(kept.size()), static_cast<Eigen::Index>(traced.size()));
    for (std::size_t t = 0; t < traced.size(); ++t) {
        for (std::size_t k = 0; k < kept.size(); ++k) {
            reshaped(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t)) = psi[kept[k] + traced[t]];
        }
    }
    Eigen::MatrixXcd rho = reshaped * reshaped.adjoint();
    return DensityMatrix(keep.labels(), psi.local_dim(), std::move(rho));
}

double purity(const DensityMatrix &rho, double norm_tol) {
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > norm_tol) {
        throw InvalidArgument("purity needs a unit-trace matrix, trace is " + std::to_string(tr.real()) +
                              (tr.imag() != 0.0 ? "+" + std::to_string(tr.imag()) + "i" : ""));
    }
    const Eigen::MatrixXcd &m = rho.entries();
    // Tr(rho^2) = sum_ij rho_ij rho_ji
    return (m.array() * m.transpose().array()).sum().real();
}

double frobenius_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.sites() != b.sites() || a.local_dim() != b.local_dim()) {
        throw InvalidArgument("density matrices live on different site lists");
    }
    return (a.entries() - b.entries()).norm();
}

DensityMatrix tensor_product(const std::vector<DensityMatrix> &factors) {
    if (factors.empty()) {
        throw InvalidArgument("tensor product of no factors");
    }
    std::vector<int> sites = factors.front().sites();
    Eigen::MatrixXcd acc = factors.front().entries();
    const int n = factors.front().local_dim();
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const DensityMatrix &next = factors[f];
        if (next.local_dim() != n) {
            throw InvalidArgument("tensor factors have different local dimensions");
        }
        sites.insert(sites.end(), next.sites().begin(), next.sites().end());
        const Eigen::MatrixXcd &b = next.entries();
        Eigen::MatrixXcd out(acc.rows() * b.rows(), acc.cols() * b.cols());
        for (Eigen::Index j = 0; j < acc.cols(); ++j) {
            for (Eigen::Index i = 0; i < acc.rows(); ++i) {
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = acc(i, j) * b;
            }
        }
        acc = std::move(out);
    }
    return DensityMatrix(std::move(sites), n, std::move(acc));
}

StateVector tensor_product(const std::vector<std::pair<SubsetMask, StateVector>> &blocks, int num_sites) {
    if (blocks.empty()) {
        throw InvalidArgument("tensor product of no blocks");
    }
    std::vector<SubsetMask> masks;
    for (const auto &[mask, state] : blocks) {
        masks.push_back(mask);
    }
    Partition::validate(masks, num_sites);
    const int n = blocks.front().second.local_dim();
    StateVector out(num_sites, n);
    std::vector<std::pair<std::size_t, Complex>> partial{{0, Complex{1.0, 0.0}}};
    for (const auto &[mask, state] : blocks) {
        if (state.local_dim() != n || state.num_sites() != mask.size()) {
            throw InvalidArgument("block state on " + std::to_string(state.num_sites()) +
                                  " sites does not match block " + mask.str());
        }
        std::vector<int> positions;
        for (int label : mask.labels()) {
            positions.push_back(label - 1);
        }
        const auto offsets = digit_offsets(positions, num_sites, n);
        std::vector<std::pair<std::size_t, Complex>> next;
        next.reserve(partial.size() * offsets.size());
        for (const auto &[base, amp] : partial) {
            for (std::size_t r = 0; r < offsets.size(); ++r) {
                next.emplace_back(base + offsets[r], amp * state[r]);
            }
        }
        partial = std::move(next);
    }
    for (const auto &[flat, amp] : partial) {
        out[flat] = amp;
    }
    return out;
}

StateVector kron(const StateVector &left, const StateVector &right) {
    if (left.local_dim() != right.local_dim()) {
        throw InvalidArgument("kron of states with different local dimensions");
    }
    StateVector out(left.num_sites() + right.num_sites(), left.local_dim());
    const auto rdim = static_cast<Eigen::Index>(right.dimension());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(left.dimension()); ++i) {
        out.amplitudes().segment(i * rdim, rdim) = left.amplitudes()[i] * right.amplitudes();
    }
    return out;
}

}  // namespace mqsym
