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
 * The symmetric group acting on constituent labels, and the exchange-symmetry
 * machinery built on it.
 *
 * Action convention: pi_sigma maps the basis ket (a_1, ..., a_N) to
 * (a_sigma(1), ..., a_sigma(N)). In terms of amplitudes, the output
 * coefficient of tuple b is the input coefficient of the tuple a with
 * a_j = b_{sigma^-1(j)}. The induced composition law is
 *
 *     apply(sigma, apply(tau, psi)) == apply(compose(tau, sigma), psi)
 *
 * with compose(tau, sigma)(i) = tau(sigma(i)).
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mqsym/state.hpp"

namespace mqsym {

class Permutation {
  public:
    /// images[i-1] = sigma(i). Throws unless images is a bijection on 1..N.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int num_sites);
    /// The transposition (i j); i == j gives the identity.
    static Permutation transposition(int num_sites, int i, int j);
    /// The cycle c_0 -> c_1 -> ... -> c_0.
    static Permutation cycle(int num_sites, const std::vector<int> &labels);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int label) const { return images_[static_cast<std::size_t>(label - 1)]; }
    const std::vector<int> &images() const { return images_; }
    Permutation inverse() const;
    bool is_identity() const;
    /// +1 for even, -1 for odd.
    int sign() const;

    bool operator==(const Permutation &) const = default;

  private:
    std::vector<int> images_;
};

/// (outer o inner)(i) = outer(inner(i)).
Permutation compose(const Permutation &outer, const Permutation &inner);

/// All N(N-1)/2 transpositions (i j), i < j, in lexicographic order.
std::vector<std::pair<int, int>> transposition_pairs(int num_sites);

StateVector apply_permutation(const Permutation &sigma, const StateVector &psi);

/// {i | sigma(i) = i}
SubsetMask fixed_set(const Permutation &sigma);
/// Cycles of length >= 2, ordered by smallest label.
std::vector<SubsetMask> orbits(const Permutation &sigma);

enum class TranspositionVerdict { plus_one, minus_one, not_eigenstate };
enum class ExchangeClass { symmetric, antisymmetric, none };

struct TranspositionResult {
    int i = 0;
    int j = 0;
    TranspositionVerdict verdict = TranspositionVerdict::not_eigenstate;
    /// <psi|pi psi>
    Complex overlap;
    /// ||pi psi - lambda psi|| with lambda the snapped sign of Re(overlap).
    double residual = 0.0;
};

struct SymmetryReport {
    ExchangeClass exchange_class = ExchangeClass::none;
    std::vector<TranspositionResult> transpositions;
};

/// Tests every transposition. A verdict of +1 / -1 requires residual < tol.
/// Throws InvalidArgument for unnormalized input (beyond kNormTol).
SymmetryReport classify_exchange(const StateVector &psi, double tol = kNormTol);

const char *to_string(TranspositionVerdict v);
const char *to_string(ExchangeClass c);

/// T psi = (1/N!) sum_sigma pi_sigma psi, evaluated by averaging over each
/// multiset orbit of basis tuples. May return the zero vector.
StateVector symmetrize(const StateVector &psi);

/// (1 - T) psi
StateVector project_perp(const StateVector &psi);

/// (1/N!) sum_sigma sgn(sigma) pi_sigma psi, orbit-based like symmetrize.
StateVector antisymmetrize(const StateVector &psi);

enum class EquipollenceStatus { strict, up_to_phase, not_equipollent };

struct EquipollenceVerdict {
    EquipollenceStatus status = EquipollenceStatus::not_equipollent;
    /// Present unless not_equipollent. c = phase * d.
    std::optional<Complex> phase;
    /// max_k |c_k - phase d_k| for the extracted phase (infinity when no anchor exists).
    double max_deviation = 0.0;
};

/// Decides whether c_k = gamma d_k for all k with a common |gamma| = 1.
/// gamma is read off the first index where both |c_k| and |d_k| exceed sqrt(tol).
/// Throws ZeroStateError when either vector is zero.
EquipollenceVerdict equipollent(const Eigen::VectorXcd &c, const Eigen::VectorXcd &d, double tol = kEquipollenceTol);

const char *to_string(EquipollenceStatus s);

/// U^{(x)N} psi. Throws InvalidArgument when U is not n x n or not unitary within tol.
StateVector apply_collective_unitary(const Eigen::MatrixXcd &u, const StateVector &psi, double tol = kNormTol);

/// Applies `u` to a single site (1-based label).
StateVector apply_local_unitary(const Eigen::MatrixXcd &u, int label, const StateVector &psi);

}  // namespace mqsym
