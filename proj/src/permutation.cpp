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

#include "mqsym/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mqsym/error.hpp"

namespace mqsym {

namespace {

std::size_t stride_of(int position, int num_sites, int n) {
    std::size_t stride = 1;
    for (int k = position + 1; k < num_sites; ++k) {
        stride *= static_cast<std::size_t>(n);
    }
    return stride;
}

// Advances `digits` to the next big-endian tuple; false after the last one.
bool next_tuple(IndexTuple &digits, int n) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < n) {
            return true;
        }
        digits[k] = 0;
    }
    return false;
}

// +1 / -1 by inversion parity; 0 when a digit repeats.
int tuple_sign(const IndexTuple &digits) {
    int parity = 1;
    for (std::size_t a = 0; a < digits.size(); ++a) {
        for (std::size_t b = a + 1; b < digits.size(); ++b) {
            if (digits[a] == digits[b]) {
                return 0;
            }
            if (digits[a] > digits[b]) {
                parity = -parity;
            }
        }
    }
    return parity;
}

std::uint64_t orbit_key(IndexTuple digits, int n) {
    std::sort(digits.begin(), digits.end());
    return encode(digits, n);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) {
        throw InvalidArgument("permutation on zero labels");
    }
    std::vector<bool> hit(images_.size(), false);
    for (int image : images_) {
        if (image < 1 || image > n || hit[static_cast<std::size_t>(image - 1)]) {
            throw InvalidArgument("permutation images are not a bijection on 1.." + std::to_string(n));
        }
        hit[static_cast<std::size_t>(image - 1)] = true;
    }
}

Permutation Permutation::identity(int num_sites) {
    std::vector<int> images(static_cast<std::size_t>(num_sites));
    for (int i = 0; i < num_sites; ++i) {
        images[static_cast<std::size_t>(i)] = i + 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int num_sites, int i, int j) {
    if (i < 1 || j < 1 || i > num_sites || j > num_sites) {
        throw InvalidArgument("transposition labels outside 1.." + std::to_string(num_sites));
    }
    if (i == j) {
        throw InvalidArgument("transposition needs two distinct labels");
    }
    std::vector<int> images = identity(num_sites).images();
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(images));
}

Permutation Permutation::cycle(int num_sites, const std::vector<int> &labels) {
    std::vector<int> images = identity(num_sites).images();
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const int from = labels[k];
        const int to = labels[(k + 1) % labels.size()];
        if (from < 1 || from > num_sites) {
            throw InvalidArgument("cycle label outside 1.." + std::to_string(num_sites));
        }
        images[static_cast<std::size_t>(from - 1)] = to;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const { return fixed_set(*this) == SubsetMask::full(size()); }

int Permutation::sign() const {
    int s = 1;
    for (SubsetMask orbit : orbits(*this)) {
        if (orbit.size() % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

Permutation compose(const Permutation &outer, const Permutation &inner) {
    if (outer.size() != inner.size()) {
        throw InvalidArgument("composing permutations of different degree");
    }
    std::vector<int> images(static_cast<std::size_t>(inner.size()));
    for (int i = 1; i <= inner.size(); ++i) {
        images[static_cast<std::size_t>(i - 1)] = outer(inner(i));
    }
    return Permutation(std::move(images));
}

std::vector<std::pair<int, int>> transposition_pairs(int num_sites) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= num_sites; ++i) {
        for (int j = i + 1; j <= num_sites; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

StateVector apply_permutation(const Permutation &sigma, const StateVector &psi) {
    const int num_sites = psi.num_sites();
    if (sigma.size() != num_sites) {
        throw InvalidArgument("permutation of degree " + std::to_string(sigma.size()) + " applied to " +
                              std::to_string(num_sites) + "-site state");
    }
    const int n = psi.local_dim();
    StateVector out(num_sites, n);
    IndexTuple a(static_cast<std::size_t>(num_sites), 0);
    IndexTuple b(a.size());
    std::size_t flat = 0;
    do {
        for (int i = 1; i <= num_sites; ++i) {
            b[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(sigma(i) - 1)];
        }
        out[encode(b, n)] = psi[flat];
        ++flat;
    } while (next_tuple(a, n));
    return out;
}

SubsetMask fixed_set(const Permutation &sigma) {
    SubsetMask out;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (sigma(i) == i) {
            out |= SubsetMask::single(i);
        }
    }
    return out;
}

std::vector<SubsetMask> orbits(const Permutation &sigma) {
    std::vector<SubsetMask> out;
    SubsetMask visited = fixed_set(sigma);
    for (int start = 1; start <= sigma.size(); ++start) {
        if (visited.contains(start)) {
            continue;
        }
        SubsetMask orbit;
        for (int i = start; !orbit.contains(i); i = sigma(i)) {
            orbit |= SubsetMask::single(i);
        }
        visited |= orbit;
        out.push_back(orbit);
    }
    return out;
}

SymmetryReport classify_exchange(const StateVector &psi, double tol) {
    if (!psi.is_normalized(kNormTol)) {
        throw InvalidArgument("classify_exchange needs a normalized state (norm " + std::to_string(psi.norm()) + ")");
    }
    SymmetryReport report;
    bool all_plus = true;
    bool all_minus = true;
    for (auto [i, j] : transposition_pairs(psi.num_sites())) {
        const StateVector swapped = apply_permutation(Permutation::transposition(psi.num_sites(), i, j), psi);
        TranspositionResult r;
        r.i = i;
        r.j = j;
        r.overlap = inner(psi, swapped);
        const double lambda = r.overlap.real() >= 0.0 ? 1.0 : -1.0;
        r.residual = (swapped.amplitudes() - lambda * psi.amplitudes()).norm();
        if (r.residual < tol) {
            r.verdict = lambda > 0 ? TranspositionVerdict::plus_one : TranspositionVerdict::minus_one;
        }
        all_plus = all_plus && r.verdict == TranspositionVerdict::plus_one;
        all_minus = all_minus && r.verdict == TranspositionVerdict::minus_one;
        report.transpositions.push_back(r);
    }
    // A single constituent has no transpositions; S_1 is trivial and every state is symmetric.
    if (all_plus) {
        report.exchange_class = ExchangeClass::symmetric;
    } else if (all_minus) {
        report.exchange_class = ExchangeClass::antisymmetric;
    }
    return report;
}

const char *to_string(TranspositionVerdict v) {
    switch (v) {
        case TranspositionVerdict::plus_one:
            return "+1";
        case TranspositionVerdict::minus_one:
            return "-1";
        case TranspositionVerdict::not_eigenstate:
            return "not_eigenstate";
    }
    return "?";
}

const char *to_string(ExchangeClass c) {
    switch (c) {
        case ExchangeClass::symmetric:
            return "symmetric";
        case ExchangeClass::antisymmetric:
            return "antisymmetric";
        case ExchangeClass::none:
            return "none";
    }
    return "?";
}

StateVector symmetrize(const StateVector &psi) {
    const int n = psi.local_dim();
    const std::size_t dim = psi.dimension();
    // Every distinct rearrangement of a tuple occurs exactly once in the flat
    // enumeration, so (T psi)(b) is the plain mean of psi over b's orbit.
    std::vector<std::uint64_t> keys(dim);
    std::vector<Complex> sums(dim, Complex{});
    std::vector<std::uint32_t> counts(dim, 0);
    IndexTuple a(static_cast<std::size_t>(psi.num_sites()), 0);
    std::size_t flat = 0;
    do {
        const std::uint64_t key = orbit_key(a, n);
        keys[flat] = key;
        sums[key] += psi[flat];
        ++counts[key];
        ++flat;
    } while (next_tuple(a, n));

    StateVector out(psi.num_sites(), n);
    for (std::size_t f = 0; f < dim; ++f) {
        out[f] = sums[keys[f]] / static_cast<double>(counts[keys[f]]);
    }
    return out;
}

StateVector project_perp(const StateVector &psi) { return psi - symmetrize(psi); }

StateVector antisymmetrize(const StateVector &psi) {
    const int n = psi.local_dim();
    const int num_sites = psi.num_sites();
    StateVector out(num_sites, n);
    if (num_sites > n) {
        return out;
    }
    double factorial = 1.0;
    for (int k = 2; k <= num_sites; ++k) {
        factorial *= k;
    }
    const std::size_t dim = psi.dimension();
    std::vector<std::uint64_t> keys(dim);
    std::vector<int> signs(dim);
    std::vector<Complex> sums(dim, Complex{});
    IndexTuple a(static_cast<std::size_t>(num_sites), 0);
    std::size_t flat = 0;
    do {
        signs[flat] = tuple_sign(a);
        if (signs[flat] != 0) {
            keys[flat] = orbit_key(a, n);
            sums[keys[flat]] += static_cast<double>(signs[flat]) * psi[flat];
        }
        ++flat;
    } while (next_tuple(a, n));
    for (std::size_t f = 0; f < dim; ++f) {
        if (signs[f] != 0) {
            out[f] = static_cast<double>(signs[f]) * sums[keys[f]] / factorial;
        }
    }
    return out;
}

EquipollenceVerdict equipollent(const Eigen::VectorXcd &c, const Eigen::VectorXcd &d, double tol) {
    if (c.size() != d.size()) {
        throw InvalidArgument("equipollence needs coefficient arrays of equal length");
    }
    if (c.norm() <= kZeroTol || d.norm() <= kZeroTol) {
        throw ZeroStateError("equipollence of a zero vector");
    }
    const double anchor_floor = std::sqrt(tol);
    EquipollenceVerdict verdict;
    verdict.max_deviation = std::numeric_limits<double>::infinity();
    Eigen::Index anchor = -1;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        if (std::abs(c[k]) > anchor_floor && std::abs(d[k]) > anchor_floor) {
            anchor = k;
            break;
        }
    }
    if (anchor < 0) {
        return verdict;
    }
    const Complex gamma = c[anchor] / d[anchor];
    verdict.max_deviation = (c - gamma * d).cwiseAbs().maxCoeff();
    if (std::abs(std::abs(gamma) - 1.0) > tol || verdict.max_deviation > tol) {
        return verdict;
    }
    verdict.phase = gamma;
    verdict.status = std::abs(gamma - 1.0) <= tol ? EquipollenceStatus::strict : EquipollenceStatus::up_to_phase;
    return verdict;
}

const char *to_string(EquipollenceStatus s) {
    switch (s) {
        case EquipollenceStatus::strict:
            return "strict";
        case EquipollenceStatus::up_to_phase:
            return "up_to_phase";
        case EquipollenceStatus::not_equipollent:
            return "not_equipollent";
    }
    return "?";
}

StateVector apply_local_unitary(const Eigen::MatrixXcd &u, int label, const StateVector &psi) {
    const int n = psi.local_dim();
    if (u.rows() != n || u.cols() != n) {
        throw InvalidArgument("local operator must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (label < 1 || label > psi.num_sites()) {
        throw InvalidArgument("site label " + std::to_string(label) + " out of range");
    }
    const std::size_t stride = stride_of(label - 1, psi.num_sites(), n);
    const std::size_t block = stride * static_cast<std::size_t>(n);
    StateVector out = psi;
    Eigen::VectorXcd fiber(n);
    for (std::size_t base = 0; base < psi.dimension(); base += block) {
        for (std::size_t s = 0; s < stride; ++s) {
            for (int k = 0; k < n; ++k) {
                fiber[k] = psi[base + static_cast<std::size_t>(k) * stride + s];
            }
            const Eigen::VectorXcd mapped = u * fiber;
            for (int k = 0; k < n; ++k) {
                out[base + static_cast<std::size_t>(k) * stride + s] = mapped[k];
            }
        }
    }
    return out;
}

StateVector apply_collective_unitary(const Eigen::MatrixXcd &u, const StateVector &psi, double tol) {
    const int n = psi.local_dim();
    if (u.rows() != n || u.cols() != n) {
        throw InvalidArgument("collective unitary must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    const double defect = (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > tol) {
        throw InvalidArgument("operator is not unitary (max |U^dag U - I| = " + std::to_string(defect) + ")");
    }
    StateVector out = psi;
    for (int label = 1; label <= psi.num_sites(); ++label) {
        out = apply_local_unitary(u, label, out);
    }
    return out;
}

}  // namespace mqsym
