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

#include "mqsym/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mqsym/error.hpp"
#include "mqsym/factorization.hpp"
#include "mqsym/mixed.hpp"
#include "mqsym/permutation.hpp"

namespace mqsym {

namespace {

constexpr std::size_t kMaxSkipLog = 16;

void fail(CheckVerdict &v, int trial, Seed seed, std::string note, std::optional<StateVector> state = std::nullopt,
          std::optional<DensityMatrix> density = std::nullopt) {
    ++v.failures;
    if (v.counterexamples.size() < kMaxCounterexamples) {
        v.counterexamples.push_back({trial, seed, std::move(note), std::move(state), std::move(density)});
    }
}

void skip(CheckVerdict &v, std::string why) {
    ++v.skipped;
    if (v.skip_log.size() < kMaxSkipLog) {
        v.skip_log.push_back(std::move(why));
    }
}

void track_max(CheckVerdict &v, const std::string &key, double value) {
    auto [it, inserted] = v.metrics.emplace(key, value);
    if (!inserted) {
        it->second = std::max(it->second, value);
    }
}

void track_min(CheckVerdict &v, const std::string &key, double value) {
    auto [it, inserted] = v.metrics.emplace(key, value);
    if (!inserted) {
        it->second = std::min(it->second, value);
    }
}

void require_shape(const CheckOptions &o, int min_sites) {
    if (o.trials < 0) {
        throw InvalidArgument("trial count must be non-negative");
    }
    if (o.num_sites < min_sites) {
        throw InvalidArgument("suite needs at least " + std::to_string(min_sites) + " sites");
    }
    checked_dimension(o.num_sites, o.local_dim);
}

Complex random_phase(Rng &rng) {
    const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
    return std::polar(1.0, theta);
}

// Largest pairwise deviation between block states, or +inf when some pair is
// not strictly equipollent.
double strict_equipollence_spread(const FactorizationResult &f, double tol) {
    double worst = 0.0;
    for (std::size_t a = 0; a < f.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < f.blocks.size(); ++b) {
            const EquipollenceVerdict e =
                equipollent(f.blocks[a].state.amplitudes(), f.blocks[b].state.amplitudes(), tol);
            if (e.status != EquipollenceStatus::strict) {
                return std::numeric_limits<double>::infinity();
            }
            worst = std::max(worst, e.max_deviation);
        }
    }
    return worst;
}

std::optional<FactorizationResult> factorize_or_fail(CheckVerdict &v, int trial, Seed seed, const StateVector &psi,
                                                     double tol) {
    try {
        return finest_factorization(psi, tol);
    } catch (const ToleranceError &e) {
        fail(v, trial, seed, e.what(), psi);
        return std::nullopt;
    }
}

// Builds psi from random states on the blocks of `partition`.
StateVector random_block_product(const Partition &partition, int local_dim, Seed seed) {
    std::vector<std::pair<SubsetMask, StateVector>> parts;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        parts.emplace_back(partition[k], random_state(partition[k].size(), local_dim, derive_seed(seed, k)));
    }
    return tensor_product(parts, partition.num_sites());
}

std::vector<int> distinct_levels(int count, int local_dim, Rng &rng) {
    std::vector<int> levels(static_cast<std::size_t>(local_dim));
    std::iota(levels.begin(), levels.end(), 0);
    std::shuffle(levels.begin(), levels.end(), rng);
    levels.resize(static_cast<std::size_t>(count));
    return levels;
}

}  // namespace

MeetFactoringOutcome check_meet_factoring(const StateVector &psi, const Partition &a, const Partition &b, double tol) {
    MeetFactoringOutcome out;
    auto all_factor = [&](const Partition &p) {
        return std::all_of(p.blocks().begin(), p.blocks().end(),
                           [&](SubsetMask block) { return is_factoring_subset(psi, block, tol); });
    };
    out.premise_holds = all_factor(a) && all_factor(b);
    if (!out.premise_holds) {
        return out;
    }
    const Partition c = meet(a, b);
    out.conclusion_holds = true;
    for (SubsetMask block : c.blocks()) {
        const double deficit = block == SubsetMask::full(psi.num_sites()) ? 0.0 : 1.0 - purity(partial_trace(psi, block));
        out.max_purity_deficit = std::max(out.max_purity_deficit, deficit);
        out.conclusion_holds = out.conclusion_holds && deficit < tol;
    }
    return out;
}

CheckVerdict check_lemma1(const CheckOptions &o) {
    require_shape(o, 1);
    CheckVerdict v;
    v.claim = "lemma1";

    // Adversarial probe: GHZ factors over neither bipartition, so the premise
    // filter must reject it rather than count it as a trial.
    if (o.num_sites >= 2) {
        const StateVector probe = ghz(o.num_sites, o.local_dim);
        const SubsetMask last = SubsetMask::single(o.num_sites);
        const SubsetMask first = SubsetMask::single(1);
        const Partition a = Partition::validate({complement(last, o.num_sites), last}, o.num_sites);
        const Partition b = Partition::validate({first, complement(first, o.num_sites)}, o.num_sites);
        if (!check_meet_factoring(probe, a, b, o.tol).premise_holds) {
            skip(v, "GHZ probe: premise fails for " + a.str() + " / " + b.str());
        } else {
            fail(v, -1, 0, "GHZ probe unexpectedly satisfied the premise", probe);
        }
    }

    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const Partition target = random_partition(o.num_sites, rng);
        const auto [a, b] = random_coarsening_pair(target, rng);
        const StateVector psi = random_block_product(target, o.local_dim, derive_seed(seed, 1000));

        const MeetFactoringOutcome outcome = check_meet_factoring(psi, a, b, o.tol);
        if (!outcome.premise_holds) {
            skip(v, "trial " + std::to_string(t) + ": premise fails for " + a.str() + " / " + b.str());
            continue;
        }
        ++v.trials;
        v.max_residual = std::max(v.max_residual, outcome.max_purity_deficit);
        if (!outcome.conclusion_holds) {
            fail(v, t, seed, "state does not factor over meet " + meet(a, b).str(), psi);
            continue;
        }
        const auto f = factorize_or_fail(v, t, seed, psi, o.tol);
        if (f && !f->finest.refines(meet(a, b))) {
            fail(v, t, seed, "finest partition " + f->finest.str() + " does not refine " + meet(a, b).str(), psi);
        }
        ++v.tallies["meet_blocks_" + std::to_string(meet(a, b).size())];
    }
    return v;
}

CheckVerdict check_theorem1(const CheckOptions &o) {
    require_shape(o, 2);
    CheckVerdict v;
    v.claim = "theorem1";
    const int N = o.num_sites;
    const int n = o.local_dim;

    auto check_antisymmetric = [&](int t, Seed seed, const StateVector &psi, const char *kind) {
        if (classify_exchange(psi).exchange_class != ExchangeClass::antisymmetric) {
            skip(v, std::string("trial ") + std::to_string(t) + ": " + kind + " input is not antisymmetric");
            return;
        }
        ++v.trials;
        ++v.tallies[std::string("antisymmetric_") + kind];
        const auto f = factorize_or_fail(v, t, seed, psi, o.tol);
        if (!f) {
            return;
        }
        v.max_residual = std::max(v.max_residual, f->residual);
        if (f->M() != 1) {
            fail(v, t, seed, std::string("antisymmetric ") + kind + " state has M = " + std::to_string(f->M()), psi);
        }
    };

    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);

        if (n >= N) {
            const Eigen::MatrixXcd u = random_local_unitary(n, derive_seed(seed, 1));
            const StateVector det = apply_collective_unitary(u, slater(N, n, distinct_levels(N, n, rng)));
            check_antisymmetric(t, seed, det, "slater");
            check_antisymmetric(t, seed, random_antisymmetric(N, n, derive_seed(seed, 2)), "superposition");
        }

        StateVector psi(N, n);
        const char *source = "";
        switch (t % 3) {
            case 0:
                psi = random_symmetric(N, n, derive_seed(seed, 3));
                source = "random_symmetric";
                break;
            case 1:
                psi = normalize(symmetrize(random_product(N, n, derive_seed(seed, 4))));
                source = "symmetrized_product";
                break;
            default:
                psi = random_phase(rng) * equipollent_product(N, random_local_unitary(n, derive_seed(seed, 5)));
                source = "equipollent_product";
                break;
        }
        if (classify_exchange(psi).exchange_class != ExchangeClass::symmetric) {
            skip(v, "trial " + std::to_string(t) + ": " + source + " input is not symmetric");
            continue;
        }
        ++v.trials;
        const auto f = factorize_or_fail(v, t, seed, psi, o.tol);
        if (!f) {
            continue;
        }
        v.max_residual = std::max(v.max_residual, f->residual);
        if (f->residual >= o.reconstruction_tol) {
            fail(v, t, seed,
                 std::string(source) + ": claimed factorization misses psi by " + std::to_string(f->residual), psi);
            continue;
        }
        if (f->M() == 1) {
            ++v.tallies["symmetric_M_1"];
        } else if (f->M() == static_cast<std::size_t>(N)) {
            ++v.tallies["symmetric_M_N"];
            const double spread = strict_equipollence_spread(*f, o.equipollence_tol);
            if (!std::isfinite(spread)) {
                fail(v, t, seed, std::string(source) + ": fully separable symmetric state with non-equipollent factors",
                     psi);
            } else {
                track_max(v, "max_equipollence_deviation", spread);
            }
        } else {
            fail(v, t, seed, std::string(source) + ": symmetric state has M = " + std::to_string(f->M()), psi);
        }
    }
    return v;
}

CheckVerdict check_prop1_corollary1(const CheckOptions &o) {
    require_shape(o, 2);
    CheckVerdict v;
    v.claim = "prop1";
    const int N = o.num_sites;
    const int n = o.local_dim;

    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        std::uniform_int_distribution<int> pick(1, N);
        int i = pick(rng);
        int j = pick(rng);
        while (j == i) {
            j = pick(rng);
        }
        if (i > j) {
            std::swap(i, j);
        }
        const Permutation swap_ij = Permutation::transposition(N, i, j);
        const SubsetMask pair = SubsetMask::single(i) | SubsetMask::single(j);

        StateVector psi(N, n);
        if (t % 4 == 3) {
            // Eigenstate of (i j) with no imposed product structure.
            const StateVector phi = random_state(N, n, derive_seed(seed, 1));
            const double sign = rng() % 2 == 0 ? 1.0 : -1.0;
            psi = normalize(phi + Complex{sign, 0.0} * apply_permutation(swap_ij, phi));
        } else {
            StateVector core(2, n);
            const StateVector c = random_state(2, n, derive_seed(seed, 2));
            const StateVector swapped = apply_permutation(Permutation::transposition(2, 1, 2), c);
            if (t % 4 == 0) {
                core = normalize(c - swapped);
            } else if (t % 4 == 1) {
                core = normalize(c + swapped);
            } else {
                const StateVector u(1, n, random_unit_vector(n, rng));
                core = kron(u, u);
            }
            std::vector<std::pair<SubsetMask, StateVector>> parts{{pair, core}};
            if (N > 2) {
                const SubsetMask rest = complement(pair, N);
                parts.emplace_back(rest, random_state(rest.size(), n, derive_seed(seed, 3)));
            }
            psi = tensor_product(parts, N);
        }

        const StateVector image = apply_permutation(swap_ij, psi);
        double lambda = 0.0;
        if ((image.amplitudes() - psi.amplitudes()).norm() < o.tol) {
            lambda = 1.0;
        } else if ((image.amplitudes() + psi.amplitudes()).norm() < o.tol) {
            lambda = -1.0;
        } else {
            skip(v, "trial " + std::to_string(t) + ": input is not an eigenstate of the transposition");
            continue;
        }
        ++v.trials;
        const auto f = factorize_or_fail(v, t, seed, psi, o.tol);
        if (!f) {
            continue;
        }
        v.max_residual = std::max(v.max_residual, f->residual);
        const std::string where = "(" + std::to_string(i) + " " + std::to_string(j) + ")";
        if (lambda < 0) {
            ++v.tallies["lambda_minus"];
            if (separates(*f, i, j)) {
                fail(v, t, seed, "antisymmetric under " + where + " yet separable across it", psi);
            }
            continue;
        }
        if (!separates(*f, i, j)) {
            ++v.tallies["lambda_plus_joint"];
            continue;
        }
        ++v.tallies["lambda_plus_separated"];
        const FactorBlock &bi = f->blocks[f->finest.block_of(i)];
        const FactorBlock &bj = f->blocks[f->finest.block_of(j)];
        if (bi.sites.size() != 1 || bj.sites.size() != 1) {
            fail(v, t, seed, "separated under " + where + " but not into single-site factors", psi);
            continue;
        }
        const EquipollenceVerdict e = equipollent(bi.state.amplitudes(), bj.state.amplitudes(), o.equipollence_tol);
        if (e.status != EquipollenceStatus::strict) {
            fail(v, t, seed, "single-site factors at " + where + " are not strictly equipollent", psi);
        } else {
            track_max(v, "max_equipollence_deviation", e.max_deviation);
        }
    }
    return v;
}

CheckVerdict check_prop2(const CheckOptions &o) {
    require_shape(o, 1);
    CheckVerdict v;
    v.claim = "prop2";
    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        const StateVector psi = random_product(o.num_sites, o.local_dim, seed);
        ++v.trials;
        const StateVector sym = symmetrize(psi);
        const StateVector perp = project_perp(psi);
        const double sym_norm = sym.norm();
        track_min(v, "min_symmetric_norm", sym_norm);
        const double split_error = max_abs_diff(psi, sym + perp);
        track_max(v, "max_decomposition_error", split_error);
        v.max_residual = std::max(v.max_residual, split_error);
        if (sym_norm <= o.zero_tol) {
            fail(v, t, seed, "product state annihilated by the symmetrizer", psi);
        }
        if (split_error > o.zero_tol) {
            fail(v, t, seed, "psi != T psi + (1 - T) psi", psi);
        }
    }
    return v;
}

CheckVerdict check_prop3(const CheckOptions &o) {
    require_shape(o, 2);
    CheckVerdict v;
    v.claim = "prop3";
    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        const StateVector psi = random_product(o.num_sites, o.local_dim, seed);
        if (classify_exchange(psi).exchange_class == ExchangeClass::symmetric) {
            skip(v, "trial " + std::to_string(t) + ": product input is already symmetric");
            continue;
        }
        ++v.trials;
        const StateVector projected = normalize(symmetrize(psi), o.zero_tol);
        const auto f = factorize_or_fail(v, t, seed, projected, o.tol);
        if (!f) {
            continue;
        }
        v.max_residual = std::max(v.max_residual, f->residual);
        if (f->M() != 1) {
            fail(v, t, seed, "normalized T psi has M = " + std::to_string(f->M()), psi);
        }
    }
    return v;
}

CheckVerdict check_corollary2(const CheckOptions &o) {
    require_shape(o, 2);
    CheckVerdict v;
    v.claim = "corollary2";
    const int N = o.num_sites;
    const int n = o.local_dim;

    // Reverse direction: a symmetric, fully separable psi is rebuilt as
    // phase * (x) W|0> with W completed from the common block state.
    auto reverse = [&](int t, Seed seed, const StateVector &psi, const FactorizationResult &f) {
        const double spread = strict_equipollence_spread(f, o.equipollence_tol);
        if (!std::isfinite(spread)) {
            fail(v, t, seed, "fully separable symmetric state with non-equipollent factors", psi);
            return;
        }
        track_max(v, "max_equipollence_deviation", spread);
        const Eigen::MatrixXcd w = unitary_with_first_column(f.blocks.front().state.amplitudes());
        const double unitarity = (w.adjoint() * w - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
        const StateVector rebuilt = f.global_phase * equipollent_product(N, w);
        const double residual = (rebuilt.amplitudes() - psi.amplitudes()).norm();
        track_max(v, "max_reconstruction_residual", residual);
        v.max_residual = std::max(v.max_residual, residual);
        if (residual >= o.reconstruction_tol || unitarity > kNormTol) {
            fail(v, t, seed, "reconstruction as (x) U|0> misses by " + std::to_string(residual), psi);
        }
    };

    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const Eigen::MatrixXcd u = random_local_unitary(n, derive_seed(seed, 1));
        const StateVector forward = equipollent_product(N, u);
        ++v.trials;
        if (classify_exchange(forward).exchange_class != ExchangeClass::symmetric) {
            fail(v, t, seed, "(x) U|0> is not symmetric", forward);
            continue;
        }
        const auto f = factorize_or_fail(v, t, seed, forward, o.tol);
        if (!f) {
            continue;
        }
        if (f->M() != static_cast<std::size_t>(N)) {
            fail(v, t, seed, "(x) U|0> has M = " + std::to_string(f->M()), forward);
            continue;
        }
        ++v.tallies["forward"];

        const StateVector scrambled = random_phase(rng) * forward;
        if (const auto g = factorize_or_fail(v, t, seed, scrambled, o.tol)) {
            ++v.tallies["reverse_phased_product"];
            reverse(t, seed, scrambled, *g);
        }

        const StateVector sym = random_symmetric(N, n, derive_seed(seed, 2));
        if (const auto g = factorize_or_fail(v, t, seed, sym, o.tol); g && g->M() == static_cast<std::size_t>(N)) {
            ++v.tallies["reverse_random_symmetric"];
            reverse(t, seed, sym, *g);
        }
    }
    return v;
}

CheckVerdict check_lemma3(const CheckOptions &o) {
    require_shape(o, 1);
    CheckVerdict v;
    v.claim = "lemma3";
    const int N = o.num_sites;
    std::vector<int> ascending(static_cast<std::size_t>(N));
    std::iota(ascending.begin(), ascending.end(), 1);

    if (N >= 2) {
        const DensityMatrix probe = DensityMatrix::from_state(ghz(N, o.local_dim));
        const SubsetMask last = SubsetMask::single(N);
        const Partition a = Partition::validate({complement(last, N), last}, N);
        if (check_meet_separability(probe, a, a, o.separability_tol).status == MeetStatus::premise_failed) {
            skip(v, "GHZ probe: premise fails for " + a.str());
        } else {
            fail(v, -1, 0, "GHZ probe unexpectedly satisfied the premise", std::nullopt, probe);
        }
    }

    for (int t = 0; t < o.trials; ++t) {
        const Seed seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        // Even trials: fully uncorrelated sites. Odd trials: correlated blocks.
        const Partition target = t % 2 == 0 ? Partition::singletons(N) : random_partition(N, rng);
        std::vector<DensityMatrix> factors;
        for (std::size_t k = 0; k < target.size(); ++k) {
            factors.push_back(random_density_matrix(target[k].labels(), o.local_dim, derive_seed(seed, k + 1)));
        }
        const DensityMatrix rho = tensor_product(factors).reordered(ascending);
        const auto [a, b] = random_coarsening_pair(target, rng);

        const MeetSeparabilityVerdict verdict = check_meet_separability(rho, a, b, o.separability_tol);
        if (verdict.status == MeetStatus::premise_failed) {
            skip(v, "trial " + std::to_string(t) + ": premise fails (deviations " +
                        std::to_string(verdict.premise_a.deviation) + ", " +
                        std::to_string(verdict.premise_b.deviation) + ")");
            continue;
        }
        ++v.trials;
        track_max(v, "max_premise_deviation", std::max(verdict.premise_a.deviation, verdict.premise_b.deviation));
        v.max_residual = std::max(v.max_residual, verdict.conclusion->deviation);
        if (verdict.status == MeetStatus::conclusion_failed) {
            fail(v, t, seed, "not directly separable over meet " + verdict.conclusion->partition.str(), std::nullopt,
                 rho);
        }
        ++v.tallies[t % 2 == 0 ? "single_site_products" : "correlated_blocks"];
    }
    return v;
}

const std::vector<std::string> &suite_ids() {
    static const std::vector<std::string> ids{"lemma1", "theorem1",   "prop1", "prop2",
                                              "prop3",  "corollary2", "lemma3"};
    return ids;
}

CheckVerdict run_suite(const std::string &id, const CheckOptions &options) {
    if (id == "lemma1") return check_lemma1(options);
    if (id == "theorem1") return check_theorem1(options);
    if (id == "prop1") return check_prop1_corollary1(options);
    if (id == "prop2") return check_prop2(options);
    if (id == "prop3") return check_prop3(options);
    if (id == "corollary2") return check_corollary2(options);
    if (id == "lemma3") return check_lemma3(options);
    throw InvalidArgument("unknown suite '" + id + "'");
}

}  // namespace mqsym
