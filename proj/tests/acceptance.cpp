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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "mqsym/factorization.hpp"
#include "mqsym/generators.hpp"
#include "mqsym/permutation.hpp"
#include "mqsym/verifier.hpp"
#include "oracles.hpp"

using namespace mqsym;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(const char *name, double time_limit_s, const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = time_limit_s <= 0.0 || elapsed < time_limit_s;
    const bool ok = o.ok && in_time;
    failures += ok ? 0 : 1;
    char timing[96];
    if (time_limit_s > 0.0) {
        std::snprintf(timing, sizeof(timing), "%.3fs (limit %.0fs)", elapsed, time_limit_s);
    } else {
        std::snprintf(timing, sizeof(timing), "%.3fs", elapsed);
    }
    std::printf("%s %s: %s [%s]\n", ok ? "PASS" : "FAIL", name, o.detail.c_str(), timing);
    std::fflush(stdout);
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", x);
    return buf;
}

CheckOptions options(int trials, int N, int n, Seed seed) {
    CheckOptions o;
    o.trials = trials;
    o.num_sites = N;
    o.local_dim = n;
    o.seed = seed;
    return o;
}

std::string summary(const CheckVerdict &v) {
    return v.claim + " trials=" + std::to_string(v.trials) + " skipped=" + std::to_string(v.skipped) +
           " failures=" + std::to_string(v.failures) + " max_residual=" + sci(v.max_residual);
}

double metric(const CheckVerdict &v, const std::string &key, double fallback) {
    const auto it = v.metrics.find(key);
    return it == v.metrics.end() ? fallback : it->second;
}

}  // namespace

int main() {
    criterion("meet_factoring N=4,5 n=2 200 trials each", 10.0, [] {
        Outcome out;
        for (int N : {4, 5}) {
            const CheckVerdict v = check_lemma1(options(200, N, 2, 1));
            const bool ok = v.passed() && v.trials == 200 && v.max_residual < 1e-9;
            out.ok = out.ok && ok;
            out.detail += "N=" + std::to_string(N) + " " + summary(v) + "; ";
        }
        return out;
    });

    criterion("slater_globally_entangled N=3 n=3 and N=4 n=4, 100 each", 5.0, [] {
        Outcome out;
        int bad = 0;
        int total = 0;
        for (const auto [N, n] : {std::pair{3, 3}, std::pair{4, 4}}) {
            for (int t = 0; t < 100; ++t) {
                const Seed seed = derive_seed(2, static_cast<std::uint64_t>(100 * N + t));
                Rng rng(seed);
                std::vector<int> levels(static_cast<std::size_t>(n));
                std::iota(levels.begin(), levels.end(), 0);
                std::shuffle(levels.begin(), levels.end(), rng);
                levels.resize(static_cast<std::size_t>(N));
                StateVector psi = slater(N, n, levels);
                if (t % 2 == 1) psi = apply_collective_unitary(random_local_unitary(n, seed), psi);
                ++total;
                const bool anti = classify_exchange(psi).exchange_class == ExchangeClass::antisymmetric;
                if (!anti || finest_factorization(psi).M() != 1) ++bad;
            }
        }
        out.ok = bad == 0 && total == 200;
        out.detail = std::to_string(total) + " Slater states, " + std::to_string(bad) + " with M != 1";
        return out;
    });

    criterion("symmetric_dichotomy N=4 n=2 200 trials", 30.0, [] {
        const CheckVerdict v = check_theorem1(options(200, 4, 2, 3));
        const double dev = metric(v, "max_equipollence_deviation", 0.0);
        Outcome out;
        const int m1 = v.tallies.count("symmetric_M_1") ? v.tallies.at("symmetric_M_1") : 0;
        const int mn = v.tallies.count("symmetric_M_N") ? v.tallies.at("symmetric_M_N") : 0;
        out.ok = v.passed() && v.trials == 200 && m1 + mn == 200 && mn > 0 && dev < 1e-8;
        out.detail = summary(v) + " M=1:" + std::to_string(m1) + " M=4:" + std::to_string(mn) +
                     " max_equipollence_deviation=" + sci(dev);
        return out;
    });

    criterion("equipollent_products N=4 n=2,3 100 unitaries each", 0.0, [] {
        Outcome out;
        for (int n : {2, 3}) {
            const CheckVerdict v = check_corollary2(options(100, 4, n, 4));
            const double rec = metric(v, "max_reconstruction_residual", 1.0);
            const bool ok = v.passed() && v.tallies.at("forward") == 100 && rec < 1e-8;
            out.ok = out.ok && ok;
            out.detail += "n=" + std::to_string(n) + " " + summary(v) + " reconstruction=" + sci(rec) + "; ";
        }
        return out;
    });

    criterion("products_not_annihilated N=4 n=2 500 trials", 0.0, [] {
        const CheckVerdict v = check_prop2(options(500, 4, 2, 5));
        const double min_norm = metric(v, "min_symmetric_norm", 0.0);
        const double split = metric(v, "max_decomposition_error", 1.0);
        Outcome out;
        out.ok = v.passed() && v.trials == 500 && min_norm > 1e-12 && split <= 1e-12;
        out.detail = summary(v) + " min_norm=" + sci(min_norm) + " decomposition_error=" + sci(split);
        return out;
    });

    criterion("symmetrized_nonsymmetric_products_entangled N=2..5 n=2", 0.0, [] {
        Outcome out;
        int trials = 0;
        for (int N = 2; N <= 5; ++N) {
            const CheckVerdict v = check_prop3(options(50, N, 2, 6));
            out.ok = out.ok && v.passed();
            trials += v.trials;
            out.detail += "N=" + std::to_string(N) + " trials=" + std::to_string(v.trials) +
                          " failures=" + std::to_string(v.failures) + "; ";
        }
        out.ok = out.ok && trials == 200;
        const StateVector p01 = StateVector::basis(2, std::vector<int>{0, 1});
        const StateVector projected = normalize(symmetrize(p01));
        Eigen::VectorXcd bell(4);
        bell << 0, M_SQRT1_2, M_SQRT1_2, 0;
        const double exact = (projected.amplitudes() - bell).cwiseAbs().maxCoeff();
        const bool bell_ok = exact < 1e-15;
        const bool bell_m1 = finest_factorization(projected).M() == 1;
        out.ok = out.ok && bell_ok && bell_m1;
        out.detail += "total=" + std::to_string(trials) + " |01> -> Bell deviation=" + sci(exact);
        return out;
    });

    criterion("mixed_meet_separability N=2..5 200 trials", 0.0, [] {
        Outcome out;
        double worst = 0.0;
        int trials = 0;
        for (int N = 2; N <= 5; ++N) {
            const CheckVerdict v = check_lemma3(options(50, N, 2, 7));
            out.ok = out.ok && v.passed();
            trials += v.trials;
            worst = std::max(worst, v.max_residual);
        }
        out.ok = out.ok && trials == 200 && worst < 1e-10;
        out.detail = "trials=" + std::to_string(trials) + " max_deviation=" + sci(worst);
        return out;
    });

    criterion("oracle_equivalence symmetrizer and minimal block N<=6", 0.0, [] {
        Outcome out;
        double worst = 0.0;
        long states = 0;
        for (int n = 2; n <= 3; ++n) {
            for (int N = 1; N <= 6; ++N) {
                const std::uint64_t dim = checked_dimension(N, n);
                for (std::uint64_t flat = 0; flat < dim; ++flat) {
                    const StateVector b = StateVector::basis(n, decode(flat, N, n));
                    const Eigen::VectorXcd ref = oracle::nfactorial_loop(b.amplitudes(), N, n, false);
                    worst = std::max(worst, (symmetrize(b).amplitudes() - ref).cwiseAbs().maxCoeff());
                    ++states;
                }
            }
        }
        int block_mismatch = 0;
        int block_checks = 0;
        for (int t = 0; t < 120; ++t) {
            const int N = 1 + t % 6;
            const Seed seed = derive_seed(8, static_cast<std::uint64_t>(t));
            Rng rng(seed);
            const Partition target = random_partition(N, rng);
            std::vector<std::pair<SubsetMask, StateVector>> parts;
            for (std::size_t k = 0; k < target.size(); ++k) {
                parts.emplace_back(target[k], random_state(target[k].size(), 2, derive_seed(seed, k)));
            }
            StateVector psi = tensor_product(parts, N);
            if (t % 10 == 0 && N >= 2) psi = ghz(N);
            if (t % 10 == 1 && N >= 2) psi = w_state(N);
            for (int i = 1; i <= N; ++i) {
                ++block_checks;
                const std::uint64_t expected = oracle::minimal_block(psi.amplitudes(), N, 2, i, kPureTol);
                if (minimal_factoring_block(psi, i).bits() != expected) ++block_mismatch;
            }
        }
        out.ok = worst < 1e-10 && block_mismatch == 0;
        out.detail = std::to_string(states) + " basis states, max symmetrizer deviation=" + sci(worst) + "; " +
                     std::to_string(block_checks) + " minimal blocks, " + std::to_string(block_mismatch) +
                     " mismatches";
        return out;
    });

    criterion("negative_control purity threshold 0.5 breaks symmetric_dichotomy", 0.0, [] {
        CheckOptions o = options(200, 4, 2, 3);
        o.tol = 0.5;
        const CheckVerdict v = check_theorem1(o);
        Outcome out;
        out.ok = !v.passed();
        out.detail = "corrupted run: " + summary(v) + (out.ok ? " (detected)" : " (NOT detected)");
        return out;
    });

    criterion("collective_unitary_commutes_with_symmetrizer N=4 100 pairs", 0.0, [] {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const int n = 2 + t % 2;
            const Seed seed = derive_seed(10, static_cast<std::uint64_t>(t));
            const Eigen::MatrixXcd u = random_local_unitary(n, seed);
            const StateVector psi = random_state(4, n, derive_seed(seed, 1));
            const StateVector vt = apply_collective_unitary(u, symmetrize(psi));
            const StateVector tv = symmetrize(apply_collective_unitary(u, psi));
            worst = std::max(worst, (vt.amplitudes() - tv.amplitudes()).norm());
        }
        return Outcome{worst < 1e-10, "max ||VT psi - TV psi||=" + sci(worst)};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
