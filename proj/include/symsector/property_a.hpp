#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "symsector/combinatorics.hpp"
#include "symsector/projector.hpp"
#include "symsector/rng.hpp"
#include "symsector/states.hpp"

namespace symsector {

// Result of testing whether every orbit sum of an F matrix vanishes.
struct PropertyAReport {
    bool holds = false;
    std::vector<std::pair<Composition, cdouble>> violations; // |sum| > tol
    double max_abs_sum = 0.0;
    double tolerance = 0.0;
};

// Tolerance scaled to the magnitude of n-fold row products.
inline double default_property_a_tol(const FMatrix& f) {
    double max_row = 0.0;
    for (int m = 0; m < f.n; ++m) max_row = std::max(max_row, f.row_norm(m));
    return 1e-12 * std::pow(std::max(max_row, 1e-30), f.n);
}

// Evaluates sum_{G_k} f_{1,j_1}...f_{n,j_n} for every composition k; the
// matrix has Property A when all sums vanish within tol. Rows may be
// arbitrary (no normalization assumed).
inline PropertyAReport property_a_check(const FMatrix& f,
                                        std::optional<double> tol = std::nullopt) {
    PropertyAReport report;
    report.tolerance = tol.value_or(default_property_a_tol(f));
    const SymmetricBasis basis(f.d, f.n);
    const std::vector<cdouble> sums = basis.orbit_sums(f);
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const double mag = std::abs(sums[i]);
        report.max_abs_sum = std::max(report.max_abs_sum, mag);
        if (mag > report.tolerance)
            report.violations.emplace_back(basis.compositions()[i], sums[i]);
    }
    report.holds = report.violations.empty();
    return report;
}

// Smallest row index whose largest entry magnitude is <= tol, if any.
inline std::optional<int> has_zero_row(const FMatrix& f, double tol = 1e-12) {
    for (int m = 0; m < f.n; ++m) {
        double max_entry = 0.0;
        for (int j = 0; j < f.d; ++j) max_entry = std::max(max_entry, std::abs(f(m, j)));
        if (max_entry <= tol) return m;
    }
    return std::nullopt;
}

struct LemmaFuzzReport {
    int n = 0;
    int d = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double row_floor = 0.0;
    double tolerance = 0.0;
    int lemma_violations = 0;                      // trials with Property A and no zero row
    std::vector<int> violating_trials;             // indices of those trials
    double min_max_abs_sum = 0.0;                  // min over trials of max |orbit sum|
};

// Randomized contrapositive check: a matrix with every row norm >= row_floor
// must fail Property A. Each trial draws complex Gaussian rows (rows below
// the floor are redrawn), substream-seeded so any trial can be replayed
// alone.
inline LemmaFuzzReport lemma_fuzz(int n, int d, int trials, std::uint64_t seed,
                                  double row_floor = 0.1, double tol = 1e-8) {
    if (row_floor <= 0.0)
        throw InputError("lemma_fuzz: row_floor must be positive");
    LemmaFuzzReport report;
    report.n = n;
    report.d = d;
    report.trials = trials;
    report.seed = seed;
    report.row_floor = row_floor;
    report.tolerance = tol;
    report.min_max_abs_sum = std::numeric_limits<double>::infinity();
    if (trials == 0) {
        report.min_max_abs_sum = 0.0;
        return report;
    }
    const SymmetricBasis basis(d, n);
    std::vector<cdouble> sums;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        FMatrix f(n, d);
        for (int m = 0; m < n; ++m) {
            double nrm = 0.0;
            do {
                nrm = 0.0;
                for (int j = 0; j < d; ++j) {
                    f(m, j) = cdouble(rng.gaussian(), rng.gaussian());
                    nrm += std::norm(f(m, j));
                }
                nrm = std::sqrt(nrm);
            } while (nrm < row_floor);
        }
        basis.orbit_sums(f, sums);
        double max_abs = 0.0;
        for (const cdouble& s : sums) max_abs = std::max(max_abs, std::abs(s));
        report.min_max_abs_sum = std::min(report.min_max_abs_sum, max_abs);
        if (max_abs <= tol && !has_zero_row(f, row_floor * 1e-6)) {
            ++report.lemma_violations;
            if (report.violating_trials.size() < 100)
                report.violating_trials.push_back(trial);
        }
    }
    return report;
}

} // namespace symsector
