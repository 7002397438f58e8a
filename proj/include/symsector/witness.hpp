#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsector/combinatorics.hpp"
#include "symsector/errors.hpp"
#include "symsector/linalg.hpp"
#include "symsector/optimizer.hpp"
#include "symsector/projector.hpp"
#include "symsector/states.hpp"

namespace symsector {

// W = Pi - B*1. Tr(W rho) >= 0 for every separable rho when B lower-bounds
// the separable symmetric overlap; a negative value certifies entanglement.
struct Witness {
    int d = 0;
    int n = 0;
    double bound = 0.0;
    CMatrix matrix;
};

inline Witness make_witness(int d, int n, std::optional<double> bound = std::nullopt) {
    double b;
    if (bound) {
        b = *bound;
        if (b < 0.0 || b > 1.0)
            throw InputError("make_witness: bound must lie in [0,1]");
    } else {
        const std::optional<double> kb = known_bound(n, d);
        if (!kb)
            throw InputError("make_witness: no certified bound for n=" + std::to_string(n) +
                             ", d=" + std::to_string(d) + "; pass one explicitly");
        b = *kb;
    }
    Witness w;
    w.d = d;
    w.n = n;
    w.bound = b;
    w.matrix = projector_dicke(d, n).matrix;
    for (int i = 0; i < w.matrix.rows(); ++i) w.matrix(i, i) -= b;
    return w;
}

inline double witness_value(const Witness& w, const DensityMatrix& rho) {
    if (w.d != rho.d || w.n != rho.n)
        throw InputError("witness_value: dimension mismatch");
    // Tr(W rho) = Tr(Pi rho) - B
    return symmetric_trace(rho) - w.bound;
}

// Particles are numbered 1..n; bit (m-1) of the mask selects particle m.
using SubsetMask = unsigned;

inline std::string subset_to_string(SubsetMask mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int m = 1; m <= n; ++m)
        if (mask & (1u << (m - 1))) {
            if (!first) s += ",";
            s += std::to_string(m);
            first = false;
        }
    return s + "}";
}

// Transpose the tensor legs selected by the mask: entry (a, b) of the result
// is the entry of m with a_j and b_j swapped for every selected particle j.
// Preserves Hermiticity and the trace.
inline CMatrix partial_transpose(const CMatrix& m, SubsetMask subset, int d, int n) {
    const std::size_t dim = dimension_checked(d, n);
    if (m.rows() != static_cast<int>(dim) || m.cols() != static_cast<int>(dim))
        throw InputError("partial_transpose: matrix size does not match d^n");
    if (n > 0 && (subset >> n) != 0)
        throw InputError("partial_transpose: subset mask selects particles beyond n");
    CMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < dim; ++i) {
        const std::vector<int> ti = basis_tuple(i, d, n);
        for (std::size_t j = 0; j < dim; ++j) {
            const std::vector<int> tj = basis_tuple(j, d, n);
            for (int p = 0; p < n; ++p) {
                const bool swap = (subset >> p) & 1u;
                a[static_cast<std::size_t>(p)] = swap ? tj[static_cast<std::size_t>(p)]
                                                      : ti[static_cast<std::size_t>(p)];
                b[static_cast<std::size_t>(p)] = swap ? ti[static_cast<std::size_t>(p)]
                                                      : tj[static_cast<std::size_t>(p)];
            }
            out(static_cast<int>(basis_index(a, d)), static_cast<int>(basis_index(b, d))) =
                m(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

inline CMatrix partial_transpose(const DensityMatrix& rho, SubsetMask subset) {
    return partial_transpose(rho.matrix, subset, rho.d, rho.n);
}

// Full-spectrum PSD test. PSD iff the smallest eigenvalue clears
// -tol * max(1, ||H||_max).
inline std::pair<bool, double> is_psd(const CMatrix& h, double tol = 1e-9) {
    const std::vector<double> eigs = hermitian_eigenvalues(h);
    const double min_eig = eigs.empty() ? 0.0 : eigs.front();
    const double threshold = tol * std::max(1.0, h.max_abs());
    return {min_eig >= -threshold, min_eig};
}

struct PptSubsetResult {
    SubsetMask subset = 0;
    double min_eigenvalue = 0.0;
    bool psd = false;
    bool boundary = false; // |min eigenvalue| within the PSD tolerance
};

struct PptReport {
    std::vector<PptSubsetResult> subsets;
    int subsets_checked = 0;
    bool is_ppt = false;
};

// Tests every independent partial transpose of rho. Since the transpose of
// rho^Gamma_I equals rho^Gamma_{N-I}, only subsets containing particle 1 and
// different from the full set are checked: 2^(n-1) - 1 of them.
inline PptReport ppt_sweep(const DensityMatrix& rho, double tol = 1e-9) {
    if (rho.n > 16)
        throw SizeError("ppt_sweep: n too large");
    PptReport report;
    const SubsetMask full = static_cast<SubsetMask>((1ull << rho.n) - 1ull);
    report.is_ppt = true;
    for (SubsetMask mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue; // canonical half: particle 1 in the subset
        const CMatrix pt = partial_transpose(rho, mask);
        const auto [psd, min_eig] = is_psd(pt, tol);
        const double threshold = tol * std::max(1.0, pt.max_abs());
        report.subsets.push_back(PptSubsetResult{mask, min_eig, psd,
                                                 std::abs(min_eig) <= threshold});
        report.is_ppt = report.is_ppt && psd;
    }
    report.subsets_checked = static_cast<int>(report.subsets.size());
    return report;
}

// Generalized Werner state: p * Pi/rank(Pi) + (1-p) * (1-Pi)/rank(1-Pi).
// For n=3, d=2 both ranks are 4, reducing to (p/4) Pi + ((1-p)/4)(1 - Pi).
inline DensityMatrix werner_state(double p, int d, int n) {
    if (p < 0.0 || p > 1.0)
        throw InputError("werner_state: p must lie in [0,1]");
    const std::size_t dim = dense_dimension_checked(d, n);
    const unsigned long long sym_rank = binomial_checked(n + d - 1, d - 1);
    const unsigned long long comp_rank = static_cast<unsigned long long>(dim) - sym_rank;
    if (comp_rank == 0)
        throw InputError("werner_state: symmetric sector fills the whole space "
                         "(complement has rank 0)");
    const Projector pi = projector_dicke(d, n);
    DensityMatrix rho;
    rho.d = d;
    rho.n = n;
    rho.matrix = CMatrix(static_cast<int>(dim), static_cast<int>(dim));
    const double ws = p / static_cast<double>(sym_rank);
    const double wc = (1.0 - p) / static_cast<double>(comp_rank);
    for (int i = 0; i < static_cast<int>(dim); ++i)
        for (int j = 0; j < static_cast<int>(dim); ++j) {
            const cdouble pij = pi.matrix(i, j);
            rho.matrix(i, j) = ws * pij - wc * pij;
            if (i == j) rho.matrix(i, j) += wc;
        }
    return rho;
}

struct WernerThresholds {
    double ppt_boundary = 0.0;      // p below which some partial transpose fails PSD
    double witness_threshold = 0.0; // p below which Tr(W rho) < 0
};

// Case study for three qubits: the PPT boundary is located by bisection on
// the smallest eigenvalue of the single-particle partial transpose; the
// witness root is B itself since Tr(W rho(p)) = p - B.
inline WernerThresholds werner_thresholds(double bisection_tol = 1e-9) {
    const int d = 2, n = 3;
    auto min_eig = [&](double p) {
        const CMatrix pt = partial_transpose(werner_state(p, d, n), 1u);
        return hermitian_eigenvalues(pt).front();
    };
    double lo = 0.0, hi = 1.0;
    if (min_eig(lo) >= 0.0)
        throw ConsistencyError("werner_thresholds: expected a sign change over [0,1]");
    while (hi - lo > bisection_tol) {
        const double mid = 0.5 * (lo + hi);
        (min_eig(mid) < 0.0 ? lo : hi) = mid;
    }
    WernerThresholds t;
    t.ppt_boundary = 0.5 * (lo + hi);
    t.witness_threshold = *known_bound(n, d);
    return t;
}

} // namespace symsector
