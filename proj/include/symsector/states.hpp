#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "symsector/combinatorics.hpp"
#include "symsector/errors.hpp"
#include "symsector/linalg.hpp"
#include "symsector/rng.hpp"

namespace symsector {

inline constexpr double kNormTol = 1e-12;

inline std::size_t dimension_checked(int d, int n) {
    if (d < 1 || n < 1)
        throw InputError("dimension: require d >= 1, n >= 1");
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
        if (dim > (1u << 24) / static_cast<std::size_t>(d))
            throw SizeError("dimension: d^n too large (d=" + std::to_string(d) +
                            ", n=" + std::to_string(n) + ")");
        dim *= static_cast<std::size_t>(d);
    }
    return dim;
}

// Cap for operations that materialize a d^n x d^n matrix. State vectors go
// further (dimension_checked); dense matrices stop here.
inline std::size_t dense_dimension_checked(int d, int n, std::size_t cap = 4096) {
    const std::size_t dim = dimension_checked(d, n);
    if (dim > cap)
        throw SizeError("dense matrix of dimension d^n = " + std::to_string(dim) +
                        " exceeds the cap " + std::to_string(cap));
    return dim;
}

// Big-endian index of a basis ket |j_1 ... j_n>: the first factor is the most
// significant digit.
inline std::size_t basis_index(const std::vector<int>& tuple, int d) {
    std::size_t v = 0;
    for (int j : tuple) {
        if (j < 0 || j >= d)
            throw InputError("basis_index: symbol out of range");
        v = v * static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
    }
    return v;
}

inline std::vector<int> basis_tuple(std::size_t index, int d, int n) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int m = n - 1; m >= 0; --m) {
        t[static_cast<std::size_t>(m)] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return t;
}

// State vector of n qudits in the computational basis, big-endian indexed.
struct PureState {
    int d = 0;
    int n = 0;
    std::vector<cdouble> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }

    double norm() const { return norm2(amplitudes); }
};

// n x d matrix whose row m holds the computational-basis coefficients of the
// m-th factor of a product state. Rows need not be normalized when the
// matrix only feeds orbit-sum checks (lax mode).
struct FMatrix {
    int n = 0;
    int d = 0;
    CMatrix entries; // n rows, d cols

    FMatrix() = default;
    FMatrix(int n_, int d_) : n(n_), d(d_), entries(n_, d_) {}

    cdouble& operator()(int row, int col) { return entries(row, col); }
    const cdouble& operator()(int row, int col) const { return entries(row, col); }

    double row_norm(int row) const {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += std::norm(entries(row, j));
        return std::sqrt(s);
    }
};

enum class RowNorm { Strict, Lax };

inline void validate_rows(const FMatrix& f, RowNorm mode) {
    if (mode == RowNorm::Lax) return;
    for (int m = 0; m < f.n; ++m)
        if (std::abs(f.row_norm(m) - 1.0) > kNormTol)
            throw InputError("FMatrix row " + std::to_string(m) +
                             " is not unit-norm (strict mode)");
}

struct DensityMatrix {
    int d = 0;
    int n = 0;
    CMatrix matrix;

    std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
};

// Full density-matrix validation: Hermitian and unit trace within 1e-12,
// minimum eigenvalue >= -psd_tol. Costs an eigensolve; meant for input
// checking, not for hot paths.
inline void validate_density(const DensityMatrix& rho, double psd_tol = 1e-9) {
    if (rho.matrix.rows() != rho.matrix.cols())
        throw InputError("density matrix not square");
    if (rho.dim() != dimension_checked(rho.d, rho.n))
        throw InputError("density matrix size does not match d^n");
    if (hermiticity_defect(rho.matrix) > kNormTol)
        throw InputError("density matrix not Hermitian within 1e-12");
    if (std::abs(rho.matrix.trace() - cdouble(1.0)) > kNormTol)
        throw InputError("density matrix trace differs from 1 beyond 1e-12");
    const std::vector<double> eigs = hermitian_eigenvalues(rho.matrix);
    if (!eigs.empty() && eigs.front() < -psd_tol)
        throw InputError("density matrix has eigenvalue " + std::to_string(eigs.front()) +
                         " below -psd tolerance");
}

// Equal-amplitude superposition over the multiset orbit of k, amplitude
// 1/sqrt(|G_k|).
inline PureState dicke_state(const Composition& k) {
    validate_composition(k);
    const int d = k.d();
    const int n = k.n();
    PureState psi;
    psi.d = d;
    psi.n = n;
    psi.amplitudes.assign(dimension_checked(d, n), cdouble(0.0));
    const auto orbit = multiset_orbit(k);
    const double amp = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    for (const auto& t : orbit)
        psi.amplitudes[basis_index(t, d)] = amp;
    return psi;
}

// Tensor product of the factor states in F: amplitude at |j_1...j_n> is the
// product of the row coefficients f_{m, j_m}.
inline PureState product_state(const FMatrix& f, RowNorm mode = RowNorm::Strict) {
    validate_rows(f, mode);
    PureState psi;
    psi.d = f.d;
    psi.n = f.n;
    const std::size_t dim = dimension_checked(f.d, f.n);
    psi.amplitudes.assign(dim, cdouble(1.0));
    std::size_t block = dim;
    for (int m = 0; m < f.n; ++m) {
        block /= static_cast<std::size_t>(f.d);
        for (std::size_t i = 0; i < dim; ++i) {
            const int j = static_cast<int>((i / block) % static_cast<std::size_t>(f.d));
            psi.amplitudes[i] *= f(m, j);
        }
    }
    return psi;
}

inline DensityMatrix density_from_pure(const PureState& psi) {
    DensityMatrix rho;
    rho.d = psi.d;
    rho.n = psi.n;
    const int dim = static_cast<int>(dense_dimension_checked(psi.d, psi.n));
    rho.matrix = CMatrix(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            rho.matrix(i, j) = psi.amplitudes[static_cast<std::size_t>(i)] *
                               std::conj(psi.amplitudes[static_cast<std::size_t>(j)]);
    return rho;
}

// Convex mixture of product states: weights omega_j > 0 summing to 1, one
// FMatrix of factors per term.
struct MixtureSpec {
    std::vector<double> weights;
    std::vector<FMatrix> terms;
};

inline void validate_mixture(const MixtureSpec& spec) {
    if (spec.weights.empty() || spec.weights.size() != spec.terms.size())
        throw InputError("mixture: weights and terms must be non-empty and same length");
    double sum = 0.0;
    for (double w : spec.weights) {
        if (w <= 0.0)
            throw InputError("mixture: weights must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw InputError("mixture: weights must sum to 1 within 1e-12");
    for (std::size_t j = 1; j < spec.terms.size(); ++j)
        if (spec.terms[j].n != spec.terms[0].n || spec.terms[j].d != spec.terms[0].d)
            throw InputError("mixture: inconsistent term dimensions");
}

inline DensityMatrix mixture_density(const MixtureSpec& spec, RowNorm mode = RowNorm::Strict) {
    validate_mixture(spec);
    DensityMatrix rho;
    rho.d = spec.terms[0].d;
    rho.n = spec.terms[0].n;
    const int dim = static_cast<int>(dense_dimension_checked(rho.d, rho.n));
    rho.matrix = CMatrix(dim, dim);
    for (std::size_t j = 0; j < spec.terms.size(); ++j) {
        const PureState psi = product_state(spec.terms[j], mode);
        const double w = spec.weights[j];
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                rho.matrix(r, c) += w * psi.amplitudes[static_cast<std::size_t>(r)] *
                                    std::conj(psi.amplitudes[static_cast<std::size_t>(c)]);
    }
    return rho;
}

// Random product state: each row is a complex Gaussian vector (entries drawn
// in row-major order, real part before imaginary part) normalized to unit
// length. Deterministic for a fixed stream or seed.
inline FMatrix random_product_state(int n, int d, SplitMix64& rng) {
    dimension_checked(d, n);
    FMatrix f(n, d);
    for (int m = 0; m < n; ++m) {
        double nrm = 0.0;
        for (int j = 0; j < d; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            f(m, j) = cdouble(re, im);
            nrm += re * re + im * im;
        }
        nrm = std::sqrt(nrm);
        for (int j = 0; j < d; ++j) f(m, j) /= nrm;
    }
    return f;
}

inline FMatrix random_product_state(int n, int d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_product_state(n, d, rng);
}

// Permute the tensor factors: factor at position i of the output is the
// factor the permutation maps there, consistent with the permutation
// operator convention in the projector header.
inline PureState apply_permutation(const PureState& psi, const Permutation& sigma) {
    validate_permutation(sigma);
    if (sigma.size() != psi.n)
        throw InputError("apply_permutation: size mismatch");
    PureState out;
    out.d = psi.d;
    out.n = psi.n;
    out.amplitudes.assign(psi.dim(), cdouble(0.0));
    std::vector<int> permuted(static_cast<std::size_t>(psi.n));
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const std::vector<int> t = basis_tuple(idx, psi.d, psi.n);
        for (int m = 0; m < psi.n; ++m)
            permuted[static_cast<std::size_t>(sigma(m))] = t[static_cast<std::size_t>(m)];
        out.amplitudes[basis_index(permuted, psi.d)] += psi.amplitudes[idx];
    }
    return out;
}

} // namespace symsector
