#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "symsector/combinatorics.hpp"
#include "symsector/errors.hpp"
#include "symsector/linalg.hpp"
#include "symsector/states.hpp"

namespace symsector {

// Orthogonal projection onto the permutation-invariant subspace of
// (C^d)^(x n). Rank is C(n+d-1, d-1).
struct Projector {
    int d = 0;
    int n = 0;
    CMatrix matrix;
};

// Matrix of the permutation sigma acting on tensor factors. Convention:
// the value at position i of the permuted tuple comes from position
// sigma^{-1}(i), i.e. P|j_1...j_n> = |j'_1...j'_n> with j'_{sigma(m)} = j_m.
// This is the left action, so P(sigma * tau) = P(sigma) P(tau).
inline CMatrix permutation_operator(const Permutation& sigma, int d) {
    validate_permutation(sigma);
    const int n = sigma.size();
    const std::size_t dim = dense_dimension_checked(d, n);
    CMatrix p(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<int> permuted(static_cast<std::size_t>(n), 0);
    for (std::size_t col = 0; col < dim; ++col) {
        for (int m = 0; m < n; ++m)
            permuted[static_cast<std::size_t>(sigma(m))] = tuple[static_cast<std::size_t>(m)];
        p(static_cast<int>(basis_index(permuted, d)), static_cast<int>(col)) = 1.0;
        for (int m = n - 1; m >= 0; --m) { // odometer over tuples
            if (++tuple[static_cast<std::size_t>(m)] < d) break;
            tuple[static_cast<std::size_t>(m)] = 0;
        }
    }
    return p;
}

// Projector as the sum of Dicke-state outer products. Each entry receives at
// most one contribution 1/|G_k| (the orbits partition the basis), so entries
// like 1/3 come out exactly as one floating-point division.
inline Projector projector_dicke(int d, int n) {
    const std::size_t dim = dense_dimension_checked(d, n);
    Projector pi;
    pi.d = d;
    pi.n = n;
    pi.matrix = CMatrix(static_cast<int>(dim), static_cast<int>(dim));
    for (const Composition& k : enumerate_compositions(d, n)) {
        const auto orbit = multiset_orbit(k);
        const double w = 1.0 / static_cast<double>(orbit.size());
        std::vector<std::size_t> idx;
        idx.reserve(orbit.size());
        for (const auto& t : orbit) idx.push_back(basis_index(t, d));
        for (std::size_t a : idx)
            for (std::size_t b : idx)
                pi.matrix(static_cast<int>(a), static_cast<int>(b)) = w;
    }
    return pi;
}

// Projector as the group average (1/n!) sum of permutation operators.
// Independent of the Dicke construction; the two are cross-checked in tests.
inline Projector projector_permutation(int d, int n) {
    const std::size_t dim = dense_dimension_checked(d, n);
    Projector pi;
    pi.d = d;
    pi.n = n;
    pi.matrix = CMatrix(static_cast<int>(dim), static_cast<int>(dim));
    const auto perms = enumerate_permutations(n);
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<int> permuted(static_cast<std::size_t>(n), 0);
    const double w = 1.0 / static_cast<double>(perms.size());
    for (const Permutation& sigma : perms) {
        std::fill(tuple.begin(), tuple.end(), 0);
        for (std::size_t col = 0; col < dim; ++col) {
            for (int m = 0; m < n; ++m)
                permuted[static_cast<std::size_t>(sigma(m))] = tuple[static_cast<std::size_t>(m)];
            pi.matrix(static_cast<int>(basis_index(permuted, d)), static_cast<int>(col)) += w;
            for (int m = n - 1; m >= 0; --m) {
                if (++tuple[static_cast<std::size_t>(m)] < d) break;
                tuple[static_cast<std::size_t>(m)] = 0;
            }
        }
    }
    return pi;
}

// Precomputed tables for symmetric-sector overlaps of product states at fixed
// (d, n): composition list, per-composition weight k_0!...k_{d-1}!/n!, and
// the composition index of every basis tuple. Lets the optimizer evaluate
// overlaps without touching any d^n x d^n matrix.
class SymmetricBasis {
public:
    SymmetricBasis(int d, int n)
        : d_(d), n_(n), dim_(dimension_checked(d, n)),
          compositions_(enumerate_compositions(d, n)) {
        weights_.reserve(compositions_.size());
        std::map<std::vector<int>, int> rank;
        for (std::size_t i = 0; i < compositions_.size(); ++i) {
            rank[compositions_[i].counts] = static_cast<int>(i);
            weights_.push_back(1.0 / static_cast<double>(multinomial(compositions_[i])));
        }
        comp_of_tuple_.resize(dim_);
        std::vector<int> counts(static_cast<std::size_t>(d), 0);
        std::vector<int> tuple(static_cast<std::size_t>(n), 0);
        counts[0] = n;
        for (std::size_t i = 0; i < dim_; ++i) {
            comp_of_tuple_[i] = rank.at(counts);
            for (int m = n - 1; m >= 0; --m) {
                --counts[static_cast<std::size_t>(tuple[static_cast<std::size_t>(m)])];
                if (++tuple[static_cast<std::size_t>(m)] < d) {
                    ++counts[static_cast<std::size_t>(tuple[static_cast<std::size_t>(m)])];
                    break;
                }
                tuple[static_cast<std::size_t>(m)] = 0;
                ++counts[0];
            }
        }
    }

    int d() const { return d_; }
    int n() const { return n_; }
    const std::vector<Composition>& compositions() const { return compositions_; }

    // Raw orbit sums sum_{(j_1..j_n) in G_k} f_{1,j_1}...f_{n,j_n}, one per
    // composition. This is the quantity Property A constrains.
    void orbit_sums(const FMatrix& f, std::vector<cdouble>& out) const {
        out.assign(compositions_.size(), cdouble(0.0));
        walk(f, 0, cdouble(1.0), 0, out);
    }

    std::vector<cdouble> orbit_sums(const FMatrix& f) const {
        std::vector<cdouble> out;
        orbit_sums(f, out);
        return out;
    }

    // <phi_k|psi> = sqrt(k_0!...k_{d-1}!/n!) * orbit sum.
    cdouble amplitude(const FMatrix& f, std::size_t comp_index) const {
        cdouble sum = 0.0;
        for (const auto& t : multiset_orbit(compositions_[comp_index])) {
            cdouble prod = 1.0;
            for (int m = 0; m < n_; ++m) prod *= f(m, t[static_cast<std::size_t>(m)]);
            sum += prod;
        }
        return std::sqrt(weights_[comp_index]) * sum;
    }

    // ||psi||^2 restricted to the symmetric sector: weighted sum of squared
    // orbit sums. The overload with an explicit scratch buffer avoids
    // per-call allocation in optimizer loops; the basis itself stays
    // read-only and can be shared across workers.
    double norm_squared(const FMatrix& f, std::vector<cdouble>& scratch) const {
        scratch.assign(compositions_.size(), cdouble(0.0));
        walk(f, 0, cdouble(1.0), 0, scratch);
        double total = 0.0;
        for (std::size_t i = 0; i < scratch.size(); ++i)
            total += weights_[i] * std::norm(scratch[i]);
        return total;
    }

    double norm_squared(const FMatrix& f) const {
        std::vector<cdouble> scratch;
        return norm_squared(f, scratch);
    }

private:
    // Depth-first walk over all tuples with a running product; leaves land in
    // big-endian index order so comp_of_tuple_ applies directly.
    void walk(const FMatrix& f, int row, cdouble prod, std::size_t index,
              std::vector<cdouble>& acc) const {
        if (row == n_) {
            acc[static_cast<std::size_t>(comp_of_tuple_[index])] += prod;
            return;
        }
        for (int j = 0; j < d_; ++j) {
            const cdouble fj = f(row, j);
            if (fj == cdouble(0.0)) continue;
            walk(f, row + 1, prod * fj, index * static_cast<std::size_t>(d_) +
                                            static_cast<std::size_t>(j), acc);
        }
    }

    int d_;
    int n_;
    std::size_t dim_;
    std::vector<Composition> compositions_;
    std::vector<double> weights_;      // k_0!...k_{d-1}!/n!
    std::vector<int> comp_of_tuple_;   // composition index per basis index
};

// Single-composition overlap sqrt(k!.../n!) * sum over the orbit of row
// products.
inline cdouble symmetric_amplitude(const FMatrix& f, const Composition& k) {
    validate_composition(k);
    if (k.d() != f.d || k.n() != f.n)
        throw InputError("symmetric_amplitude: composition does not match F shape");
    cdouble sum = 0.0;
    for (const auto& t : multiset_orbit(k)) {
        cdouble prod = 1.0;
        for (int m = 0; m < f.n; ++m) prod *= f(m, t[static_cast<std::size_t>(m)]);
        sum += prod;
    }
    const double w = 1.0 / static_cast<double>(multinomial(k));
    return std::sqrt(w) * sum;
}

inline double symmetric_norm_squared(const FMatrix& f) {
    return SymmetricBasis(f.d, f.n).norm_squared(f);
}

// Same quantity through the permutation expansion: (1/n!) sum over S_n of
// the product over disjoint cycles (i_1 ... i_k) of
// <psi_{i_2}|psi_{i_1}> <psi_{i_3}|psi_{i_2}> ... <psi_{i_1}|psi_{i_k}>.
// The result is real; the imaginary residue is checked and discarded.
inline double symmetric_norm_squared_cycles(const FMatrix& f) {
    const int n = f.n;
    CMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cdouble s = 0.0;
            for (int m = 0; m < f.d; ++m) s += std::conj(f(i, m)) * f(j, m);
            gram(i, j) = s;
        }
    cdouble total = 0.0;
    for (const Permutation& sigma : enumerate_permutations(n)) {
        cdouble val = 1.0;
        for (const Cycle& c : cycle_decomposition(sigma)) {
            cdouble prod = 1.0;
            for (std::size_t a = 0; a < c.elements.size(); ++a) {
                const int from = c.elements[a];
                const int to = c.elements[(a + 1) % c.elements.size()];
                prod *= gram(to, from);
            }
            val *= prod;
        }
        total += val;
    }
    unsigned long long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= static_cast<unsigned long long>(i);
    total /= static_cast<double>(nf);
    if (std::abs(total.imag()) > 1e-8)
        throw ConsistencyError("symmetric_norm_squared_cycles: imaginary residue " +
                               std::to_string(total.imag()));
    return total.real();
}

// Tr(Pi rho) as the sum of Dicke-state expectation values; never materializes
// Pi. Real within 1e-10 by Hermiticity of rho.
inline double symmetric_trace(const DensityMatrix& rho) {
    cdouble total = 0.0;
    for (const Composition& k : enumerate_compositions(rho.d, rho.n)) {
        const auto orbit = multiset_orbit(k);
        std::vector<std::size_t> idx;
        idx.reserve(orbit.size());
        for (const auto& t : orbit) idx.push_back(basis_index(t, rho.d));
        cdouble block = 0.0;
        for (std::size_t a : idx)
            for (std::size_t b : idx)
                block += rho.matrix(static_cast<int>(a), static_cast<int>(b));
        total += block / static_cast<double>(orbit.size());
    }
    if (std::abs(total.imag()) > 1e-10)
        throw ConsistencyError("symmetric_trace: imaginary residue " +
                               std::to_string(total.imag()));
    return total.real();
}

} // namespace symsector
