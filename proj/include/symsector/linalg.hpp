#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "symsector/errors.hpp"
#include "symsector/rng.hpp"

namespace symsector {

using cdouble = std::complex<double>;

// Dense row-major complex matrix. Everything here is desk scale (dimension
// d^n, a few hundred at most), so no sparsity or blocking.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cdouble& operator()(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }
    const cdouble& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }

    const std::vector<cdouble>& data() const { return a_; }

    CMatrix adjoint() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix transpose() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    cdouble trace() const {
        cdouble t = 0.0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cdouble& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    CMatrix& operator+=(const CMatrix& other) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& other) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
        return *this;
    }
    CMatrix& operator*=(cdouble s) {
        for (cdouble& z : a_) z *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cdouble s) { return a *= s; }
    friend CMatrix operator*(cdouble s, CMatrix a) { return a *= s; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const cdouble aik = a(i, k);
                if (aik == cdouble(0.0)) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend std::vector<cdouble> operator*(const CMatrix& a, const std::vector<cdouble>& v) {
        std::vector<cdouble> r(static_cast<std::size_t>(a.rows_));
        for (int i = 0; i < a.rows_; ++i) {
            cdouble s = 0.0;
            for (int j = 0; j < a.cols_; ++j) s += a(i, j) * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> a_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline double hermiticity_defect(const CMatrix& m) {
    double defect = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    return defect;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble(0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

inline CMatrix kron_power(const CMatrix& a, int n) {
    CMatrix r = CMatrix::identity(1);
    for (int i = 0; i < n; ++i) r = kron(r, a);
    return r;
}

// <a|b> with the convention conj(a).b
inline cdouble inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm2(const std::vector<cdouble>& a) {
    double s = 0.0;
    for (const cdouble& z : a) s += std::norm(z);
    return std::sqrt(s);
}

// Determinant via Gaussian elimination with partial pivoting.
inline cdouble determinant(CMatrix m) {
    if (m.rows() != m.cols())
        throw InputError("determinant: matrix not square");
    const int n = m.rows();
    cdouble det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
        if (std::abs(m(pivot, col)) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int i = col + 1; i < n; ++i) {
            const cdouble f = m(i, col) / m(col, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

struct EigenSystem {
    std::vector<double> values; // ascending
    CMatrix vectors;            // columns, matching values
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix. Each rotation
// zeroes one off-diagonal pair with a unitary 2x2 block; sweeps repeat until
// the off-diagonal Frobenius mass drops below 1e-14 * ||H||_F.
inline EigenSystem hermitian_eigensystem(const CMatrix& h, double hermitian_tol = 1e-10) {
    if (h.rows() != h.cols())
        throw InputError("hermitian_eigensystem: matrix not square");
    const int n = h.rows();
    const double scale = std::max(1.0, h.max_abs());
    if (hermiticity_defect(h) > hermitian_tol * scale)
        throw InputError("hermitian_eigensystem: input not Hermitian within tolerance");

    CMatrix a = h;
    // enforce exact Hermitian symmetry so rotations stay consistent
    for (int i = 0; i < n; ++i) {
        a(i, i) = cdouble(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cdouble avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);

    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += std::norm(a(i, j));
    frob = std::sqrt(frob);
    const double target = 1e-14 * std::max(frob, 1e-300);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += std::norm(a(i, j));
        off = std::sqrt(2.0 * off);
        if (off <= target) break;
        if (sweep == max_sweeps - 1)
            throw ConsistencyError("hermitian_eigensystem: Jacobi failed to converge");

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-300) continue;
                const cdouble phase = a(p, q) / apq;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble sp = s * phase;            // U(p,q) = s*phase
                const cdouble spc = s * std::conj(phase); // -U(q,p)

                // A <- U^dag A U, U = I except U(pp)=U(qq)=c, U(pq)=sp, U(qp)=-spc
                for (int j = 0; j < n; ++j) {
                    const cdouble apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sp * aqj;
                    a(q, j) = spc * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const cdouble aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(sp) * aiq;
                    a(i, q) = std::conj(spc) * aip + c * aiq;
                    const cdouble vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(sp) * viq;
                    v(i, q) = std::conj(spc) * vip + c * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cdouble(a(p, p).real(), 0.0);
                a(q, q) = cdouble(a(q, q).real(), 0.0);
            }
        }
    }

    EigenSystem es;
    es.values.resize(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    es.vectors = CMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        es.values[static_cast<std::size_t>(col)] = a(src, src).real();
        for (int i = 0; i < n; ++i) es.vectors(i, col) = v(i, src);
    }
    return es;
}

inline std::vector<double> hermitian_eigenvalues(const CMatrix& h, double hermitian_tol = 1e-10) {
    return hermitian_eigensystem(h, hermitian_tol).values;
}

// Haar-distributed d x d unitary: modified Gram-Schmidt applied to a complex
// Gaussian matrix. The positive-real normalization at each pivot fixes the
// diagonal phases, which is what makes the distribution Haar.
inline CMatrix random_unitary(int d, SplitMix64& rng) {
    if (d < 1)
        throw InputError("random_unitary: require d >= 1");
    CMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.gaussian_complex();
    for (int col = 0; col < d; ++col) {
        for (int prev = 0; prev < col; ++prev) {
            cdouble proj = 0.0;
            for (int i = 0; i < d; ++i) proj += std::conj(g(i, prev)) * g(i, col);
            for (int i = 0; i < d; ++i) g(i, col) -= proj * g(i, prev);
        }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += std::norm(g(i, col));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) g(i, col) /= nrm;
    }
    return g;
}

inline CMatrix random_unitary(int d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_unitary(d, rng);
}

} // namespace symsector
