#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symsector/errors.hpp"
#include "symsector/projector.hpp"
#include "symsector/states.hpp"

namespace symsector {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Canonical product-state parametrization after collective-unitary and
// row-phase reduction:
//   row 1            = (1, 0, ..., 0)
//   row m (m >= 2)   supported on entries 0..min(m,d)-1, hyperspherical
//                    magnitudes from min(m,d)-1 angles, one phase per entry
//                    past the first -- except that the last supported entry
//                    stays real while m <= d (a residual collective rotation
//                    still acts there).
// Parameter vectors are all angles (row-major) followed by all phases.
struct GaugeParams {
    std::vector<double> angles;
    std::vector<double> phases;
};

struct GaugeLayout {
    int n = 0;
    int d = 0;
    int angle_count = 0;
    int phase_count = 0;

    static GaugeLayout of(int n, int d) {
        if (n < 1 || d < 1)
            throw InputError("GaugeLayout: require n >= 1, d >= 1");
        GaugeLayout l;
        l.n = n;
        l.d = d;
        for (int m = 2; m <= n; ++m) {
            const int support = std::min(m, d);
            l.angle_count += support - 1;
            l.phase_count += (support - 1) - (m <= d ? 1 : 0);
        }
        return l;
    }

    int dimension() const { return angle_count + phase_count; }
};

namespace detail {

// Core writer; `angles` and `phases` must hold layout.angle_count and
// layout.phase_count values.
inline void write_gauge_rows(const double* angles, const double* phases,
                             const GaugeLayout& layout, FMatrix& out) {
    const int n = layout.n, d = layout.d;
    if (out.n != n || out.d != d) out = FMatrix(n, d);
    for (int m = 0; m < n; ++m)
        for (int j = 0; j < d; ++j) out(m, j) = 0.0;
    out(0, 0) = 1.0;
    std::size_t a = 0, p = 0;
    for (int m = 2; m <= n; ++m) {
        const int row = m - 1;
        const int support = std::min(m, d);
        double sin_prod = 1.0;
        for (int j = 0; j < support; ++j) {
            double mag = sin_prod;
            if (j < support - 1) {
                mag *= std::cos(angles[a + static_cast<std::size_t>(j)]);
                sin_prod *= std::sin(angles[a + static_cast<std::size_t>(j)]);
            }
            cdouble entry(mag, 0.0);
            if (j >= 1 && !(j == support - 1 && m <= d)) {
                const double phi = phases[p++];
                entry *= cdouble(std::cos(phi), std::sin(phi));
            }
            out(row, j) = entry;
        }
        a += static_cast<std::size_t>(support - 1);
    }
}

} // namespace detail

inline void gauge_fixed_fmatrix_into(const GaugeParams& params, int n, int d, FMatrix& out) {
    const GaugeLayout layout = GaugeLayout::of(n, d);
    if (static_cast<int>(params.angles.size()) != layout.angle_count ||
        static_cast<int>(params.phases.size()) != layout.phase_count)
        throw InputError("gauge_fixed_fmatrix: parameter layout mismatch (expected " +
                         std::to_string(layout.angle_count) + " angles, " +
                         std::to_string(layout.phase_count) + " phases)");
    detail::write_gauge_rows(params.angles.data(), params.phases.data(), layout, out);
}

inline FMatrix gauge_fixed_fmatrix(const GaugeParams& params, int n, int d) {
    FMatrix f;
    gauge_fixed_fmatrix_into(params, n, d, f);
    return f;
}

// ||psi||^2_SS at a gauge-fixed point. Convenience wrapper; optimizer loops
// use a bound evaluator instead.
inline double objective(const GaugeParams& params, int n, int d) {
    const FMatrix f = gauge_fixed_fmatrix(params, n, d);
    return SymmetricBasis(d, n).norm_squared(f);
}

struct OptimizerConfig {
    int grid_points = 41;
    enum class Refinement { None, NelderMead };
    Refinement refinement = Refinement::NelderMead;
    int restarts = 8;
    double tolerance = 1e-10;   // refinement stops at simplex diameter max(tol*1e-2, 1e-12)
    int workers = 1;
    unsigned long long max_grid_evaluations = 50'000'000ULL;
};

struct BoundResult {
    double minimum = 0.0;
    GaugeParams argmin;
    long long evaluations = 0;
    enum class Stage { Grid, Refined } stage = Stage::Grid;
    double grid_step = 0.0;      // normalized: 1/(grid_points-1)
    double grid_minimum = 0.0;
    GaugeParams grid_argmin;
};

// Certified sharp lower bounds on ||psi||^2_SS over product states.
inline std::optional<double> known_bound(int n, int d) {
    if (n == 2 && d >= 2) return 0.5;
    if (n == 3 && d == 2) return 0.25;
    if (n == 3 && d >= 3) return 1.0 / 6.0;
    return std::nullopt;
}

namespace detail {

// Nelder-Mead with standard coefficients. Returns the best point ever
// evaluated, so the result can only improve on the start value.
struct NelderMeadResult {
    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();
    long long evaluations = 0;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0,
                                    const std::vector<double>& initial_step,
                                    double diameter_tol,
                                    int max_iterations = 2000) {
    const std::size_t dim = x0.size();
    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        ++result.evaluations;
        if (v < result.best_f) {
            result.best_f = v;
            result.best_x = x;
        }
        return v;
    };
    if (dim == 0) {
        eval(x0);
        return result;
    }

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> fv(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += initial_step[i];
    for (std::size_t i = 0; i <= dim; ++i) fv[i] = eval(simplex[i]);

    const double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::vector<std::size_t> order(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return fv[i] < fv[j]; });
        {
            std::vector<std::vector<double>> s2(dim + 1);
            std::vector<double> f2(dim + 1);
            for (std::size_t i = 0; i <= dim; ++i) {
                s2[i] = simplex[order[i]];
                f2[i] = fv[order[i]];
            }
            simplex.swap(s2);
            fv.swap(f2);
        }

        double diameter = 0.0;
        for (std::size_t i = 1; i <= dim; ++i) {
            double dist = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double delta = simplex[i][j] - simplex[0][j];
                dist += delta * delta;
            }
            diameter = std::max(diameter, std::sqrt(dist));
        }
        if (diameter < diameter_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / static_cast<double>(dim);

        auto blend = [&](const std::vector<double>& from, double coeff) {
            std::vector<double> x(dim);
            for (std::size_t j = 0; j < dim; ++j)
                x[j] = centroid[j] + coeff * (from[j] - centroid[j]);
            return x;
        };

        const std::vector<double> reflected = blend(simplex[dim], -alpha);
        const double fr = eval(reflected);
        if (fr < fv[0]) {
            const std::vector<double> expanded = blend(simplex[dim], -gamma);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[dim] = expanded;
                fv[dim] = fe;
            } else {
                simplex[dim] = reflected;
                fv[dim] = fr;
            }
        } else if (fr < fv[dim - 1]) {
            simplex[dim] = reflected;
            fv[dim] = fr;
        } else {
            const bool outside = fr < fv[dim];
            const std::vector<double> contracted =
                blend(outside ? reflected : simplex[dim], beta);
            const double fc = eval(contracted);
            if (fc < std::min(fr, fv[dim])) {
                simplex[dim] = contracted;
                fv[dim] = fc;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j)
                        simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
                    fv[i] = eval(simplex[i]);
                }
            }
        }
    }
    return result;
}

// Rectangular grid over optimizer dimensions. Periodic dimensions (phases)
// use a half-open spacing so 0 and the period are not both sampled.
struct GridSpec {
    std::vector<double> lo;
    std::vector<double> span;
    std::vector<bool> periodic;
    int points = 0;

    std::size_t dims() const { return lo.size(); }

    unsigned long long total() const {
        unsigned long long t = 1;
        for (std::size_t i = 0; i < dims(); ++i) {
            if (t > std::numeric_limits<unsigned long long>::max() /
                        static_cast<unsigned long long>(points))
                return std::numeric_limits<unsigned long long>::max();
            t *= static_cast<unsigned long long>(points);
        }
        return t;
    }

    double coordinate(std::size_t dim_index, int step_index) const {
        const double denom = periodic[dim_index] ? static_cast<double>(points)
                                                 : static_cast<double>(points - 1);
        return lo[dim_index] + span[dim_index] * static_cast<double>(step_index) / denom;
    }

    double step(std::size_t dim_index) const {
        const double denom = periodic[dim_index] ? static_cast<double>(points)
                                                 : static_cast<double>(points - 1);
        return span[dim_index] / denom;
    }

    // Flat index decodes with dimension 0 slowest, so flat-index order equals
    // lexicographic order of the coordinate vector.
    void decode(unsigned long long flat, std::vector<double>& out) const {
        out.resize(dims());
        for (std::size_t i = dims(); i-- > 0;) {
            out[i] = coordinate(i, static_cast<int>(flat % static_cast<unsigned long long>(points)));
            flat /= static_cast<unsigned long long>(points);
        }
    }
};

struct GridCell {
    double value = std::numeric_limits<double>::infinity();
    unsigned long long flat = 0;

    bool operator<(const GridCell& other) const {
        if (value != other.value) return value < other.value;
        return flat < other.flat;
    }
};

// Exhaustive scan with a deterministic top-k reduction: ties resolve to the
// lexicographically smallest grid point regardless of worker scheduling.
inline std::vector<GridCell> grid_scan(const GridSpec& grid, int keep, int workers,
                                       const std::function<double(const std::vector<double>&)>& f) {
    const unsigned long long total = grid.total();
    workers = std::max(1, workers);
    const unsigned long long chunk = (total + static_cast<unsigned long long>(workers) - 1) /
                                     static_cast<unsigned long long>(workers);
    std::vector<std::vector<GridCell>> partial(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        const unsigned long long begin = static_cast<unsigned long long>(w) * chunk;
        const unsigned long long end = std::min(total, begin + chunk);
        std::vector<GridCell>& best = partial[static_cast<std::size_t>(w)];
        std::vector<double> x;
        for (unsigned long long flat = begin; flat < end; ++flat) {
            grid.decode(flat, x);
            const GridCell cell{f(x), flat};
            if (static_cast<int>(best.size()) < keep) {
                best.push_back(cell);
                std::sort(best.begin(), best.end());
            } else if (cell < best.back()) {
                best.back() = cell;
                std::sort(best.begin(), best.end());
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (std::thread& t : threads) t.join();
    }
    std::vector<GridCell> merged;
    for (const auto& part : partial) merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    if (static_cast<int>(merged.size()) > keep) merged.resize(static_cast<std::size_t>(keep));
    return merged;
}

} // namespace detail

// Grid search plus simplex refinement of ||psi||^2_SS over the gauge-fixed
// product manifold for (n, d). Deterministic for a fixed config, including
// under parallel grid evaluation.
inline BoundResult minimize(int n, int d, const OptimizerConfig& config = {}) {
    if (config.grid_points < 2)
        throw InputError("minimize: grid_points must be >= 2");
    if (config.restarts < 1)
        throw InputError("minimize: restarts must be >= 1");
    const GaugeLayout layout = GaugeLayout::of(n, d);
    const int P = layout.dimension();
    if (P > 8)
        throw SizeError("minimize: grid search limited to 8 parameters, layout has " +
                        std::to_string(P));

    const SymmetricBasis basis(d, n);

    auto unflatten = [&](const std::vector<double>& x) {
        GaugeParams gp;
        gp.angles.assign(x.begin(), x.begin() + layout.angle_count);
        gp.phases.assign(x.begin() + layout.angle_count, x.end());
        return gp;
    };

    BoundResult result;
    result.grid_step = 1.0 / static_cast<double>(config.grid_points - 1);

    if (P == 0) {
        // d = 1 or n = 1: the only product state is fully symmetric.
        FMatrix f;
        gauge_fixed_fmatrix_into(GaugeParams{}, n, d, f);
        result.minimum = result.grid_minimum = basis.norm_squared(f);
        result.evaluations = 1;
        result.stage = config.refinement == OptimizerConfig::Refinement::None
                           ? BoundResult::Stage::Grid
                           : BoundResult::Stage::Refined;
        return result;
    }

    detail::GridSpec grid;
    grid.points = config.grid_points;
    for (int i = 0; i < P; ++i) {
        const bool is_phase = i >= layout.angle_count;
        grid.lo.push_back(0.0);
        grid.span.push_back(is_phase ? kTwoPi : kPi);
        grid.periodic.push_back(is_phase);
    }
    const unsigned long long total = grid.total();
    if (total > config.max_grid_evaluations)
        throw SizeError("minimize: grid of " + std::to_string(total) +
                        " points exceeds evaluation budget " +
                        std::to_string(config.max_grid_evaluations));

    // Per-thread scratch lives in thread_local storage; the basis and layout
    // are shared read-only.
    auto eval = [&basis, &layout](const std::vector<double>& x) {
        thread_local FMatrix f;
        thread_local std::vector<cdouble> scratch;
        detail::write_gauge_rows(x.data(), x.data() + layout.angle_count, layout, f);
        return basis.norm_squared(f, scratch);
    };

    const int keep = std::max(1, config.restarts);
    const std::vector<detail::GridCell> best_cells =
        detail::grid_scan(grid, keep, config.workers, eval);
    result.evaluations = static_cast<long long>(total);

    std::vector<double> x;
    grid.decode(best_cells.front().flat, x);
    result.grid_minimum = best_cells.front().value;
    result.grid_argmin = unflatten(x);
    // every product state keeps a strictly positive symmetric component
    if (result.grid_minimum <= 1e-15)
        throw ConsistencyError("minimize: non-positive overlap at a grid point");

    if (config.refinement == OptimizerConfig::Refinement::None) {
        result.stage = BoundResult::Stage::Grid;
        result.minimum = result.grid_minimum;
        result.argmin = result.grid_argmin;
        return result;
    }

    const double diam_tol = std::max(config.tolerance * 1e-2, 1e-12);
    std::vector<double> steps(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i) steps[static_cast<std::size_t>(i)] = 0.5 * grid.step(static_cast<std::size_t>(i));

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (const detail::GridCell& cell : best_cells) {
        grid.decode(cell.flat, x);
        const detail::NelderMeadResult nm = detail::nelder_mead(eval, x, steps, diam_tol);
        result.evaluations += nm.evaluations;
        if (nm.best_f < best_value) {
            best_value = nm.best_f;
            best_x = nm.best_x;
        }
    }
    result.stage = BoundResult::Stage::Refined;
    result.minimum = std::min(best_value, result.grid_minimum);
    result.argmin = best_value <= result.grid_minimum ? unflatten(best_x) : result.grid_argmin;
    if (result.minimum <= 1e-15)
        throw ConsistencyError("minimize: non-positive overlap after refinement");
    return result;
}

// ---------------------------------------------------------------------------
// Reduced objective for four qubits (n=4, d=2).
//
// On the gauge manifold, 24 * ||psi||^2_SS = R + a cos(a3) + b cos(a4)
// + c cos(a3 - a4) with a, b, c as below in x = cos^2(theta2),
// y = cos^2(theta3), z = cos^2(theta4) (theta_j in [0, pi/2]). Minimizing
// the phase a4 analytically replaces the last two terms by
// -sqrt(b^2 + c^2 + 2 b c cos(a3)); the remaining phase enters as w = a3/2pi.
//
// Two R polynomials are provided. objective_n4d2_exact uses
//   R = 6 - 2(x+y+z) + 4(xy+xz+yz) + 12xyz,
// which reproduces 24 <psi|Pi|psi> exactly; its box minimum is 1/9, matching
// the generic five-parameter search. objective_n4d2 uses
//   R = 4 - (x+y+z) + 3(xy+xz+yz) + 13xyz,
// the reference grid-search form with box minimum ~= 1.3572/24. The two
// differ by 1 + (1-x)(1-y)(1-z) > 0, so the reference form is a strict
// underestimate and its minimum remains a valid (non-sharp) lower bound.
// ---------------------------------------------------------------------------

namespace detail {

struct ReducedTerms {
    double a = 0.0, b = 0.0, c = 0.0;
};

inline ReducedTerms reduced_phase_terms(double x, double y, double z) {
    const auto arch = [](double u) { return std::max(0.0, u - u * u); };
    ReducedTerms t;
    t.a = 4.0 * (2.0 + z) * std::sqrt(arch(x) * arch(y));
    t.b = 4.0 * (2.0 + y) * std::sqrt(arch(x) * arch(z));
    t.c = 4.0 * (2.0 + x) * std::sqrt(arch(y) * arch(z));
    return t;
}

inline void check_unit_box(double x, double y, double z, double w) {
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0 || z < 0.0 || z > 1.0 ||
        w < 0.0 || w > 1.0)
        throw InputError("reduced objective: arguments must lie in [0,1]");
}

inline double reduced_objective(double x, double y, double z, double w, double r_value) {
    const ReducedTerms t = reduced_phase_terms(x, y, z);
    const double cw = std::cos(kTwoPi * w);
    const double s = std::sqrt(std::max(0.0, t.b * t.b + t.c * t.c + 2.0 * t.b * t.c * cw));
    return (r_value + t.a * cw - s) / 24.0;
}

} // namespace detail

inline double objective_n4d2(double x, double y, double z, double w) {
    detail::check_unit_box(x, y, z, w);
    const double r = 4.0 - x - y - z + 3.0 * (x * y + x * z + y * z) + 13.0 * x * y * z;
    return detail::reduced_objective(x, y, z, w, r);
}

inline double objective_n4d2_exact(double x, double y, double z, double w) {
    detail::check_unit_box(x, y, z, w);
    const double r = 6.0 - 2.0 * (x + y + z) + 4.0 * (x * y + x * z + y * z) +
                     12.0 * x * y * z;
    return detail::reduced_objective(x, y, z, w, r);
}

// Value of the eliminated phase at the minimum: argmin over a4 of
// b cos(a4) + c cos(a3 - a4).
inline double reduced_phase_argmin(double x, double y, double z, double w) {
    const detail::ReducedTerms t = detail::reduced_phase_terms(x, y, z);
    const double a3 = kTwoPi * w;
    const double k1 = t.b + t.c * std::cos(a3);
    const double k2 = t.c * std::sin(a3);
    if (k1 == 0.0 && k2 == 0.0) return 0.0;
    double a4 = std::atan2(k2, k1) + kPi;
    if (a4 >= kTwoPi) a4 -= kTwoPi;
    return a4;
}

// Grid + simplex minimization of a reduced four-qubit objective over the
// unit box. The argmin is reported as gauge parameters (theta_j = acos
// sqrt(.), a3 = 2 pi w, a4 from the analytic phase minimizer).
inline BoundResult minimize_n4d2(const OptimizerConfig& config = {}, bool exact_form = false) {
    if (config.grid_points < 2)
        throw InputError("minimize_n4d2: grid_points must be >= 2");
    const auto raw = exact_form ? objective_n4d2_exact : objective_n4d2;

    detail::GridSpec grid;
    grid.points = config.grid_points;
    for (int i = 0; i < 4; ++i) {
        grid.lo.push_back(0.0);
        grid.span.push_back(1.0);
        grid.periodic.push_back(i == 3); // w wraps
    }
    const unsigned long long total = grid.total();
    if (total > config.max_grid_evaluations)
        throw SizeError("minimize_n4d2: grid of " + std::to_string(total) +
                        " points exceeds evaluation budget");

    auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };
    auto eval = [&](const std::vector<double>& q) {
        double w = q[3] - std::floor(q[3]); // periodic
        return raw(clamp01(q[0]), clamp01(q[1]), clamp01(q[2]), w);
    };

    BoundResult result;
    result.grid_step = 1.0 / static_cast<double>(config.grid_points - 1);
    const int keep = std::max(1, config.restarts);
    const std::vector<detail::GridCell> best_cells =
        detail::grid_scan(grid, keep, config.workers, eval);
    result.evaluations = static_cast<long long>(total);

    auto to_params = [&](const std::vector<double>& q) {
        GaugeParams gp;
        const double x = clamp01(q[0]), y = clamp01(q[1]), z = clamp01(q[2]);
        const double w = q[3] - std::floor(q[3]);
        gp.angles = {std::acos(std::sqrt(x)), std::acos(std::sqrt(y)),
                     std::acos(std::sqrt(z))};
        gp.phases = {kTwoPi * w, reduced_phase_argmin(x, y, z, w)};
        return gp;
    };

    std::vector<double> x;
    grid.decode(best_cells.front().flat, x);
    result.grid_minimum = best_cells.front().value;
    result.grid_argmin = to_params(x);

    if (config.refinement == OptimizerConfig::Refinement::None) {
        result.stage = BoundResult::Stage::Grid;
        result.minimum = result.grid_minimum;
        result.argmin = result.grid_argmin;
        return result;
    }

    const double diam_tol = std::max(config.tolerance * 1e-2, 1e-12);
    const std::vector<double> steps(4, 0.5 / static_cast<double>(config.grid_points - 1));
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (const detail::GridCell& cell : best_cells) {
        grid.decode(cell.flat, x);
        const detail::NelderMeadResult nm = detail::nelder_mead(eval, x, steps, diam_tol);
        result.evaluations += nm.evaluations;
        if (nm.best_f < best_value) {
            best_value = nm.best_f;
            best_x = nm.best_x;
        }
    }
    result.stage = BoundResult::Stage::Refined;
    if (best_value <= result.grid_minimum) {
        result.minimum = best_value;
        best_x[0] = clamp01(best_x[0]);
        best_x[1] = clamp01(best_x[1]);
        best_x[2] = clamp01(best_x[2]);
        best_x[3] = best_x[3] - std::floor(best_x[3]);
        result.argmin = to_params(best_x);
    } else {
        result.minimum = result.grid_minimum;
        result.argmin = result.grid_argmin;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Constrained sub-case arising in the n=3, d>=3 bound derivation.
// ---------------------------------------------------------------------------

inline double constrained_subcase_objective(double x, double y) {
    return ((x + y) * (x + y) + 1.0 - x - y) / 3.0;
}

struct SubcaseResult {
    double minimum = 0.0;
    double x = 0.0;
    double y = 0.0;
};

namespace detail {

// Golden-section refinement around a bracketing interval of a 1-D function.
inline std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                            double lo, double hi, double xtol) {
    const double invphi = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// Coarse scan then golden refinement; handles non-unimodal 1-D profiles.
inline std::pair<double, double> line_min(const std::function<double(double)>& f,
                                          double lo, double hi, int samples, double xtol) {
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i <= samples; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples);
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    const double h = (hi - lo) / static_cast<double>(samples);
    const auto [xr, fr] = golden_min(f, std::max(lo, best_x - h), std::min(hi, best_x + h), xtol);
    return fr < best_f ? std::make_pair(xr, fr) : std::make_pair(best_x, best_f);
}

} // namespace detail

// Minimize ((x+y)^2 + 1 - x - y)/3 over the unit box subject to
// 3xy >= 1 - x - y. The feasible region has no interior stationary point, so
// the minimum lies on the boundary: the two box edges x=1 / y=1 and the
// constraint curve y = (1-x)/(3x+1).
inline SubcaseResult constrained_subcase_check() {
    SubcaseResult best;
    best.minimum = std::numeric_limits<double>::infinity();
    auto consider = [&](double x, double y, double v) {
        if (v < best.minimum) best = SubcaseResult{v, x, y};
    };

    // feasible-box scan (confirms the boundary carries the minimum)
    const int g = 201;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const double x = static_cast<double>(i) / (g - 1);
            const double y = static_cast<double>(j) / (g - 1);
            if (3.0 * x * y + x + y >= 1.0 - 1e-15)
                consider(x, y, constrained_subcase_objective(x, y));
        }

    const auto [xe, fe] = detail::line_min(
        [](double y) { return constrained_subcase_objective(1.0, y); }, 0.0, 1.0, 400, 1e-13);
    consider(1.0, xe, fe);
    const auto [ye, fye] = detail::line_min(
        [](double x) { return constrained_subcase_objective(x, 1.0); }, 0.0, 1.0, 400, 1e-13);
    consider(ye, 1.0, fye);
    const auto curve = [](double x) {
        const double y = (1.0 - x) / (3.0 * x + 1.0);
        return constrained_subcase_objective(x, y);
    };
    const auto [xc, fcv] = detail::line_min(curve, 0.0, 1.0, 400, 1e-13);
    consider(xc, (1.0 - xc) / (3.0 * xc + 1.0), fcv);
    return best;
}

} // namespace symsector
