#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "symsector/witness.hpp"

using namespace symsector;

namespace {

// the two 8x8 blocks of the three-qubit Werner partial transpose,
// rho^Gamma = (p/24) M1 + ((1-p)/24) M2
const int kM1[8][8] = {
    {6, 0, 0, 0, 0, 2, 2, 0}, {0, 2, 2, 0, 0, 0, 0, 2}, {0, 2, 2, 0, 0, 0, 0, 2},
    {0, 0, 0, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 0, 0, 0}, {2, 0, 0, 0, 0, 2, 2, 0},
    {2, 0, 0, 0, 0, 2, 2, 0}, {0, 2, 2, 0, 0, 0, 0, 6}};
const int kM2[8][8] = {
    {0, 0, 0, 0, 0, -2, -2, 0}, {0, 4, -2, 0, 0, 0, 0, -2}, {0, -2, 4, 0, 0, 0, 0, -2},
    {0, 0, 0, 4, 0, 0, 0, 0},   {0, 0, 0, 0, 4, 0, 0, 0},  {-2, 0, 0, 0, 0, 4, -2, 0},
    {-2, 0, 0, 0, 0, -2, 4, 0}, {0, -2, -2, 0, 0, 0, 0, 0}};

CMatrix werner_pt_reference(double p) {
    CMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m(i, j) = (p * kM1[i][j] + (1.0 - p) * kM2[i][j]) / 24.0;
    return m;
}

DensityMatrix random_separable(int n, int d, SplitMix64& rng, int max_terms = 5) {
    MixtureSpec spec;
    const int terms = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_terms));
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        spec.weights.push_back(rng.uniform_open());
        total += spec.weights.back();
        spec.terms.push_back(random_product_state(n, d, rng));
    }
    for (double& w : spec.weights) w /= total;
    return mixture_density(spec);
}

} // namespace

TEST_CASE("witness spectra for the certified bounds") {
    const Witness w32 = make_witness(2, 3); // B = 1/4
    CHECK(w32.bound == 0.25);
    const auto eigs32 = hermitian_eigenvalues(w32.matrix);
    for (int i = 0; i < 4; ++i) CHECK(eigs32[static_cast<std::size_t>(i)] ==
                                      Catch::Approx(-0.25).margin(1e-12));
    for (int i = 4; i < 8; ++i) CHECK(eigs32[static_cast<std::size_t>(i)] ==
                                      Catch::Approx(0.75).margin(1e-12));

    const Witness w22 = make_witness(2, 2); // B = 1/2
    const auto eigs22 = hermitian_eigenvalues(w22.matrix);
    CHECK(eigs22[0] == Catch::Approx(-0.5).margin(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(eigs22[static_cast<std::size_t>(i)] ==
                                      Catch::Approx(0.5).margin(1e-12));

    const Witness trivial = make_witness(2, 3, 0.0); // W = Pi
    CHECK(is_psd(trivial.matrix).first);

    CHECK_THROWS_AS(make_witness(2, 4), InputError); // no certified bound
    CHECK_NOTHROW(make_witness(2, 4, 0.05));
}

TEST_CASE("witness value on reference states") {
    const Witness w = make_witness(2, 3);
    for (double p : {0.0, 0.1, 0.22, 0.25, 0.6, 1.0}) {
        const DensityMatrix rho = werner_state(p, 2, 3);
        REQUIRE(witness_value(w, rho) == Catch::Approx(p - 0.25).margin(1e-12));
    }

    const double r = 1.0 / std::sqrt(2.0);
    const DensityMatrix singlet = density_from_pure(PureState{2, 2, {0.0, r, -r, 0.0}});
    CHECK(witness_value(make_witness(2, 2), singlet) == Catch::Approx(-0.5).margin(1e-12));

    CHECK_THROWS_AS(witness_value(w, singlet), InputError);
}

TEST_CASE("witness is non-negative on random separable mixtures") {
    SplitMix64 rng(20240);
    for (const auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const Witness w = make_witness(d, n);
        for (int trial = 0; trial < 60; ++trial) {
            const DensityMatrix rho = random_separable(n, d, rng);
            REQUIRE(witness_value(w, rho) >= -1e-9);
        }
    }
}

TEST_CASE("partial transpose basics") {
    SplitMix64 rng(3331);
    const DensityMatrix rho = random_separable(3, 2, rng);

    // empty subset leaves the matrix unchanged
    CHECK(max_abs_diff(partial_transpose(rho, 0u), rho.matrix) == 0.0);

    // involution and trace preservation on every subset
    const SubsetMask full = (1u << 3) - 1u;
    for (SubsetMask mask = 0; mask <= full; ++mask) {
        const CMatrix pt = partial_transpose(rho, mask);
        CHECK(std::abs(pt.trace() - cdouble(1.0)) <= 1e-14);
        CHECK(hermiticity_defect(pt) <= 1e-14);
        CHECK(max_abs_diff(partial_transpose(pt, mask, 2, 3), rho.matrix) == 0.0);
    }

    // transposing a subset equals transposing its complement, then the whole
    for (SubsetMask mask = 0; mask <= full; ++mask) {
        const CMatrix a = partial_transpose(rho, mask).transpose();
        const CMatrix b = partial_transpose(rho, full & ~mask);
        REQUIRE(max_abs_diff(a, b) <= 1e-14);
    }

    CHECK_THROWS_AS(partial_transpose(rho, 1u << 5), InputError);
}

TEST_CASE("werner partial transpose matches the reference block form") {
    for (double p : {0.0, 0.2, 0.25, 0.5, 1.0}) {
        const DensityMatrix rho = werner_state(p, 2, 3);
        const CMatrix pt = partial_transpose(rho, 1u); // first factor
        REQUIRE(max_abs_diff(pt, werner_pt_reference(p)) <= 1e-15);
    }
}

TEST_CASE("permutation covariance of single-particle transposes on Werner states") {
    const DensityMatrix rho = werner_state(0.3, 2, 3);
    const CMatrix pt1 = partial_transpose(rho, 1u); // particle 1
    // particle 2: conjugate by the swap of particles 1 and 2
    const CMatrix pt2 = partial_transpose(rho, 2u);
    const CMatrix p12 = permutation_operator(Permutation{{1, 0, 2}}, 2);
    REQUIRE(max_abs_diff(pt2, p12 * pt1 * p12.transpose()) <= 1e-14);
    // particle 3: conjugate by the swap of particles 1 and 3
    const CMatrix pt3 = partial_transpose(rho, 4u);
    const CMatrix p13 = permutation_operator(Permutation{{2, 1, 0}}, 2);
    REQUIRE(max_abs_diff(pt3, p13 * pt1 * p13.transpose()) <= 1e-14);
}

TEST_CASE("is_psd semantics") {
    const auto [ok, eig] = is_psd(CMatrix::identity(3));
    CHECK(ok);
    CHECK(eig == Catch::Approx(1.0));

    CMatrix bad(2, 2);
    bad(0, 0) = 1.0;
    bad(1, 1) = -1e-3;
    const auto [ok2, eig2] = is_psd(bad, 1e-9);
    CHECK_FALSE(ok2);
    CHECK(eig2 == Catch::Approx(-1e-3));

    CHECK(is_psd(werner_pt_reference(0.25)).first);
    CHECK_FALSE(is_psd(werner_pt_reference(0.1)).first);
}

TEST_CASE("Sylvester cross-check at the witness threshold") {
    // all leading principal minors of the p = 0.25 partial transpose are
    // positive, so it is positive definite there
    const CMatrix pt = werner_pt_reference(0.25);
    for (int k = 1; k <= 8; ++k) {
        CMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = pt(i, j);
        const cdouble det = determinant(minor);
        REQUIRE(std::abs(det.imag()) <= 1e-15);
        REQUIRE(det.real() > 0.0);
    }
}

TEST_CASE("ppt sweep counts and verdicts") {
    SplitMix64 rng(515);
    const DensityMatrix two = random_separable(2, 2, rng);
    const PptReport r2 = ppt_sweep(two);
    CHECK(r2.subsets_checked == 1);
    CHECK(r2.is_ppt);

    const DensityMatrix three = random_separable(3, 2, rng);
    const PptReport r3 = ppt_sweep(three);
    CHECK(r3.subsets_checked == 3);
    CHECK(r3.is_ppt);

    for (int trial = 0; trial < 40; ++trial) {
        const PptReport r = ppt_sweep(random_separable(3, 2, rng));
        REQUIRE(r.is_ppt);
    }

    // entangled Werner state below the boundary fails
    const PptReport bad = ppt_sweep(werner_state(0.1, 2, 3));
    CHECK_FALSE(bad.is_ppt);
}

TEST_CASE("werner states satisfy the density contract across p") {
    for (double p : {0.0, 0.2, 0.22, 1.0}) {
        const DensityMatrix rho = werner_state(p, 2, 3);
        CHECK_NOTHROW(validate_density(rho, 1e-12));
    }
    CHECK_THROWS_AS(werner_state(-0.1, 2, 3), InputError);
    CHECK_THROWS_AS(werner_state(1.1, 2, 3), InputError);
    CHECK_THROWS_AS(werner_state(0.5, 1, 3), InputError); // complement rank 0

    // general (d, n) normalization reduces to the /4 form at (2, 3)
    const DensityMatrix rho = werner_state(0.6, 2, 3);
    const Projector pi = projector_dicke(2, 3);
    CMatrix expected = pi.matrix * cdouble(0.6 / 4.0);
    CMatrix complement = CMatrix::identity(8) - pi.matrix;
    expected += complement * cdouble(0.4 / 4.0);
    CHECK(max_abs_diff(rho.matrix, expected) <= 1e-15);

    // and is a valid state elsewhere, e.g. (d, n) = (3, 2)
    const DensityMatrix rho32 = werner_state(0.5, 3, 2);
    CHECK_NOTHROW(validate_density(rho32, 1e-12));
    CHECK(symmetric_trace(rho32) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("the p = 0.2 boundary state is classified PSD and flagged") {
    const PptReport report = ppt_sweep(werner_state(0.2, 2, 3));
    CHECK(report.is_ppt);
    bool any_boundary = false;
    for (const auto& s : report.subsets) any_boundary = any_boundary || s.boundary;
    CHECK(any_boundary);
}

TEST_CASE("werner thresholds: PPT boundary and witness root") {
    const WernerThresholds t = werner_thresholds();
    CHECK(t.ppt_boundary == Catch::Approx(0.2).margin(1e-6));
    CHECK(t.witness_threshold == 0.25);

    // between the two thresholds: PPT yet witness-detected
    const DensityMatrix rho = werner_state(0.22, 2, 3);
    CHECK(ppt_sweep(rho).is_ppt);
    CHECK(witness_value(make_witness(2, 3), rho) < 0.0);
}
