#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "capvol/canonical.hpp"
#include "test_util.hpp"

using namespace capvol;
using capvol::test::random_matrix;
using capvol::test::random_sweep_system;
using capvol::test::rel_err;

namespace {

LctSystem diag_example() {
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = -1.0;
    A(1, 1) = -2.0;
    Matrix b(2, 1);
    b << 1, 1;
    return LctSystem(A, b);
}

LctSystem companion_of(const std::vector<double>& lambdas) {
    return companion_system(lambdas);
}

} // namespace

TEST_CASE("to_ccf on the diagonal example") {
    const CcfData ccf = to_ccf(diag_example());
    CHECK(ccf.det_Wc == doctest::Approx(1.0));
    REQUIRE(ccf.a.size() == 2);
    CHECK(ccf.a[0] == doctest::Approx(3.0));
    CHECK(ccf.a[1] == doctest::Approx(2.0));
    CHECK(ccf.A_c(0, 1) == doctest::Approx(1.0));
    CHECK(ccf.A_c(1, 0) == doctest::Approx(-2.0));
    CHECK(ccf.A_c(1, 1) == doctest::Approx(-3.0));
    CHECK(ccf.B_c(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("to_ccf scalar case") {
    Matrix A(1, 1), b(1, 1);
    A << -3.0;
    b << 2.0;
    const CcfData ccf = to_ccf(LctSystem(A, b));
    CHECK(ccf.W_c(0, 0) == doctest::Approx(2.0));
    CHECK(ccf.a[0] == doctest::Approx(3.0));
}

TEST_CASE("to_ccf is a fixed point on companion systems") {
    const LctSystem sys = companion_of({-1.0, -2.0, -3.5});
    const CcfData ccf = to_ccf(sys);
    CHECK((ccf.W_c - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(ccf.det_Wc == doctest::Approx(1.0));
    CHECK((ccf.A_c - sys.A).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("to_ccf round-trips the state matrix") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const LctSystem sys = random_sweep_system(n, rng);
        const CcfData ccf = to_ccf(sys);
        const Matrix back = ccf.W_c * ccf.A_c * mat_inverse(ccf.W_c);
        CHECK((back - sys.A).cwiseAbs().maxCoeff() <
              1e-8 * std::max(1.0, sys.A.cwiseAbs().maxCoeff()));
        CHECK((ccf.W_c * ccf.B_c - sys.b).cwiseAbs().maxCoeff() < 1e-8);
        // last companion row against the trace-recursion coefficients
        const Polynomial p = char_poly(sys.A);
        for (int j = 0; j < n; ++j) {
            CHECK(rel_err(ccf.A_c(n - 1, j), -p.a(n - j)) < 1e-9);
        }
    }
}

TEST_CASE("to_ccf rejects uncontrollable systems") {
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = -1.0;
    A(1, 1) = -2.0;
    CHECK_THROWS_AS(to_ccf(LctSystem(A, Matrix::Zero(2, 1))), NotControllable);

    Matrix b(2, 1);
    b << 1, 0; // eigenvector of A: rank-1 controllability matrix
    CHECK_THROWS_AS(to_ccf(LctSystem(A, b)), NotControllable);
}

TEST_CASE("cluster_eigenvalues merging and realness guard") {
    std::vector<Complex> spec{{-1.0, 0.0}, {-1.0 + 1e-9, 0.0}, {-2.0, 0.0}};
    auto clusters = cluster_eigenvalues(spec, 1e-6, true);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].lambda == doctest::Approx(-2.0));
    CHECK(clusters[0].multiplicity == 1);
    CHECK(clusters[1].lambda == doctest::Approx(-1.0));
    CHECK(clusters[1].multiplicity == 2);

    std::vector<Complex> complex_spec{{-1.0, 0.5}, {-1.0, -0.5}};
    CHECK_THROWS_AS(cluster_eigenvalues(complex_spec, 1e-6, true), ComplexSpectrum);
    // ...but tolerated when realness is not required
    auto loose = cluster_eigenvalues(complex_spec, 1e-6, false);
    REQUIRE(loose.size() == 1);
    CHECK(loose[0].multiplicity == 2);
}

TEST_CASE("eigen structure of (s+1)(s+2)") {
    const CcfData ccf = to_ccf(diag_example());
    const EigenStructure es = eigen_structure_ccf(ccf, 0.0);
    REQUIRE(es.clusters.size() == 2);
    CHECK(es.n() == 2);
    // lambda_2 - lambda_1 = 1 with ascending ordering
    CHECK(std::abs(es.det_PJ) == doctest::Approx(1.0));
    // Coupling coefficients are 1/(l_i - l_j): magnitude product is 1.
    double prod = 1.0;
    for (const auto& bi : es.beta) {
        for (double v : bi) {
            prod *= v;
        }
    }
    CHECK(std::abs(prod) == doctest::Approx(1.0));
    // P_J beta reproduces B_c
    Matrix beta(2, 1);
    beta << es.beta[0][0], es.beta[1][0];
    CHECK((es.P_J * beta - ccf.B_c).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigen structure of (s+1)^2") {
    const LctSystem sys = companion_of({-1.0, -1.0});
    const CcfData ccf = to_ccf(sys);
    const EigenStructure es = eigen_structure_ccf(ccf, 0.0);
    REQUIRE(es.clusters.size() == 1);
    CHECK(es.clusters[0].multiplicity == 2);
    CHECK(es.clusters[0].lambda == doctest::Approx(-1.0));
    CHECK(es.P_J(0, 0) == doctest::Approx(1.0));
    CHECK(es.P_J(0, 1) == doctest::Approx(0.0));
    CHECK(es.P_J(1, 0) == doctest::Approx(-1.0));
    CHECK(es.P_J(1, 1) == doctest::Approx(1.0));
    CHECK(es.det_PJ == doctest::Approx(1.0));
    REQUIRE(es.beta.size() == 1);
    CHECK(es.beta[0][0] == doctest::Approx(0.0));
    CHECK(es.beta[0][1] == doctest::Approx(1.0));
}

TEST_CASE("det P_J equals the Vandermonde product for distinct spectra") {
    Rng rng(909);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const LctSystem sys = random_sweep_system(n, rng);
        const CcfData ccf = to_ccf(sys);
        const EigenStructure es = eigen_structure_ccf(ccf, 0.0);
        REQUIRE(static_cast<int>(es.clusters.size()) == n);
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                prod *= es.clusters[static_cast<std::size_t>(j)].lambda -
                        es.clusters[static_cast<std::size_t>(i)].lambda;
            }
        }
        CHECK(rel_err(es.det_PJ, prod) < 1e-9);
        CHECK(prod > 0.0); // ascending cluster order makes it positive
        // modal solve residual
        Matrix beta(n, 1);
        for (int i = 0; i < n; ++i) {
            beta(i, 0) = es.beta[static_cast<std::size_t>(i)][0];
        }
        CHECK((es.P_J * beta - ccf.B_c).cwiseAbs().maxCoeff() < 1e-9);
    }
}
