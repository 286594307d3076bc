#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capvol/system.hpp"
#include "test_util.hpp"

using namespace capvol;
using capvol::test::random_matrix;
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

} // namespace

TEST_CASE("LctSystem validates shape and finiteness") {
    CHECK_THROWS_AS(LctSystem(Matrix::Zero(2, 3), Matrix::Zero(2, 1)),
                    DimensionMismatch);
    CHECK_THROWS_AS(LctSystem(Matrix::Zero(2, 2), Matrix::Zero(2, 2)),
                    DimensionMismatch); // multi-input rejected
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(LctSystem(bad, Matrix::Zero(2, 1)), DimensionMismatch);
}

TEST_CASE("controllability_matrix examples") {
    const Matrix P = controllability_matrix(diag_example());
    CHECK(P(0, 0) == doctest::Approx(1.0));
    CHECK(P(0, 1) == doctest::Approx(-1.0));
    CHECK(P(1, 0) == doctest::Approx(1.0));
    CHECK(P(1, 1) == doctest::Approx(-2.0));

    Matrix A1(1, 1), b1(1, 1);
    A1 << -3.0;
    b1 << 0.7;
    CHECK(controllability_matrix(LctSystem(A1, b1))(0, 0) == doctest::Approx(0.7));

    Matrix e1(2, 1);
    e1 << 1, 0;
    const Matrix P2 = controllability_matrix(LctSystem(Matrix::Identity(2, 2), e1));
    CHECK(P2(0, 0) == doctest::Approx(1.0));
    CHECK(P2(0, 1) == doctest::Approx(1.0));
    CHECK(P2(1, 0) == doctest::Approx(0.0));
    CHECK(P2(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("diagnose examples") {
    SystemDiagnostics d = diagnose(diag_example());
    CHECK(d.controllable);
    CHECK(d.rank_Pn == 2);
    CHECK(d.spectrum_class == SpectrumClass::RealNegativeDistinct);

    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = -1.0;
    A(1, 1) = -2.0;
    d = diagnose(LctSystem(A, Matrix::Zero(2, 1)));
    CHECK_FALSE(d.controllable);

    Matrix R(2, 2), b(2, 1);
    R << 0, 1, -1, 0;
    b << 0, 1;
    d = diagnose(LctSystem(R, b));
    CHECK(d.controllable);
    CHECK(d.rank_Pn == 2);
    CHECK(d.spectrum_class == SpectrumClass::UnstableOrMarginal);
}

TEST_CASE("rank of P_n is invariant under state transformation") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const auto spectrum = random_stable_spectrum(n, rng, -4.0, -0.2, 0.05);
        const LctSystem sys = random_diagonalizable_system(spectrum, rng);

        Matrix W;
        while (true) {
            W = random_matrix(n, n, rng);
            if (std::abs(lu_det(W)) > 0.1) {
                break;
            }
        }
        const Matrix W_inv = mat_inverse(W);
        const LctSystem transformed(W_inv * sys.A * W, W_inv * sys.b);
        CHECK(diagnose(sys).controllable == diagnose(transformed).controllable);
    }
}

TEST_CASE("grammian_infinite closed forms") {
    Matrix A1(1, 1), b1(1, 1);
    A1 << -1.0;
    b1 << 1.0;
    CHECK(grammian_infinite(LctSystem(A1, b1))(0, 0) == doctest::Approx(0.5));

    const Matrix G = grammian_infinite(diag_example());
    CHECK(G(0, 0) == doctest::Approx(0.5));
    CHECK(G(0, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(G(1, 1) == doctest::Approx(0.25));
}

TEST_CASE("grammian_infinite Lyapunov residual on random stable systems") {
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const auto spectrum = random_stable_spectrum(4, rng, -3.0, -0.2, 0.05);
        const LctSystem sys = random_diagonalizable_system(spectrum, rng);
        const Matrix G = grammian_infinite(sys);
        const Matrix Q = sys.b * sys.b.transpose();
        const Matrix res = sys.A * G + G * sys.A.transpose() + Q;
        CHECK(res.cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, Q.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("grammian_finite scalar closed form and limit") {
    Matrix A1(1, 1), b1(1, 1);
    A1 << -1.0;
    b1 << 1.0;
    const LctSystem sys(A1, b1);
    CHECK(rel_err(grammian_finite(sys, 1.0, 200)(0, 0), (1.0 - std::exp(-2.0)) / 2.0) <
          1e-8);
    // T large approaches the infinite Grammian
    CHECK(rel_err(grammian_finite(sys, 20.0, 2000)(0, 0),
                  grammian_infinite(sys)(0, 0)) < 1e-6);
    // tiny horizon gives (nearly) nothing
    CHECK(grammian_finite(sys, 1e-12, 2)(0, 0) < 1e-11);
}

TEST_CASE("grammian_finite grows with the horizon") {
    const LctSystem sys = diag_example();
    const double d6 = lu_det(grammian_finite(sys, 6.0, 600));
    const double d12 = lu_det(grammian_finite(sys, 12.0, 1200));
    CHECK(d6 <= d12);
    CHECK(rel_err(d12, lu_det(grammian_infinite(sys))) < 1e-4);
}
