#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "capvol/hurwitz.hpp"
#include "capvol/oracles.hpp"
#include "test_util.hpp"

using namespace capvol;
using capvol::test::rel_err;

TEST_CASE("hurwitz_matrix layout and determinants") {
    // s^2 + 3s + 2
    HurwitzData hd = hurwitz_matrix(Polynomial({1.0, 3.0, 2.0}));
    CHECK(hd.H(0, 0) == doctest::Approx(3.0));
    CHECK(hd.H(0, 1) == doctest::Approx(0.0));
    CHECK(hd.H(1, 0) == doctest::Approx(1.0));
    CHECK(hd.H(1, 1) == doctest::Approx(2.0));
    CHECK(hd.det_H == doctest::Approx(6.0));
    REQUIRE(hd.minors.size() == 2);
    CHECK(hd.minors[0] == doctest::Approx(3.0));
    CHECK(hd.minors[1] == doctest::Approx(6.0));

    // s^3 + 6s^2 + 11s + 6 = (s+1)(s+2)(s+3)
    hd = hurwitz_matrix(Polynomial({1.0, 6.0, 11.0, 6.0}));
    CHECK(hd.H(0, 0) == doctest::Approx(6.0));
    CHECK(hd.H(0, 1) == doctest::Approx(6.0));
    CHECK(hd.H(0, 2) == doctest::Approx(0.0));
    CHECK(hd.H(1, 0) == doctest::Approx(1.0));
    CHECK(hd.H(1, 1) == doctest::Approx(11.0));
    CHECK(hd.H(1, 2) == doctest::Approx(0.0));
    CHECK(hd.H(2, 0) == doctest::Approx(0.0));
    CHECK(hd.H(2, 1) == doctest::Approx(6.0));
    CHECK(hd.H(2, 2) == doctest::Approx(6.0));
    CHECK(hd.det_H == doctest::Approx(360.0));

    // scalar: s + 4
    hd = hurwitz_matrix(Polynomial({1.0, 4.0}));
    CHECK(hd.det_H == doctest::Approx(4.0));
}

TEST_CASE("stability_check verdicts") {
    CHECK(is_hurwitz_stable(Polynomial({1.0, 3.0, 2.0})));
    CHECK(is_hurwitz_stable(Polynomial({1.0, 6.0, 11.0, 6.0})));
    CHECK_FALSE(is_hurwitz_stable(Polynomial({1.0, -3.0, 2.0})));
    // s^2 + 1: boundary (purely imaginary roots)
    const HurwitzData hd = hurwitz_matrix(Polynomial({1.0, 0.0, 1.0}));
    CHECK(stability_check(hd) == Stability::Indeterminate);
    CHECK_FALSE(is_hurwitz_stable(Polynomial({1.0, 0.0, 1.0})));
}

TEST_CASE("l_n examples") {
    CHECK(l_n(SpectrumVector{{-1.0}}) == doctest::Approx(-1.0));
    CHECK(l_n(SpectrumVector{{-1.0, -2.0}}) == doctest::Approx(-6.0));
    CHECK(l_n(SpectrumVector{{-1.0, -2.0, -3.0}}) == doctest::Approx(360.0));
    const LogDet ld = l_n_log(SpectrumVector{{-1.0, -2.0, -3.0}});
    CHECK(ld.value() == doctest::Approx(360.0));
}

TEST_CASE("poly_from_roots expands linear factors exactly") {
    const Polynomial p = poly_from_roots(SpectrumVector{{-1.0, -2.0, -3.0}});
    CHECK(p.a(0) == doctest::Approx(1.0));
    CHECK(p.a(1) == doctest::Approx(6.0));
    CHECK(p.a(2) == doctest::Approx(11.0));
    CHECK(p.a(3) == doctest::Approx(6.0));
}

TEST_CASE("|det H| = |L_n| on random spectra up to n = 8") {
    Rng rng(1234);
    std::uniform_real_distribution<double> dist(-5.0, -0.1);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            SpectrumVector sv;
            for (int k = 0; k < n; ++k) {
                sv.lambdas.push_back(dist(rng));
            }
            const Lemma1Result r = lemma1_check(sv);
            CHECK(r.rel_gap_of_abs < 1e-8);
        }
    }
}

TEST_CASE("sign of det H / L_n is fixed per dimension") {
    Rng rng(99);
    std::uniform_real_distribution<double> dist(-5.0, -0.1);
    const int expected[] = {0, -1, -1, 1}; // n = 1, 2, 3
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            SpectrumVector sv;
            for (int k = 0; k < n; ++k) {
                sv.lambdas.push_back(dist(rng));
            }
            CHECK(lemma1_check(sv).sign_ratio == expected[n]);
        }
    }
}

TEST_CASE("setting lambda_{n-1} = -lambda_n kills the (n-1)-th minor") {
    // With a cancelling pair the factor (lambda_{n-1} + lambda_n) of
    // H_{n-1} vanishes, so the minor collapses relative to its
    // unperturbed size.
    Rng rng(4321);
    std::uniform_real_distribution<double> dist(-5.0, -0.1);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            SpectrumVector sv;
            for (int k = 0; k < n; ++k) {
                sv.lambdas.push_back(dist(rng));
            }
            const double ref =
                std::abs(hurwitz_matrix(poly_from_roots(sv))
                             .minors[static_cast<std::size_t>(n - 2)]);
            sv.lambdas[static_cast<std::size_t>(n - 2)] =
                -sv.lambdas[static_cast<std::size_t>(n - 1)];
            const double killed =
                std::abs(hurwitz_matrix(poly_from_roots(sv))
                             .minors[static_cast<std::size_t>(n - 2)]);
            CHECK(killed < 1e-8 * std::max(ref, 1.0));
        }
    }
}

TEST_CASE("Hurwitz criterion agrees with companion eigenvalues") {
    Rng rng(2026);
    std::uniform_real_distribution<double> root(-3.0, 3.0);
    std::uniform_int_distribution<int> deg(1, 8);
    int checked = 0;
    while (checked < 500) {
        const int n = deg(rng);
        SpectrumVector sv;
        bool near_axis = false;
        for (int k = 0; k < n; ++k) {
            const double r = root(rng);
            near_axis = near_axis || std::abs(r) < 0.05;
            sv.lambdas.push_back(r);
        }
        if (near_axis) {
            continue; // strict criterion has no margin on the boundary
        }
        const bool all_negative =
            std::all_of(sv.lambdas.begin(), sv.lambdas.end(),
                        [](double v) { return v < 0.0; });
        const Polynomial p = poly_from_roots(sv);
        CHECK(is_hurwitz_stable(p) == all_negative);
        // independent verdict from the actual roots of the polynomial
        Matrix C = Matrix::Zero(n, n);
        for (int i = 0; i + 1 < n; ++i) {
            C(i, i + 1) = 1.0;
        }
        for (int j = 0; j < n; ++j) {
            C(n - 1, j) = -p.a(n - j);
        }
        bool eig_stable = true;
        for (const Complex& lam : eigenvalues(C)) {
            eig_stable = eig_stable && lam.real() < 0.0;
        }
        CHECK(is_hurwitz_stable(p) == eig_stable);
        ++checked;
    }
}

TEST_CASE("scaling the spectrum scales det H by c^(n(n+1)/2)") {
    Rng rng(606);
    std::uniform_real_distribution<double> dist(-3.0, -0.2);
    for (int n = 1; n <= 6; ++n) {
        SpectrumVector sv, scaled;
        for (int k = 0; k < n; ++k) {
            const double v = dist(rng);
            sv.lambdas.push_back(v);
            scaled.lambdas.push_back(2.0 * v);
        }
        const double h1 = hurwitz_matrix(poly_from_roots(sv)).det_H;
        const double h2 = hurwitz_matrix(poly_from_roots(scaled)).det_H;
        const double factor = std::pow(2.0, n * (n + 1) / 2.0);
        CHECK(rel_err(h2, factor * h1) < 1e-8);
    }
}

TEST_CASE("l_n_oracle matches l_n through the coefficients") {
    Rng rng(31415);
    std::uniform_real_distribution<double> dist(-5.0, -0.1);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            SpectrumVector sv;
            for (int k = 0; k < n; ++k) {
                sv.lambdas.push_back(dist(rng));
            }
            CHECK(rel_err(l_n_oracle(poly_from_roots(sv)), l_n(sv)) < 1e-7);
        }
    }
    CHECK_THROWS_AS(l_n_oracle(Polynomial({1.0, 0.0, 1.0})), ComplexSpectrum);
}
