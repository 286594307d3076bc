#pragma once

#include <cmath>

#include "capvol/random_systems.hpp"

namespace capvol::test {

inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(got), std::abs(want));
    if (denom == 0.0) {
        return 0.0;
    }
    return std::abs(got - want) / denom;
}

// Independent determinant oracle: recursive cofactor expansion along
// the first row. Exponential cost; test-only.
inline double cofactor_det(const Matrix& M) {
    const int n = static_cast<int>(M.rows());
    if (n == 1) {
        return M(0, 0);
    }
    double det = 0.0;
    double sign = 1.0;
    for (int j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c != j) {
                    minor(r - 1, cc++) = M(r, c);
                }
            }
        }
        det += sign * M(0, j) * cofactor_det(minor);
        sign = -sign;
    }
    return det;
}

inline Matrix random_matrix(int rows, int cols, Rng& rng, double lo = -1.0,
                            double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Matrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            M(i, j) = dist(rng);
        }
    }
    return M;
}

// Random stable diagonalizable system with distinct spectrum; redraws
// until the CCF conditioning guard is satisfied.
inline LctSystem random_sweep_system(int n, Rng& rng, double lo = -5.0,
                                     double hi = -0.1, double min_gap = 0.05) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const auto spectrum = random_stable_spectrum(n, rng, lo, hi, min_gap);
        const LctSystem sys = random_diagonalizable_system(spectrum, rng);
        try {
            (void)to_ccf(sys);
            return sys;
        } catch (const IllConditioned&) {
            continue;
        }
    }
    throw PreconditionViolated("random_sweep_system: could not satisfy conditioning guard");
}

} // namespace capvol::test
