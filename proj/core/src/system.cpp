#include "capvol/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace capvol {

LctSystem::LctSystem(Matrix A_, Matrix b_) : A(std::move(A_)), b(std::move(b_)) {
    if (A.rows() != A.cols()) {
        throw DimensionMismatch("LctSystem: A must be square");
    }
    if (b.cols() != 1) {
        throw DimensionMismatch("LctSystem: single-input only (b must be n x 1)");
    }
    if (b.rows() != A.rows()) {
        throw DimensionMismatch("LctSystem: b row count must match A");
    }
    if (A.rows() < 1) {
        throw DimensionMismatch("LctSystem: empty system");
    }
    require_finite(A, "LctSystem A");
    require_finite(b, "LctSystem b");
}

std::string to_string(SpectrumClass c) {
    switch (c) {
    case SpectrumClass::RealNegativeDistinct: return "real-negative-distinct";
    case SpectrumClass::RealNegativeRepeated: return "real-negative-repeated";
    case SpectrumClass::ComplexStable: return "complex-stable";
    case SpectrumClass::UnstableOrMarginal: return "unstable-or-marginal";
    }
    return "unknown";
}

Matrix controllability_matrix(const LctSystem& sys) {
    const int n = sys.n();
    Matrix P(n, n);
    Matrix col = sys.b;
    for (int k = 0; k < n; ++k) {
        P.col(k) = col;
        col = sys.A * col;
    }
    return P;
}

SystemDiagnostics diagnose(const LctSystem& sys, double tol) {
    const int n = sys.n();
    const Matrix P = controllability_matrix(sys);
    const double pmax = P.cwiseAbs().maxCoeff();
    SystemDiagnostics d;
    d.rank_tol = tol > 0.0 ? tol : 1e-9 * pmax;
    if (pmax == 0.0) {
        d.rank_Pn = 0;
    } else {
        d.rank_Pn = mat_rank(P, d.rank_tol);
    }
    d.controllable = (d.rank_Pn == n);
    d.spectrum = eigenvalues(sys.A);

    double max_re = -std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    double max_im = 0.0;
    for (const Complex& lam : d.spectrum) {
        max_re = std::max(max_re, lam.real());
        max_abs = std::max(max_abs, std::abs(lam));
        max_im = std::max(max_im, std::abs(lam.imag()));
    }
    const double im_tol = 1e-6 * std::max(max_abs, 1.0);
    if (max_re > -1e-12) {
        d.spectrum_class = SpectrumClass::UnstableOrMarginal;
    } else if (max_im > im_tol) {
        d.spectrum_class = SpectrumClass::ComplexStable;
    } else {
        // Real negative spectrum; distinct vs repeated by pairwise gap.
        std::vector<double> re;
        re.reserve(d.spectrum.size());
        for (const Complex& lam : d.spectrum) {
            re.push_back(lam.real());
        }
        std::sort(re.begin(), re.end());
        bool repeated = false;
        const double gap_tol = 1e-6 * std::max(max_abs, 1.0);
        for (std::size_t i = 1; i < re.size(); ++i) {
            if (re[i] - re[i - 1] <= gap_tol) {
                repeated = true;
                break;
            }
        }
        d.spectrum_class = repeated ? SpectrumClass::RealNegativeRepeated
                                    : SpectrumClass::RealNegativeDistinct;
    }
    return d;
}

Matrix grammian_infinite(const LctSystem& sys) {
    return lyapunov_solve(sys.A, sys.b * sys.b.transpose());
}

Matrix grammian_finite(const LctSystem& sys, double T, int steps) {
    if (T <= 0.0) {
        throw PreconditionViolated("grammian_finite: T must be positive");
    }
    if (steps < 2) {
        throw PreconditionViolated("grammian_finite: steps must be >= 2");
    }
    if (steps % 2 != 0) {
        ++steps; // Simpson needs an even panel count
    }
    const int n = sys.n();
    const double h = T / steps;
    const Matrix E = expm(sys.A * h);
    Matrix integrand_state = sys.b; // exp(A t_k) b
    Matrix G = Matrix::Zero(n, n);
    for (int k = 0; k <= steps; ++k) {
        double w = (k == 0 || k == steps) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        G += w * (integrand_state * integrand_state.transpose());
        integrand_state = E * integrand_state;
    }
    return G * (h / 3.0);
}

} // namespace capvol
