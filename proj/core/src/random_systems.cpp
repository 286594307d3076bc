#include "capvol/random_systems.hpp"

#include <algorithm>
#include <cmath>

#include "capvol/hurwitz.hpp"

namespace capvol {

std::vector<double> random_stable_spectrum(int n, Rng& rng, double lo, double hi,
                                           double min_gap) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++attempts > 100000) {
            throw PreconditionViolated("random_stable_spectrum: cannot satisfy min_gap");
        }
        const double cand = dist(rng);
        bool ok = true;
        for (double v : out) {
            if (std::abs(v - cand) < min_gap) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LctSystem random_diagonalizable_system(const std::vector<double>& spectrum, Rng& rng) {
    const int n = static_cast<int>(spectrum.size());
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Matrix V(n, n);
    Matrix V_inv(n, n);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) {
            throw PreconditionViolated("random_diagonalizable_system: no well-conditioned V");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                V(i, j) = unit(rng);
            }
        }
        try {
            V_inv = mat_inverse(V);
        } catch (const SingularMatrix&) {
            continue;
        }
        const double cond = V.cwiseAbs().colwise().sum().maxCoeff() *
                            V_inv.cwiseAbs().colwise().sum().maxCoeff();
        if (cond < 50.0) {
            break;
        }
    }
    Matrix D = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        D(i, i) = spectrum[static_cast<std::size_t>(i)];
    }
    Matrix beta(n, 1);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i) {
        beta(i, 0) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
    }
    return LctSystem(V * D * V_inv, V * beta);
}

LctSystem companion_system(const std::vector<double>& spectrum) {
    SpectrumVector sv;
    sv.lambdas = spectrum;
    const Polynomial p = poly_from_roots(sv);
    const int n = p.degree();
    Matrix A = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        A(i, i + 1) = 1.0;
    }
    for (int j = 0; j < n; ++j) {
        A(n - 1, j) = -p.a(n - j);
    }
    Matrix b = Matrix::Zero(n, 1);
    b(n - 1, 0) = 1.0;
    return LctSystem(std::move(A), std::move(b));
}

CcfData ccf_of_companion(const LctSystem& sys) {
    const int n = sys.n();
    CcfData out;
    out.W_c = Matrix::Identity(n, n);
    out.det_Wc = 1.0;
    out.det_Wc_log = LogDet{1, 0.0};
    out.A_c = sys.A;
    out.B_c = sys.b;
    out.a.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        out.a[static_cast<std::size_t>(n - 1 - j)] = -sys.A(n - 1, j);
    }
    return out;
}

} // namespace capvol
