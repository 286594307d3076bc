#include "capvol/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "capvol/hurwitz.hpp"
#include "capvol/volumes.hpp"

namespace capvol {

ZonotopeApprox build_generators(const LctSystem& sys, double T, int m) {
    if (T <= 0.0 || m < 1) {
        throw PreconditionViolated("build_generators: need T > 0 and m >= 1");
    }
    const double d = T / m;
    ZonotopeApprox za;
    za.T = T;
    za.m = m;
    za.generators.reserve(static_cast<std::size_t>(m));

    const Matrix E = expm(sys.A * d);
    bool invertible = true;
    Matrix slice; // maps exp(A t_k) b to the slice integral
    try {
        slice = mat_inverse(sys.A) * (E - Matrix::Identity(sys.n(), sys.n()));
    } catch (const SingularMatrix&) {
        invertible = false;
    }

    if (invertible) {
        Vector v = sys.b.col(0); // exp(A t_k) b
        for (int k = 0; k < m; ++k) {
            za.generators.push_back(slice * v);
            v = E * v;
        }
    } else {
        const Matrix Eh = expm(sys.A * (d / 2.0)); // midpoint step
        Vector v = (Eh * sys.b).col(0);
        for (int k = 0; k < m; ++k) {
            za.generators.push_back(v * d);
            v = E * v;
        }
    }
    return za;
}

double zonotope_volume_discretized(const ZonotopeApprox& za) {
    const int m = za.m;
    if (m < 1 || za.generators.empty()) {
        throw PreconditionViolated("zonotope_volume_discretized: no generators");
    }
    const int n = static_cast<int>(za.generators.front().size());
    if (m < n) {
        throw PreconditionViolated("zonotope_volume_discretized: need m >= n");
    }
    double budget = 1.0;
    for (int i = 0; i < n; ++i) {
        budget *= static_cast<double>(m - i) / (i + 1);
    }
    if (budget > 1e7) {
        throw BudgetExceeded("zonotope_volume_discretized: C(m,n) exceeds 10^7");
    }

    // Lexicographic n-subset enumeration with Kahan summation.
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    double sum = 0.0;
    double comp = 0.0;
    Matrix G(n, n);
    while (true) {
        for (int c = 0; c < n; ++c) {
            G.col(c) = za.generators[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])];
        }
        const double term = std::abs(lu_det(G));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::ldexp(sum, n); // 2^n factor
}

double ellipsoid_volume_gramian(const LctSystem& sys) {
    const Matrix G = grammian_infinite(sys);
    const double det = lu_det(G);
    if (det < 0.0) {
        throw PreconditionViolated("ellipsoid_volume_gramian: Grammian not PSD");
    }
    return pi_n(sys.n()) * std::sqrt(det);
}

double l_n_oracle(const Polynomial& p) {
    const int n = p.degree();
    Matrix C = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        C(i, i + 1) = 1.0;
    }
    for (int j = 0; j < n; ++j) {
        C(n - 1, j) = -p.a(n - j);
    }
    SpectrumVector sv;
    for (const Complex& lam : eigenvalues(C)) {
        if (std::abs(lam.imag()) > 1e-6) {
            throw ComplexSpectrum("l_n_oracle: nonreal root");
        }
        sv.lambdas.push_back(lam.real());
    }
    return l_n(sv);
}

double default_oracle_horizon(const std::vector<Complex>& spectrum) {
    double min_abs = std::numeric_limits<double>::infinity();
    for (const Complex& lam : spectrum) {
        min_abs = std::min(min_abs, std::abs(lam.real()));
    }
    if (!std::isfinite(min_abs) || min_abs <= 0.0) {
        return 12.0;
    }
    return 12.0 / min_abs;
}

} // namespace capvol
