#include "capvol/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace capvol {

HurwitzData hurwitz_matrix(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) {
        throw PreconditionViolated("hurwitz_matrix: degree must be >= 1");
    }
    HurwitzData out;
    out.n = n;
    out.a.assign(p.coeffs.begin() + 1, p.coeffs.end());
    out.H = Matrix::Zero(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int k = 2 * j - i;
            if (k >= 0 && k <= n) {
                out.H(i - 1, j - 1) = p.a(k);
            }
        }
    }
    for (int k = 1; k <= n; ++k) {
        out.minors.push_back(lu_det(out.H.topLeftCorner(k, k)));
    }
    out.det_H = out.minors.back();
    out.det_H_log = lu_det_log(out.H);
    return out;
}

Stability stability_check(const HurwitzData& hd) {
    for (double m : hd.minors) {
        if (std::abs(m) <= 1e-12) {
            return Stability::Indeterminate;
        }
    }
    for (double m : hd.minors) {
        if (m < 0.0) {
            return Stability::Unstable;
        }
    }
    return Stability::Stable;
}

bool is_hurwitz_stable(const Polynomial& p) {
    return stability_check(hurwitz_matrix(p)) == Stability::Stable;
}

double l_n(const SpectrumVector& spectrum) {
    const int n = spectrum.n();
    double prod = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            prod *= spectrum.lambdas[i] + spectrum.lambdas[j];
        }
    }
    for (int i = 0; i < n; ++i) {
        prod *= spectrum.lambdas[i];
    }
    return prod;
}

LogDet l_n_log(const SpectrumVector& spectrum) {
    const int n = spectrum.n();
    LogDet out;
    out.sign = 1;
    out.log_abs = 0.0;
    auto absorb = [&out](double f) {
        if (f == 0.0) {
            out.sign = 0;
            out.log_abs = -std::numeric_limits<double>::infinity();
            return;
        }
        if (f < 0.0) {
            out.sign = -out.sign;
        }
        out.log_abs += std::log(std::abs(f));
    };
    for (int i = 0; i < n && out.sign != 0; ++i) {
        for (int j = i + 1; j < n && out.sign != 0; ++j) {
            absorb(spectrum.lambdas[i] + spectrum.lambdas[j]);
        }
    }
    for (int i = 0; i < n && out.sign != 0; ++i) {
        absorb(spectrum.lambdas[i]);
    }
    return out;
}

Polynomial poly_from_roots(const SpectrumVector& spectrum) {
    std::vector<double> c{1.0};
    for (double lam : spectrum.lambdas) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= lam * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

Lemma1Result lemma1_check(const SpectrumVector& spectrum) {
    const HurwitzData hd = hurwitz_matrix(poly_from_roots(spectrum));
    Lemma1Result r;
    r.det_H = hd.det_H;
    r.l_n = l_n(spectrum);
    const double denom = std::max(std::abs(r.det_H), std::abs(r.l_n));
    r.rel_gap_of_abs =
        denom == 0.0 ? 0.0 : std::abs(std::abs(r.det_H) - std::abs(r.l_n)) / denom;
    const auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    r.sign_ratio = sgn(r.det_H) * sgn(r.l_n);
    return r;
}

} // namespace capvol
