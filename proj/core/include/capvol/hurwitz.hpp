#pragma once

#include <vector>

#include "capvol/numerics.hpp"

namespace capvol {

/// Hurwitz matrix of a monic polynomial, H[i][j] = a_{2j-i} (1-indexed,
/// a_0 = 1, out-of-range coefficients zero), with all leading principal
/// minor determinants.
struct HurwitzData {
    int n = 0;
    std::vector<double> a; // a1..an
    Matrix H;
    std::vector<double> minors; // H_1 .. H_n
    double det_H = 0.0;
    LogDet det_H_log;
};

enum class Stability {
    Stable,
    Unstable,
    /// Some minor within 1e-12 of zero: the strict-inequality criterion
    /// gives no verdict on the boundary.
    Indeterminate,
};

/// List of n real eigenvalues with multiplicity.
struct SpectrumVector {
    std::vector<double> lambdas;

    int n() const { return static_cast<int>(lambdas.size()); }
};

struct Lemma1Result {
    double det_H = 0.0;
    double l_n = 0.0;
    double rel_gap_of_abs = 0.0;
    int sign_ratio = 0; // sign(det_H) * sign(L_n)
};

HurwitzData hurwitz_matrix(const Polynomial& p);

Stability stability_check(const HurwitzData& hd);

/// Hurwitz criterion: all leading principal minors strictly positive.
/// Indeterminate (near-boundary) counts as not stable.
bool is_hurwitz_stable(const Polynomial& p);

/// L_n = [prod_{i<j} (lambda_i + lambda_j)] * prod_i lambda_i.
/// The pair product is empty for n = 1.
double l_n(const SpectrumVector& spectrum);

/// L_n in sign/log-magnitude form for large n.
LogDet l_n_log(const SpectrumVector& spectrum);

/// Monic polynomial prod (s - lambda_i) by exact sequential convolution
/// of the linear factors.
Polynomial poly_from_roots(const SpectrumVector& spectrum);

/// Evaluates both sides of the |det H| = |L_n| identity for a real
/// spectrum and reports their relative gap.
Lemma1Result lemma1_check(const SpectrumVector& spectrum);

} // namespace capvol
