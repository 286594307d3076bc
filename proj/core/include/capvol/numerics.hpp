#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "capvol/errors.hpp"

namespace capvol {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// True iff every entry of M is finite (no NaN/Inf).
bool all_finite(const Matrix& M);

/// Throws DimensionMismatch / ParseError-style errors for invalid shapes
/// or non-finite entries. Used by every constructor that accepts matrices.
void require_finite(const Matrix& M, const char* what);

/// Monic real polynomial s^n + a1 s^(n-1) + ... + an, stored as
/// coeffs = [1, a1, ..., an].
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() : coeffs{1.0} {}
    explicit Polynomial(std::vector<double> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// a_k for k = 0..n (a_0 == 1).
    double a(int k) const { return coeffs[static_cast<std::size_t>(k)]; }

    double eval(double s) const;
};

/// Sign and log-magnitude of a determinant; survives values far outside
/// double range. sign in {-1, 0, +1}; log_abs is -inf when sign == 0.
struct LogDet {
    int sign = 0;
    double log_abs = 0.0;

    double value() const;
};

/// Determinant by row-pivoted Gaussian elimination with exact sign
/// tracking. Singular input yields 0.0.
double lu_det(const Matrix& M);

/// Determinant in sign/log-magnitude form, for dimensions where the
/// plain product overflows.
LogDet lu_det_log(const Matrix& M);

/// Inverse by partial-pivot LU. A pivot below 1e-12 times the largest
/// row max-norm raises SingularMatrix.
Matrix mat_inverse(const Matrix& M);

/// Numerical rank by pivoted elimination: pivots below tol are treated
/// as zero.
int mat_rank(const Matrix& M, double tol);

/// All n eigenvalues (with multiplicity) of a real square matrix.
/// Ordering is unspecified. Raises NoConvergence if the QR iteration
/// fails.
std::vector<Complex> eigenvalues(const Matrix& M);

/// Monic characteristic polynomial via the Faddeev-LeVerrier trace
/// recursion; no eigensolve involved.
Polynomial char_poly(const Matrix& M);

/// Matrix exponential by scaling-and-squaring over a truncated Taylor
/// series.
Matrix expm(const Matrix& M);

/// Solves A G + G A^T + Q = 0 by Kronecker vectorization. A must be
/// Hurwitz stable (raises UnstableSystem otherwise); Q symmetric.
Matrix lyapunov_solve(const Matrix& A, const Matrix& Q);

} // namespace capvol
