#include "capvol/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace capvol {

bool all_finite(const Matrix& M) {
    return M.allFinite();
}

void require_finite(const Matrix& M, const char* what) {
    if (!M.allFinite()) {
        throw DimensionMismatch(std::string(what) + ": non-finite entry");
    }
}

Polynomial::Polynomial(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty() || coeffs.front() != 1.0) {
        throw ParseError("Polynomial: leading coefficient must be 1");
    }
    for (double v : coeffs) {
        if (!std::isfinite(v)) {
            throw ParseError("Polynomial: non-finite coefficient");
        }
    }
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (double c : coeffs) {
        acc = acc * s + c;
    }
    return acc;
}

double LogDet::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return static_cast<double>(sign) * std::exp(log_abs);
}

namespace {

// Shared partial-pivot elimination. Returns the pivots in elimination
// order together with the permutation sign; pivot_floor is the
// magnitude below which a pivot counts as zero.
struct EliminationResult {
    std::vector<double> pivots;
    int perm_sign = 1;
    double pivot_floor = 0.0;
};

EliminationResult eliminate(Matrix M) {
    const Eigen::Index n = M.rows();
    EliminationResult res;
    double max_row_norm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        max_row_norm = std::max(max_row_norm, M.row(i).cwiseAbs().maxCoeff());
    }
    res.pivot_floor = 1e-12 * max_row_norm;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        double best = std::abs(M(k, k));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (std::abs(M(i, k)) > best) {
                best = std::abs(M(i, k));
                piv = i;
            }
        }
        if (piv != k) {
            M.row(piv).swap(M.row(k));
            res.perm_sign = -res.perm_sign;
        }
        const double p = M(k, k);
        res.pivots.push_back(p);
        if (p != 0.0) {
            for (Eigen::Index i = k + 1; i < n; ++i) {
                const double f = M(i, k) / p;
                if (f != 0.0) {
                    M.row(i).tail(n - k - 1) -= f * M.row(k).tail(n - k - 1);
                    M(i, k) = 0.0;
                }
            }
        }
    }
    return res;
}

} // namespace

double lu_det(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("lu_det: matrix not square");
    }
    if (M.rows() == 0) {
        return 1.0;
    }
    const EliminationResult e = eliminate(M);
    double det = static_cast<double>(e.perm_sign);
    for (double p : e.pivots) {
        det *= p;
    }
    return det;
}

LogDet lu_det_log(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("lu_det_log: matrix not square");
    }
    LogDet out;
    out.sign = 1;
    out.log_abs = 0.0;
    if (M.rows() == 0) {
        return out;
    }
    const EliminationResult e = eliminate(M);
    out.sign = e.perm_sign;
    for (double p : e.pivots) {
        if (p == 0.0) {
            out.sign = 0;
            out.log_abs = -std::numeric_limits<double>::infinity();
            return out;
        }
        if (p < 0.0) {
            out.sign = -out.sign;
        }
        out.log_abs += std::log(std::abs(p));
    }
    return out;
}

Matrix mat_inverse(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("mat_inverse: matrix not square");
    }
    const Eigen::Index n = M.rows();
    Matrix A = M;
    Matrix I = Matrix::Identity(n, n);
    double max_row_norm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        max_row_norm = std::max(max_row_norm, A.row(i).cwiseAbs().maxCoeff());
    }
    const double floor = 1e-12 * max_row_norm;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        double best = std::abs(A(k, k));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (std::abs(A(i, k)) > best) {
                best = std::abs(A(i, k));
                piv = i;
            }
        }
        if (best <= floor) {
            throw SingularMatrix("mat_inverse: pivot below singularity threshold");
        }
        if (piv != k) {
            A.row(piv).swap(A.row(k));
            I.row(piv).swap(I.row(k));
        }
        const double p = A(k, k);
        A.row(k) /= p;
        I.row(k) /= p;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != k && A(i, k) != 0.0) {
                const double f = A(i, k);
                A.row(i) -= f * A.row(k);
                I.row(i) -= f * I.row(k);
            }
        }
    }
    return I;
}

int mat_rank(const Matrix& M, double tol) {
    Matrix A = M;
    const Eigen::Index rows = A.rows();
    const Eigen::Index cols = A.cols();
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = row;
        double best = std::abs(A(row, col));
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            if (std::abs(A(i, col)) > best) {
                best = std::abs(A(i, col));
                piv = i;
            }
        }
        if (best <= tol) {
            continue;
        }
        if (piv != row) {
            A.row(piv).swap(A.row(row));
        }
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            const double f = A(i, col) / A(row, col);
            if (f != 0.0) {
                A.row(i) -= f * A.row(row);
            }
        }
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<Complex> eigenvalues(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("eigenvalues: matrix not square");
    }
    Eigen::EigenSolver<Matrix> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("eigenvalues: QR iteration did not converge");
    }
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(M.rows()));
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        out.push_back(solver.eigenvalues()(i));
    }
    return out;
}

Polynomial char_poly(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("char_poly: matrix not square");
    }
    const Eigen::Index n = M.rows();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    Matrix Mk = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        if (k == 1) {
            Mk = M;
        } else {
            Mk = M * (Mk + c[static_cast<std::size_t>(k) - 1] * Matrix::Identity(n, n));
        }
        c[static_cast<std::size_t>(k)] = -Mk.trace() / static_cast<double>(k);
    }
    return Polynomial(std::move(c));
}

Matrix expm(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("expm: matrix not square");
    }
    const Eigen::Index n = M.rows();
    const double norm = M.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Matrix S = M / std::ldexp(1.0, squarings);

    Matrix result = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * S) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18 * result.cwiseAbs().maxCoeff()) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

Matrix lyapunov_solve(const Matrix& A, const Matrix& Q) {
    if (A.rows() != A.cols() || Q.rows() != Q.cols() || A.rows() != Q.rows()) {
        throw DimensionMismatch("lyapunov_solve: dimension mismatch");
    }
    for (const Complex& lam : eigenvalues(A)) {
        if (lam.real() >= 0.0) {
            throw UnstableSystem("lyapunov_solve: A is not Hurwitz stable");
        }
    }
    const Eigen::Index n = A.rows();
    // (I (x) A + A (x) I) vec(G) = -vec(Q), column-major vec.
    Matrix K = Matrix::Zero(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        K.block(j * n, j * n, n, n) += A;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index k = 0; k < n; ++k) {
                K(j * n + i, k * n + i) += A(j, k);
            }
        }
    }
    Vector rhs(n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        rhs.segment(j * n, n) = -Q.col(j);
    }
    Vector g = K.partialPivLu().solve(rhs);
    Matrix G(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        G.col(j) = g.segment(j * n, n);
    }
    // Symmetrize; the exact solution is symmetric for symmetric Q.
    return 0.5 * (G + G.transpose());
}

} // namespace capvol
