#include "capvol/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace capvol {

int EigenStructure::n() const {
    int total = 0;
    for (const EigenCluster& c : clusters) {
        total += c.multiplicity;
    }
    return total;
}

CcfData to_ccf(const LctSystem& sys) {
    const int n = sys.n();
    const Matrix P = controllability_matrix(sys);

    Matrix P_inv;
    try {
        P_inv = mat_inverse(P);
    } catch (const SingularMatrix&) {
        throw NotControllable("to_ccf: controllability matrix is singular");
    }
    const double cond = P.cwiseAbs().colwise().sum().maxCoeff() *
                        P_inv.cwiseAbs().colwise().sum().maxCoeff();
    if (cond > 1e12) {
        throw IllConditioned("to_ccf: controllability matrix condition estimate exceeds 1e12");
    }

    // w1 is the last row of P_n^{-1}; the stack [w1; w1 A; ...] is W_c^{-1}.
    Eigen::RowVectorXd w = P_inv.row(n - 1);
    Matrix Wc_inv(n, n);
    for (int k = 0; k < n; ++k) {
        Wc_inv.row(k) = w;
        w = w * sys.A;
    }

    CcfData out;
    out.W_c = mat_inverse(Wc_inv);
    out.det_Wc = lu_det(out.W_c);
    out.det_Wc_log = lu_det_log(out.W_c);

    const Polynomial p = char_poly(sys.A);
    out.a.assign(p.coeffs.begin() + 1, p.coeffs.end());

    out.A_c = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        out.A_c(i, i + 1) = 1.0;
    }
    for (int j = 0; j < n; ++j) {
        out.A_c(n - 1, j) = -out.a[static_cast<std::size_t>(n - 1 - j)];
    }
    out.B_c = Matrix::Zero(n, 1);
    out.B_c(n - 1, 0) = 1.0;

    // Verify the transformation actually lands on the companion pair.
    const Matrix Ac_num = Wc_inv * sys.A * out.W_c;
    const Matrix Bc_num = Wc_inv * sys.b;
    const double scale = std::max(1.0, out.A_c.cwiseAbs().maxCoeff());
    if ((Ac_num - out.A_c).cwiseAbs().maxCoeff() > 1e-8 * scale ||
        (Bc_num - out.B_c).cwiseAbs().maxCoeff() > 1e-8) {
        throw IllConditioned("to_ccf: CCF residual exceeds tolerance");
    }
    return out;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& spectrum,
                                              double tol_cluster, bool require_real) {
    double max_abs = 0.0;
    for (const Complex& lam : spectrum) {
        max_abs = std::max(max_abs, std::abs(lam));
    }
    if (tol_cluster <= 0.0) {
        tol_cluster = 1e-6 * std::max(max_abs, 1.0);
    }
    if (require_real) {
        for (const Complex& lam : spectrum) {
            if (std::abs(lam.imag()) > tol_cluster) {
                throw ComplexSpectrum("cluster_eigenvalues: nonreal eigenvalue");
            }
        }
    }
    std::vector<double> re;
    re.reserve(spectrum.size());
    for (const Complex& lam : spectrum) {
        re.push_back(lam.real());
    }
    std::sort(re.begin(), re.end());

    std::vector<EigenCluster> clusters;
    double sum = 0.0;
    int count = 0;
    for (double v : re) {
        if (count > 0 && std::abs(v - sum / count) <= tol_cluster) {
            sum += v;
            ++count;
        } else {
            if (count > 0) {
                clusters.push_back({sum / count, count});
            }
            sum = v;
            count = 1;
        }
    }
    if (count > 0) {
        clusters.push_back({sum / count, count});
    }
    return clusters;
}

namespace {

// Column block for one eigenvalue cluster: v1 = [1, l, l^2, ...]^T and
// v_{k+1} = (1/k) d v_k / d lambda, i.e. entry (r, k) = C(r, k) l^(r-k).
void fill_chain(Matrix& P, int col0, double lambda, int mult) {
    const int n = static_cast<int>(P.rows());
    for (int k = 0; k < mult; ++k) {
        for (int r = 0; r < n; ++r) {
            double entry = 0.0;
            if (r >= k) {
                double binom = 1.0;
                for (int t = 0; t < k; ++t) {
                    binom *= static_cast<double>(r - t) / static_cast<double>(t + 1);
                }
                entry = binom * std::pow(lambda, r - k);
            }
            P(r, col0 + k) = entry;
        }
    }
}

} // namespace

EigenStructure eigen_structure_ccf(const CcfData& ccf, double tol_cluster) {
    const std::vector<Complex> spectrum = eigenvalues(ccf.A_c);
    return eigen_structure_from_clusters(
        ccf, cluster_eigenvalues(spectrum, tol_cluster, /*require_real=*/true));
}

EigenStructure eigen_structure_from_clusters(const CcfData& ccf,
                                             std::vector<EigenCluster> clusters) {
    const int n = ccf.n();
    EigenStructure out;
    out.clusters = std::move(clusters);
    int total = 0;
    for (const EigenCluster& c : out.clusters) {
        total += c.multiplicity;
    }
    if (total != n) {
        throw DimensionMismatch("eigen_structure_from_clusters: multiplicities must sum to n");
    }

    out.P_J = Matrix::Zero(n, n);
    int col = 0;
    for (const EigenCluster& c : out.clusters) {
        fill_chain(out.P_J, col, c.lambda, c.multiplicity);
        col += c.multiplicity;
    }
    out.det_PJ = lu_det(out.P_J);
    out.det_PJ_log = lu_det_log(out.P_J);

    // Vandermonde columns are badly scaled at larger n; equilibrate the
    // columns before the pivoted solve.
    Matrix scaled = out.P_J;
    Vector col_scale(n);
    for (int j = 0; j < n; ++j) {
        const double s = scaled.col(j).cwiseAbs().maxCoeff();
        col_scale(j) = s > 0.0 ? 1.0 / s : 1.0;
        scaled.col(j) *= col_scale(j);
    }
    Matrix beta_full = scaled.partialPivLu().solve(ccf.B_c);
    for (int j = 0; j < n; ++j) {
        beta_full(j, 0) *= col_scale(j);
    }
    if (!beta_full.allFinite()) {
        bool all_simple = true;
        for (const EigenCluster& c : out.clusters) {
            all_simple = all_simple && c.multiplicity == 1;
        }
        if (!all_simple) {
            throw IllConditioned(
                "eigen_structure_from_clusters: modal matrix numerically singular");
        }
        // Distinct-eigenvalue fallback: the last column of the inverse
        // Vandermonde matrix in closed form, beta_i = prod 1/(l_i - l_j).
        for (int i = 0; i < n; ++i) {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    prod /= out.clusters[static_cast<std::size_t>(i)].lambda -
                            out.clusters[static_cast<std::size_t>(j)].lambda;
                }
            }
            beta_full(i, 0) = prod;
        }
    }
    col = 0;
    for (const EigenCluster& c : out.clusters) {
        std::vector<double> bi;
        for (int k = 0; k < c.multiplicity; ++k) {
            bi.push_back(beta_full(col + k, 0));
        }
        out.beta.push_back(std::move(bi));
        col += c.multiplicity;
    }
    return out;
}

} // namespace capvol
