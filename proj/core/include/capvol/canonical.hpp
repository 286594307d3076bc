#pragma once

#include <vector>

#include "capvol/system.hpp"

namespace capvol {

/// Controllable canonical form data: x = W_c x_c brings (A, b) to the
/// companion pair (A_c, B_c) with B_c = e_n.
struct CcfData {
    Matrix W_c;
    double det_Wc = 0.0;
    LogDet det_Wc_log;
    Matrix A_c;
    Matrix B_c;
    std::vector<double> a; // characteristic coefficients a1..an

    int n() const { return static_cast<int>(A_c.rows()); }
};

struct EigenCluster {
    double lambda = 0.0;
    int multiplicity = 0;
};

/// Real eigenstructure of a companion pair: clustered eigenvalues, the
/// Vandermonde/derivative-chain modal matrix P_J, and the coupling
/// coefficients beta = P_J^{-1} B_c grouped per cluster. The sign of
/// beta follows from the solve and carries no meaning downstream.
struct EigenStructure {
    std::vector<EigenCluster> clusters;
    std::vector<std::vector<double>> beta; // beta[i] has clusters[i].multiplicity entries
    Matrix P_J;
    double det_PJ = 0.0;
    LogDet det_PJ_log;

    int q() const { return static_cast<int>(clusters.size()); }
    int n() const;
};

/// CCF transformation: w1 = [0...0 1] P_n^{-1}, W_c the inverse of the
/// observability-style stack of w1. Raises NotControllable when P_n is
/// rank deficient and IllConditioned when its 1-norm condition estimate
/// exceeds 1e12.
CcfData to_ccf(const LctSystem& sys);

/// Greedy clustering of a spectrum by real part: sort, merge values
/// within tol_cluster of the running cluster mean. tol_cluster <= 0
/// selects 1e-6 * max|lambda|. require_real rejects any eigenvalue with
/// |Im| > tol via ComplexSpectrum.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& spectrum,
                                              double tol_cluster = 0.0,
                                              bool require_real = true);

/// Modal data of the companion pair, built column-block-wise: a
/// Vandermonde column per distinct eigenvalue and the derivative chain
/// v_{k+1} = (1/k) d v_k / d lambda for repeated ones. Never attempts a
/// Jordan decomposition of a general matrix.
EigenStructure eigen_structure_ccf(const CcfData& ccf, double tol_cluster = 0.0);

/// Same construction from caller-supplied clusters (total multiplicity
/// must equal n).
EigenStructure eigen_structure_from_clusters(const CcfData& ccf,
                                             std::vector<EigenCluster> clusters);

} // namespace capvol
