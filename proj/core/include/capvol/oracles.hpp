#pragma once

#include "capvol/numerics.hpp"
#include "capvol/system.hpp"

namespace capvol {

/// Discretized reachable-set zonotope: one generator per time slice,
/// g_k = integral over [t_k, t_k + T/m] of exp(At) b dt.
struct ZonotopeApprox {
    std::vector<Vector> generators;
    double T = 0.0;
    int m = 0;
};

/// Slice generators over [0, T] in m segments. Uses the exact slice
/// integral A^{-1}(exp(A d) - I) exp(A t_k) b when A is invertible and a
/// midpoint rule otherwise.
ZonotopeApprox build_generators(const LctSystem& sys, double T, int m);

/// Exact volume of the zonotope spanned by the generators:
/// 2^n * sum over n-subsets of |det of the chosen generators|.
/// Lexicographic enumeration with a C(m, n) <= 10^7 budget
/// (BudgetExceeded otherwise). Compensated summation keeps the result
/// independent of partitioning.
double zonotope_volume_discretized(const ZonotopeApprox& za);

/// Ellipsoid volume straight from the definition: Pi_n * sqrt(det G_inf)
/// with G_inf from the Lyapunov equation.
double ellipsoid_volume_gramian(const LctSystem& sys);

/// L_n evaluated from the roots of p (companion eigenvalues); the
/// coefficient-side cross-check for the Hurwitz identity. Raises
/// ComplexSpectrum when any root has |Im| > 1e-6.
double l_n_oracle(const Polynomial& p);

/// Default oracle horizon: twelve slowest time constants.
double default_oracle_horizon(const std::vector<Complex>& spectrum);

} // namespace capvol
