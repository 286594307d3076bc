#pragma once

#include <string>
#include <vector>

#include "capvol/numerics.hpp"

namespace capvol {

/// Single-input linear continuous-time system xdot = A x + b u.
/// Construction enforces square A, a single input column, and finite
/// entries; multi-input pairs are rejected outright.
struct LctSystem {
    Matrix A;
    Matrix b; // n x 1

    LctSystem(Matrix A_, Matrix b_);

    int n() const { return static_cast<int>(A.rows()); }
};

enum class SpectrumClass {
    RealNegativeDistinct,
    RealNegativeRepeated,
    ComplexStable,
    UnstableOrMarginal,
};

std::string to_string(SpectrumClass c);

struct SystemDiagnostics {
    bool controllable = false;
    int rank_Pn = 0;
    std::vector<Complex> spectrum;
    SpectrumClass spectrum_class = SpectrumClass::UnstableOrMarginal;
    double rank_tol = 0.0; // tolerance actually used, for auditing
};

/// Controllability matrix [b, Ab, ..., A^(n-1) b].
Matrix controllability_matrix(const LctSystem& sys);

/// Rank test of the controllability matrix plus spectrum
/// classification. tol <= 0 selects the scale-aware default
/// 1e-9 * max|P_n|.
SystemDiagnostics diagnose(const LctSystem& sys, double tol = 0.0);

/// Infinite-horizon controllability Grammian, as the solution of
/// A G + G A^T + b b^T = 0. Raises UnstableSystem for non-Hurwitz A.
Matrix grammian_infinite(const LctSystem& sys);

/// Finite-horizon Grammian by composite Simpson quadrature of
/// integral_0^T exp(At) b b^T exp(A^T t) dt. Accuracy is the caller's
/// business via `steps` (rounded up to even).
Matrix grammian_finite(const LctSystem& sys, double T, int steps);

} // namespace capvol
