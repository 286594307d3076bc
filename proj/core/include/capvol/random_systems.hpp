#pragma once

#include <random>

#include "capvol/canonical.hpp"
#include "capvol/system.hpp"

namespace capvol {

using Rng = std::mt19937_64;

/// n distinct negative reals in [lo, hi] with pairwise gap >= min_gap
/// (lo < hi < 0), sampled by rejection.
std::vector<double> random_stable_spectrum(int n, Rng& rng, double lo, double hi,
                                           double min_gap);

/// Diagonalizable system with the given real spectrum: A = V D V^{-1},
/// b = V beta with every beta entry bounded away from zero, so the pair
/// is controllable by construction. V is redrawn until well conditioned.
LctSystem random_diagonalizable_system(const std::vector<double>& spectrum, Rng& rng);

/// Companion pair (A_c, e_n) of the monic polynomial with the given
/// roots.
LctSystem companion_system(const std::vector<double>& spectrum);

/// CcfData of a system already in companion form: W_c = I, det 1.
CcfData ccf_of_companion(const LctSystem& sys);

} // namespace capvol
