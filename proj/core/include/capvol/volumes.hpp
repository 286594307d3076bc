#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capvol/canonical.hpp"
#include "capvol/hurwitz.hpp"
#include "capvol/system.hpp"

namespace capvol {

enum class Region { Zonotope, Ellipsoid };
enum class VolumeMethod { Jordan, Ccf, Hurwitz };

std::string to_string(Region r);
std::string to_string(VolumeMethod m);

struct VolumeResult {
    double value = 0.0;
    /// log|value|; the authoritative magnitude when the plain product
    /// would leave double range (n > 25).
    double log_abs = 0.0;
    VolumeMethod method = VolumeMethod::Hurwitz;
    Region region = Region::Zonotope;
    bool preconditions_met = false;
    std::string notes;
    double seconds = 0.0;
};

struct VolumeReport {
    std::string system_name;
    int n = 0;
    Region region = Region::Zonotope;
    std::vector<VolumeResult> results;
    std::optional<double> oracle_value;
    std::optional<std::string> oracle_notes;
    double max_rel_discrepancy = 0.0;
};

struct ReportOptions {
    Region region = Region::Zonotope;
    bool with_oracle = false;
    double oracle_T = 0.0; // <= 0: twelve slowest time constants
    int oracle_m = 80;
    double tol = 0.0; // rank/cluster tolerance override, <= 0: defaults
};

/// Volume of the n-dimensional unit ball, pi^(n/2) / Gamma(n/2 + 1),
/// with the Gamma factor by half-integer recursion.
double pi_n(int n);

/// Infinite-horizon zonotope volume of the canonical pair described by
/// the eigenstructure (modal matrix determinant, eigenvalue clusters,
/// coupling coefficients). Dispatches the distinct / single-block /
/// general block forms. Requires every eigenvalue negative and the last
/// coupling coefficient of each cluster nonzero.
VolumeResult zonotope_volume_jordan(const EigenStructure& es);

/// Zonotope volume from the CCF determinant and the eigenvalue
/// polynomial: 2^n |det W_c / L_n|.
VolumeResult zonotope_volume_ccf(const CcfData& ccf, const EigenStructure& es);
VolumeResult zonotope_volume_ccf(const CcfData& ccf, const SpectrumVector& spectrum);

/// Eigenvalue-free zonotope volume: 2^n |det W_c / det H|. Requires the
/// characteristic polynomial to pass the Hurwitz criterion.
VolumeResult zonotope_volume_hurwitz(const CcfData& ccf, const HurwitzData& hd);

VolumeResult ellipsoid_volume_jordan(const EigenStructure& es);
VolumeResult ellipsoid_volume_ccf(const CcfData& ccf, const EigenStructure& es);
VolumeResult ellipsoid_volume_ccf(const CcfData& ccf, const SpectrumVector& spectrum);
VolumeResult ellipsoid_volume_hurwitz(const CcfData& ccf, const HurwitzData& hd);

namespace detail {
// The three case forms, exposed so the general form can be checked
// against the special ones.
VolumeResult zonotope_jordan_distinct(const EigenStructure& es);
VolumeResult zonotope_jordan_single_block(const EigenStructure& es);
VolumeResult zonotope_jordan_general(const EigenStructure& es);
VolumeResult ellipsoid_jordan_distinct(const EigenStructure& es);
VolumeResult ellipsoid_jordan_single_block(const EigenStructure& es);
VolumeResult ellipsoid_jordan_general(const EigenStructure& es);
} // namespace detail

/// Runs every applicable method on the system (plus the requested
/// oracle), recording per-method wall time; methods whose preconditions
/// fail are reported skipped with a reason. The Jordan result is mapped
/// back from the canonical pair through |det W_c|.
VolumeReport full_report(const LctSystem& sys, const ReportOptions& opts);

/// max over successful method pairs of |v1 - v2| / max(|v1|, |v2|),
/// evaluated in log space.
double max_pairwise_rel_discrepancy(const std::vector<VolumeResult>& results);

} // namespace capvol
