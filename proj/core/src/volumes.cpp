#include "capvol/volumes.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "capvol/oracles.hpp"

namespace capvol {

std::string to_string(Region r) {
    return r == Region::Zonotope ? "zonotope" : "ellipsoid";
}

std::string to_string(VolumeMethod m) {
    switch (m) {
    case VolumeMethod::Jordan: return "jordan";
    case VolumeMethod::Ccf: return "ccf";
    case VolumeMethod::Hurwitz: return "hurwitz";
    }
    return "unknown";
}

namespace {

constexpr double kLn2 = 0.6931471805599453094;

// Product accumulated as a sum of p * log|f| terms; |value| is
// recovered by exp, which stays finite far beyond double product range.
struct LogProd {
    double log_abs = 0.0;
    bool zero = false;

    void mul(double f, double p = 1.0) {
        if (f == 0.0) {
            zero = true;
            return;
        }
        log_abs += p * std::log(std::abs(f));
    }

    void add_log(double l) { log_abs += l; }
};

VolumeResult finish(LogProd acc, VolumeMethod method, Region region) {
    VolumeResult r;
    r.method = method;
    r.region = region;
    r.preconditions_met = true;
    if (acc.zero) {
        r.value = 0.0;
        r.log_abs = -std::numeric_limits<double>::infinity();
    } else {
        r.log_abs = acc.log_abs;
        r.value = std::exp(acc.log_abs);
    }
    return r;
}

void require_negative_spectrum(const EigenStructure& es) {
    for (const EigenCluster& c : es.clusters) {
        if (c.lambda >= 0.0) {
            throw PreconditionViolated("volume: eigenvalue not in (-inf, 0)");
        }
    }
}

void require_negative_spectrum(const SpectrumVector& sv) {
    for (double lam : sv.lambdas) {
        if (lam >= 0.0) {
            throw PreconditionViolated("volume: eigenvalue not in (-inf, 0)");
        }
    }
}

SpectrumVector expand_spectrum(const EigenStructure& es) {
    SpectrumVector sv;
    for (const EigenCluster& c : es.clusters) {
        for (int k = 0; k < c.multiplicity; ++k) {
            sv.lambdas.push_back(c.lambda);
        }
    }
    return sv;
}

double last_beta(const EigenStructure& es, int cluster) {
    const auto& bi = es.beta[static_cast<std::size_t>(cluster)];
    const double b = bi.back();
    if (b == 0.0) {
        throw PreconditionViolated("volume: zero trailing coupling coefficient");
    }
    return b;
}

} // namespace

double pi_n(int n) {
    if (n < 1) {
        throw PreconditionViolated("pi_n: n must be >= 1");
    }
    // Gamma(n/2 + 1) by the half-integer recursion from Gamma(1/2) and
    // Gamma(1).
    double gamma = (n % 2 == 0) ? 1.0 : std::sqrt(M_PI);
    double s = (n % 2 == 0) ? 1.0 : 0.5;
    while (s < n / 2.0 + 1.0 - 0.25) {
        gamma *= s;
        s += 1.0;
    }
    return std::pow(M_PI, n / 2.0) / gamma;
}

namespace detail {

VolumeResult zonotope_jordan_distinct(const EigenStructure& es) {
    require_negative_spectrum(es);
    const int n = es.n();
    LogProd acc;
    acc.add_log(n * kLn2);
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    for (int i = 0; i < es.q(); ++i) {
        for (int j = i + 1; j < es.q(); ++j) {
            acc.mul(es.clusters[j].lambda - es.clusters[i].lambda);
            acc.mul(es.clusters[i].lambda + es.clusters[j].lambda, -1.0);
        }
    }
    for (int i = 0; i < es.q(); ++i) {
        acc.mul(last_beta(es, i));
        acc.mul(es.clusters[i].lambda, -1.0);
    }
    return finish(acc, VolumeMethod::Jordan, Region::Zonotope);
}

VolumeResult zonotope_jordan_single_block(const EigenStructure& es) {
    require_negative_spectrum(es);
    const int n = es.n();
    const double lam = es.clusters.front().lambda;
    LogProd acc;
    acc.add_log(n * kLn2);
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    acc.mul(last_beta(es, 0), n);
    acc.mul(lam, -static_cast<double>(n));
    acc.mul(2.0 * lam, -static_cast<double>(n) * (n - 1) / 2.0);
    return finish(acc, VolumeMethod::Jordan, Region::Zonotope);
}

VolumeResult zonotope_jordan_general(const EigenStructure& es) {
    require_negative_spectrum(es);
    const int n = es.n();
    LogProd acc;
    acc.add_log(n * kLn2);
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    for (int i = 0; i < es.q(); ++i) {
        for (int j = i + 1; j < es.q(); ++j) {
            const double p = static_cast<double>(es.clusters[i].multiplicity) *
                             es.clusters[j].multiplicity;
            acc.mul(es.clusters[j].lambda - es.clusters[i].lambda, p);
            acc.mul(es.clusters[i].lambda + es.clusters[j].lambda, -p);
        }
    }
    for (int i = 0; i < es.q(); ++i) {
        const double mi = es.clusters[i].multiplicity;
        const double lam = es.clusters[i].lambda;
        acc.mul(last_beta(es, i), mi);
        acc.mul(lam, -mi);
        acc.mul(2.0 * lam, -mi * (mi - 1.0) / 2.0);
    }
    return finish(acc, VolumeMethod::Jordan, Region::Zonotope);
}

VolumeResult ellipsoid_jordan_distinct(const EigenStructure& es) {
    require_negative_spectrum(es);
    LogProd acc;
    acc.mul(pi_n(es.n()));
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    for (int i = 0; i < es.q(); ++i) {
        for (int j = i + 1; j < es.q(); ++j) {
            acc.mul(es.clusters[j].lambda - es.clusters[i].lambda);
            acc.mul(es.clusters[i].lambda + es.clusters[j].lambda, -1.0);
        }
    }
    for (int i = 0; i < es.q(); ++i) {
        acc.mul(last_beta(es, i));
        acc.mul(2.0 * es.clusters[i].lambda, -0.5);
    }
    return finish(acc, VolumeMethod::Jordan, Region::Ellipsoid);
}

VolumeResult ellipsoid_jordan_single_block(const EigenStructure& es) {
    require_negative_spectrum(es);
    const int n = es.n();
    const double lam = es.clusters.front().lambda;
    LogProd acc;
    acc.mul(pi_n(n));
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    acc.mul(last_beta(es, 0), n);
    acc.mul(2.0 * lam, -static_cast<double>(n) * n / 2.0);
    return finish(acc, VolumeMethod::Jordan, Region::Ellipsoid);
}

VolumeResult ellipsoid_jordan_general(const EigenStructure& es) {
    require_negative_spectrum(es);
    LogProd acc;
    acc.mul(pi_n(es.n()));
    acc.log_abs += es.det_PJ_log.log_abs;
    if (es.det_PJ_log.sign == 0) {
        acc.zero = true;
    }
    for (int i = 0; i < es.q(); ++i) {
        for (int j = i + 1; j < es.q(); ++j) {
            const double p = static_cast<double>(es.clusters[i].multiplicity) *
                             es.clusters[j].multiplicity;
            acc.mul(es.clusters[j].lambda - es.clusters[i].lambda, p);
            acc.mul(es.clusters[i].lambda + es.clusters[j].lambda, -p);
        }
    }
    for (int i = 0; i < es.q(); ++i) {
        const double mi = es.clusters[i].multiplicity;
        acc.mul(last_beta(es, i), mi);
        acc.mul(2.0 * es.clusters[i].lambda, -mi * mi / 2.0);
    }
    return finish(acc, VolumeMethod::Jordan, Region::Ellipsoid);
}

} // namespace detail

VolumeResult zonotope_volume_jordan(const EigenStructure& es) {
    bool all_simple = true;
    for (const EigenCluster& c : es.clusters) {
        if (c.multiplicity != 1) {
            all_simple = false;
        }
    }
    if (all_simple) {
        return detail::zonotope_jordan_distinct(es);
    }
    if (es.q() == 1) {
        return detail::zonotope_jordan_single_block(es);
    }
    return detail::zonotope_jordan_general(es);
}

VolumeResult ellipsoid_volume_jordan(const EigenStructure& es) {
    bool all_simple = true;
    for (const EigenCluster& c : es.clusters) {
        if (c.multiplicity != 1) {
            all_simple = false;
        }
    }
    if (all_simple) {
        return detail::ellipsoid_jordan_distinct(es);
    }
    if (es.q() == 1) {
        return detail::ellipsoid_jordan_single_block(es);
    }
    return detail::ellipsoid_jordan_general(es);
}

VolumeResult zonotope_volume_ccf(const CcfData& ccf, const SpectrumVector& spectrum) {
    require_negative_spectrum(spectrum);
    if (ccf.det_Wc_log.sign == 0) {
        throw NotControllable("zonotope_volume_ccf: singular W_c");
    }
    const LogDet ln = l_n_log(spectrum);
    if (ln.sign == 0) {
        throw PreconditionViolated("zonotope_volume_ccf: L_n vanishes");
    }
    LogProd acc;
    acc.add_log(ccf.n() * kLn2);
    acc.add_log(ccf.det_Wc_log.log_abs);
    acc.add_log(-ln.log_abs);
    return finish(acc, VolumeMethod::Ccf, Region::Zonotope);
}

VolumeResult zonotope_volume_ccf(const CcfData& ccf, const EigenStructure& es) {
    return zonotope_volume_ccf(ccf, expand_spectrum(es));
}

VolumeResult ellipsoid_volume_ccf(const CcfData& ccf, const SpectrumVector& spectrum) {
    require_negative_spectrum(spectrum);
    if (ccf.det_Wc_log.sign == 0) {
        throw NotControllable("ellipsoid_volume_ccf: singular W_c");
    }
    const LogDet ln = l_n_log(spectrum);
    if (ln.sign == 0) {
        throw PreconditionViolated("ellipsoid_volume_ccf: L_n vanishes");
    }
    const double an = ccf.a.back();
    if (an <= 0.0) {
        throw PreconditionViolated("ellipsoid_volume_ccf: a_n must be positive");
    }
    LogProd acc;
    acc.mul(pi_n(ccf.n()));
    acc.mul(an, 0.5);
    acc.add_log(-0.5 * ccf.n() * kLn2);
    acc.add_log(ccf.det_Wc_log.log_abs);
    acc.add_log(-ln.log_abs);
    return finish(acc, VolumeMethod::Ccf, Region::Ellipsoid);
}

VolumeResult ellipsoid_volume_ccf(const CcfData& ccf, const EigenStructure& es) {
    return ellipsoid_volume_ccf(ccf, expand_spectrum(es));
}

VolumeResult zonotope_volume_hurwitz(const CcfData& ccf, const HurwitzData& hd) {
    if (ccf.det_Wc_log.sign == 0) {
        throw NotControllable("zonotope_volume_hurwitz: singular W_c");
    }
    const Stability st = stability_check(hd);
    if (st != Stability::Stable) {
        throw NotHurwitzStable(st == Stability::Indeterminate
                                   ? "zonotope_volume_hurwitz: indeterminate-stability"
                                   : "zonotope_volume_hurwitz: not Hurwitz stable");
    }
    LogProd acc;
    acc.add_log(ccf.n() * kLn2);
    acc.add_log(ccf.det_Wc_log.log_abs);
    acc.add_log(-hd.det_H_log.log_abs);
    return finish(acc, VolumeMethod::Hurwitz, Region::Zonotope);
}

VolumeResult ellipsoid_volume_hurwitz(const CcfData& ccf, const HurwitzData& hd) {
    if (ccf.det_Wc_log.sign == 0) {
        throw NotControllable("ellipsoid_volume_hurwitz: singular W_c");
    }
    const Stability st = stability_check(hd);
    if (st != Stability::Stable) {
        throw NotHurwitzStable(st == Stability::Indeterminate
                                   ? "ellipsoid_volume_hurwitz: indeterminate-stability"
                                   : "ellipsoid_volume_hurwitz: not Hurwitz stable");
    }
    const double an = hd.a.back();
    LogProd acc;
    acc.mul(pi_n(ccf.n()));
    acc.mul(an, 0.5);
    acc.add_log(-0.5 * ccf.n() * kLn2);
    acc.add_log(ccf.det_Wc_log.log_abs);
    acc.add_log(-hd.det_H_log.log_abs);
    return finish(acc, VolumeMethod::Hurwitz, Region::Ellipsoid);
}

double max_pairwise_rel_discrepancy(const std::vector<VolumeResult>& results) {
    double worst = 0.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (std::size_t j = i + 1; j < results.size(); ++j) {
            if (!results[i].preconditions_met || !results[j].preconditions_met) {
                continue;
            }
            const double d =
                1.0 - std::exp(-std::abs(results[i].log_abs - results[j].log_abs));
            worst = std::max(worst, d);
        }
    }
    return worst;
}

VolumeReport full_report(const LctSystem& sys, const ReportOptions& opts) {
    using clock = std::chrono::steady_clock;
    VolumeReport report;
    report.n = sys.n();
    report.region = opts.region;

    const SystemDiagnostics diag = diagnose(sys, opts.tol);

    auto skip_all = [&](const std::string& reason) {
        for (VolumeMethod m :
             {VolumeMethod::Jordan, VolumeMethod::Ccf, VolumeMethod::Hurwitz}) {
            VolumeResult r;
            r.method = m;
            r.region = opts.region;
            r.preconditions_met = false;
            r.notes = reason;
            report.results.push_back(r);
        }
    };

    if (!diag.controllable) {
        skip_all("NotControllable: rank P_n = " + std::to_string(diag.rank_Pn));
    } else if (diag.spectrum_class == SpectrumClass::UnstableOrMarginal) {
        skip_all("NotHurwitzStable: spectrum " + to_string(diag.spectrum_class));
    } else if (diag.spectrum_class == SpectrumClass::ComplexStable) {
        skip_all("ComplexSpectrum: real-spectrum formulas not applicable");
    } else {
        CcfData ccf;
        bool have_ccf = false;
        std::string ccf_error;
        try {
            ccf = to_ccf(sys);
            have_ccf = true;
        } catch (const Error& e) {
            ccf_error = e.what();
        }
        if (!have_ccf) {
            skip_all(ccf_error);
        } else {
            auto timed = [&](VolumeMethod m, auto&& fn) {
                VolumeResult r;
                const auto t0 = clock::now();
                try {
                    r = fn();
                } catch (const Error& e) {
                    r.method = m;
                    r.region = opts.region;
                    r.preconditions_met = false;
                    r.notes = e.what();
                }
                r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
                report.results.push_back(r);
            };

            timed(VolumeMethod::Jordan, [&] {
                const EigenStructure es = eigen_structure_ccf(ccf, opts.tol);
                VolumeResult r = opts.region == Region::Zonotope
                                     ? zonotope_volume_jordan(es)
                                     : ellipsoid_volume_jordan(es);
                // Map the canonical-pair volume back through the state
                // transformation.
                r.log_abs += ccf.det_Wc_log.log_abs;
                r.value = std::exp(r.log_abs);
                return r;
            });
            timed(VolumeMethod::Ccf, [&] {
                const std::vector<Complex> spec = eigenvalues(sys.A);
                SpectrumVector sv;
                const auto clusters = cluster_eigenvalues(spec, opts.tol, true);
                for (const EigenCluster& c : clusters) {
                    for (int k = 0; k < c.multiplicity; ++k) {
                        sv.lambdas.push_back(c.lambda);
                    }
                }
                return opts.region == Region::Zonotope
                           ? zonotope_volume_ccf(ccf, sv)
                           : ellipsoid_volume_ccf(ccf, sv);
            });
            timed(VolumeMethod::Hurwitz, [&] {
                std::vector<double> coeffs{1.0};
                coeffs.insert(coeffs.end(), ccf.a.begin(), ccf.a.end());
                const HurwitzData hd = hurwitz_matrix(Polynomial(coeffs));
                return opts.region == Region::Zonotope
                           ? zonotope_volume_hurwitz(ccf, hd)
                           : ellipsoid_volume_hurwitz(ccf, hd);
            });
        }
    }

    if (opts.with_oracle) {
        try {
            if (opts.region == Region::Zonotope) {
                const double T = opts.oracle_T > 0.0
                                     ? opts.oracle_T
                                     : default_oracle_horizon(diag.spectrum);
                const ZonotopeApprox za = build_generators(sys, T, opts.oracle_m);
                report.oracle_value = zonotope_volume_discretized(za);
                report.oracle_notes = "discretized zonotope, T=" + std::to_string(T) +
                                      ", m=" + std::to_string(opts.oracle_m);
            } else {
                report.oracle_value = ellipsoid_volume_gramian(sys);
                report.oracle_notes = "Grammian ellipsoid";
            }
        } catch (const Error& e) {
            report.oracle_notes = std::string("oracle skipped: ") + e.what();
        }
    }

    report.max_rel_discrepancy = max_pairwise_rel_discrepancy(report.results);
    return report;
}

} // namespace capvol
