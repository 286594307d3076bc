#include "capvol/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "capvol/random_systems.hpp"
#include "capvol/volumes.hpp"

namespace capvol {

namespace {

using clock_type = std::chrono::steady_clock;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    if (v.size() % 2 == 1) {
        return v[k];
    }
    return 0.5 * (v[k - 1] + v[k]);
}

} // namespace

std::vector<BenchRecord> run_bench(const std::vector<int>& n_list, int trials,
                                   std::uint64_t seed) {
    if (trials < 1) {
        throw PreconditionViolated("run_bench: trials must be >= 1");
    }
    std::vector<BenchRecord> records;
    for (int n : n_list) {
        if (n < 1 || n > 50) {
            throw PreconditionViolated("run_bench: n must be in 1..50");
        }
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
        // Spectrum kept in a narrow band so Hurwitz-matrix entries stay
        // inside double range even at n = 50; the volume itself is
        // handled in log magnitude.
        const double lo = n <= 8 ? -4.0 : -1.5;
        const double min_gap = std::min(0.05, 0.5 / n);
        const std::vector<double> spectrum =
            random_stable_spectrum(n, rng, lo, -0.1, min_gap);
        const LctSystem sys = companion_system(spectrum);
        const CcfData ccf = ccf_of_companion(sys);

        auto time_route = [&](const char* name, auto&& fn) {
            VolumeResult result = fn(); // warm-up, discarded timing
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(trials));
            for (int t = 0; t < trials; ++t) {
                const auto t0 = clock_type::now();
                result = fn();
                times.push_back(
                    std::chrono::duration<double>(clock_type::now() - t0).count());
            }
            BenchRecord rec;
            rec.n = n;
            rec.method = name;
            rec.median_seconds = median(std::move(times));
            rec.iterations = trials;
            rec.volume_value = result.value;
            rec.volume_log_abs = result.log_abs;
            records.push_back(std::move(rec));
        };

        // Companion eigensolves at large n scatter clustered real roots
        // into complex-noise pairs; the bench coerces to real parts so
        // every route still reports a row. Cross-method agreement is
        // only meaningful at small n.
        const bool require_real = n <= 8;
        const double tol_cluster = 0.4 * min_gap;
        // At large n the eigensolve noise can push coerced real parts
        // across zero; clamp so the eigenvalue routes still report a
        // finite (non-contractual) value column.
        auto coerce = [&](std::vector<EigenCluster> cs) {
            for (EigenCluster& c : cs) {
                c.lambda = std::min(c.lambda, -1e-6);
            }
            return cs;
        };

        time_route("ccf", [&] {
            const auto clusters =
                coerce(cluster_eigenvalues(eigenvalues(sys.A), tol_cluster, require_real));
            SpectrumVector sv;
            for (const EigenCluster& c : clusters) {
                for (int k = 0; k < c.multiplicity; ++k) {
                    sv.lambdas.push_back(c.lambda);
                }
            }
            return zonotope_volume_ccf(ccf, sv);
        });
        time_route("hurwitz", [&] {
            // Coefficients come straight off the CCF companion row; the
            // trace recursion loses them beyond n ~ 30.
            std::vector<double> coeffs{1.0};
            coeffs.insert(coeffs.end(), ccf.a.begin(), ccf.a.end());
            const HurwitzData hd = hurwitz_matrix(Polynomial(std::move(coeffs)));
            return zonotope_volume_hurwitz(ccf, hd);
        });
        time_route("jordan", [&] {
            auto clusters =
                coerce(cluster_eigenvalues(eigenvalues(ccf.A_c), tol_cluster, require_real));
            if (!require_real) {
                // Keep every eigenvalue a simple cluster with a minimal
                // separation; coerced conjugate pairs would otherwise
                // produce exactly repeated roots and a singular chain.
                std::vector<EigenCluster> simple;
                for (const EigenCluster& c : clusters) {
                    for (int k = 0; k < c.multiplicity; ++k) {
                        simple.push_back({c.lambda, 1});
                    }
                }
                std::sort(simple.begin(), simple.end(),
                          [](const EigenCluster& x, const EigenCluster& y) {
                              return x.lambda < y.lambda;
                          });
                for (int i = static_cast<int>(simple.size()) - 2; i >= 0; --i) {
                    auto& cur = simple[static_cast<std::size_t>(i)];
                    const auto& next = simple[static_cast<std::size_t>(i) + 1];
                    if (next.lambda - cur.lambda < 1e-6) {
                        cur.lambda = next.lambda - 1e-6;
                    }
                }
                clusters = std::move(simple);
            }
            const EigenStructure es = eigen_structure_from_clusters(ccf, clusters);
            return zonotope_volume_jordan(es);
        });
    }
    std::sort(records.begin(), records.end(), [](const BenchRecord& x, const BenchRecord& y) {
        if (x.n != y.n) {
            return x.n < y.n;
        }
        return x.method < y.method;
    });
    return records;
}

std::vector<LemmaRow> run_lemma_sweep(int n, int count, std::uint64_t seed) {
    if (n < 1 || n > 10) {
        throw PreconditionViolated("run_lemma_sweep: n must be in 1..10");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> dist(-5.0, -0.1);
    std::vector<LemmaRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        SpectrumVector sv;
        for (int k = 0; k < n; ++k) {
            sv.lambdas.push_back(dist(rng));
        }
        const Lemma1Result r = lemma1_check(sv);
        rows.push_back({r.det_H, r.l_n, r.rel_gap_of_abs, r.sign_ratio});
    }
    return rows;
}

} // namespace capvol
