#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capvol/hurwitz.hpp"

namespace capvol {

struct BenchRecord {
    int n = 0;
    std::string method;
    double median_seconds = 0.0;
    int iterations = 0;
    double volume_value = 0.0;
    double volume_log_abs = 0.0;
};

/// Times the three zonotope routes end-to-end on seeded random stable
/// controllable systems (companion form, so W_c = I exactly). The
/// Jordan and CCF routes include the eigensolve; the Hurwitz route runs
/// from the trace-recursion characteristic polynomial and never touches
/// eigenvalues. One warm-up iteration is discarded; the median of
/// `trials` timed iterations is reported. Records are sorted by
/// (n, method).
std::vector<BenchRecord> run_bench(const std::vector<int>& n_list, int trials,
                                   std::uint64_t seed);

struct LemmaRow {
    double det_H = 0.0;
    double l_n = 0.0;
    double rel_gap = 0.0;
    int sign_ratio = 0;
};

/// Seeded sweep of the |det H| = |L_n| identity over random real
/// spectra of dimension n.
std::vector<LemmaRow> run_lemma_sweep(int n, int count, std::uint64_t seed);

} // namespace capvol
