#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/srg_theory.hpp"

namespace qeg {

/// One feasible parameter tuple. Existence of an actual graph is a separate
/// question the scan never answers: every row carries existence "unknown".
struct ScanRow {
    SrgParams params;
    SrgSpectrum spectrum;
    double qec = 0.0;
    QeClass qe_class = QeClass::no;
    bool conference = false;
};

/// Every tuple passing the necessary feasibility conditions with mu >= 1,
/// for 4 <= n <= n_max, sorted by (n, k, lambda, mu). mu is derived from
/// (n, k, lambda) via the counting relation (n-k-1) mu = (k-lambda-1) k.
/// Guard rail: 4 <= n_max <= 100000.
std::vector<ScanRow> enumerate_feasible(std::int64_t n_max);
std::vector<ScanRow> enumerate_feasible(std::int64_t n_max, unsigned thread_count);

struct NamedRow {
    std::string name;
    SrgParams params;
    std::int64_t expected_qec = 0;
    double computed_qec = 0.0;
    bool pass = false;
};

/// The classical named parameter sets (Petersen .. Higman-Sims) with their
/// published QE constants recomputed from (n, k, lambda, mu). pass means the
/// recomputed value equals the published integer exactly.
std::vector<NamedRow> named_table();

}  // namespace qeg
