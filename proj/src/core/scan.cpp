#include "core/scan.hpp"

#include <atomic>
#include <thread>

#include "core/errors.hpp"

namespace qeg {

namespace {

void scan_single_n(std::int64_t n, std::vector<ScanRow>& out) {
    for (std::int64_t k = 2; k <= n - 2; ++k) {
        const std::int64_t denom = n - k - 1;
        // (k - lambda - 1) k drops by k as lambda steps up; track the
        // remainder incrementally so the hot loop stays division-free.
        std::int64_t numer = (k - 1) * k;
        std::int64_t rem = numer % denom;
        const std::int64_t step = k % denom;
        for (std::int64_t lambda = 0; lambda <= k - 2; ++lambda) {
            if (rem == 0) {
                const std::int64_t mu = numer / denom;
                if (mu >= 1 && mu <= k) {
                    const SrgParams p{n, k, lambda, mu};
                    const auto rep = validate_params(p);
                    if (rep.feasible) {
                        ScanRow row;
                        row.params = p;
                        row.spectrum = adjacency_eigenvalues(p);
                        row.qec = -row.spectrum.s - 2.0;
                        row.qe_class = classify_qe(p);
                        row.conference = rep.is_conference;
                        out.push_back(row);
                    }
                }
            }
            numer -= k;
            rem -= step;
            if (rem < 0) {
                rem += denom;
            }
        }
    }
}

}  // namespace

std::vector<ScanRow> enumerate_feasible(std::int64_t n_max, unsigned thread_count) {
    if (n_max < 4 || n_max > 100000) {
        throw InputError("scan bound must be between 4 and 100000, got " +
                         std::to_string(n_max));
    }
    if (thread_count < 1) {
        thread_count = 1;
    }

    std::vector<std::vector<ScanRow>> per_n(static_cast<std::size_t>(n_max + 1));
    std::atomic<std::int64_t> next{4};
    const auto worker = [&] {
        for (;;) {
            const std::int64_t n = next.fetch_add(1);
            if (n > n_max) {
                return;
            }
            scan_single_n(n, per_n[static_cast<std::size_t>(n)]);
        }
    };

    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // Merge in n order: output is deterministic regardless of scheduling.
    std::vector<ScanRow> rows;
    for (std::int64_t n = 4; n <= n_max; ++n) {
        auto& chunk = per_n[static_cast<std::size_t>(n)];
        rows.insert(rows.end(), chunk.begin(), chunk.end());
    }
    return rows;
}

std::vector<ScanRow> enumerate_feasible(std::int64_t n_max) {
    const unsigned hw = std::thread::hardware_concurrency();
    return enumerate_feasible(n_max, hw == 0 ? 1 : hw);
}

std::vector<NamedRow> named_table() {
    struct Entry {
        const char* name;
        SrgParams params;
        std::int64_t qec;
    };
    static const Entry kEntries[] = {
        {"Petersen", {10, 3, 0, 1}, 0},
        {"Clebsch", {16, 5, 0, 2}, 1},
        {"Shrikhande", {16, 6, 2, 2}, 0},
        {"Schlafli", {27, 16, 10, 8}, 0},
        {"Changs", {28, 12, 6, 4}, 0},
        {"Hoffman-Singleton", {50, 7, 0, 1}, 1},
        {"Sims-Gewirtz", {56, 10, 0, 2}, 2},
        {"Brouwer-Haemers", {81, 20, 1, 6}, 5},
        {"Higman-Sims", {100, 22, 0, 6}, 6},
    };

    std::vector<NamedRow> rows;
    rows.reserve(std::size(kEntries));
    for (const auto& entry : kEntries) {
        NamedRow row;
        row.name = entry.name;
        row.params = entry.params;
        row.expected_qec = entry.qec;
        row.computed_qec = qec_closed_form(entry.params).qec;
        row.pass = row.computed_qec == static_cast<double>(entry.qec);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qeg
