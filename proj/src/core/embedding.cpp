#include "core/embedding.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/spectra.hpp"
#include "core/tolerances.hpp"

namespace qeg {

SymMatrix gram_matrix(const DistanceMatrix& d) {
    const std::int64_t n = d.n;
    std::vector<double> row_mean(static_cast<std::size_t>(n), 0.0);
    double grand_mean = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            acc += d.at(i, j);
        }
        row_mean[i] = acc / static_cast<double>(n);
        grand_mean += acc;
    }
    grand_mean /= static_cast<double>(n * n);

    SymMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i; j < n; ++j) {
            m.set(i, j, -0.5 * (d.at(i, j) - row_mean[i] - row_mean[j] + grand_mean));
        }
    }
    return m;
}

std::variant<Embedding, NotQEClass> construct_embedding(const DistanceMatrix& d) {
    const auto m = gram_matrix(d);
    const auto dec = jacobi_eigen(m);

    const double psd_floor = -kTol.embed_psd_rel * m.max_abs();
    const double min_eigenvalue = dec.values.back();
    if (min_eigenvalue < psd_floor) {
        return NotQEClass{min_eigenvalue};
    }

    Embedding e;
    e.n = d.n;
    e.dim = 0;
    for (const double v : dec.values) {
        if (v > kTol.embed_rank) {
            ++e.dim;
        }
    }
    // Columns already come ordered by descending eigenvalue; negatives within
    // the floor are treated as zero and carry no coordinate.
    e.points.assign(static_cast<std::size_t>(e.n * e.dim), 0.0);
    for (std::int64_t c = 0; c < e.dim; ++c) {
        const double root = std::sqrt(dec.values[c]);
        for (std::int64_t i = 0; i < e.n; ++i) {
            e.points[i * e.dim + c] = dec.vector_entry(i, c) * root;
        }
    }
    e.max_deviation = verify_embedding(e, d);
    if (e.max_deviation > kTol.embed_max_dev) {
        throw NumericalError("embedding verification failed: max deviation " +
                             std::to_string(e.max_deviation));
    }
    return e;
}

double verify_embedding(const Embedding& e, const DistanceMatrix& d) {
    if (e.n != d.n) {
        throw InputError("embedding has " + std::to_string(e.n) + " points but distance matrix has " +
                         std::to_string(d.n));
    }
    double worst = 0.0;
    for (std::int64_t x = 0; x < e.n; ++x) {
        for (std::int64_t y = x + 1; y < e.n; ++y) {
            double ssq = 0.0;
            for (std::int64_t c = 0; c < e.dim; ++c) {
                const double diff = e.points[x * e.dim + c] - e.points[y * e.dim + c];
                ssq += diff * diff;
            }
            worst = std::max(worst, std::abs(ssq - static_cast<double>(d.at(x, y))));
        }
    }
    return worst;
}

}  // namespace qeg
