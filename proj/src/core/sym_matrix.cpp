#include "core/sym_matrix.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/graph.hpp"

namespace qeg {

SymMatrix::SymMatrix(std::int64_t n) : n_(n) {
    if (n < 1) {
        throw InputError("matrix size must be >= 1, got " + std::to_string(n));
    }
    a_.assign(static_cast<std::size_t>(n * n), 0.0);
}

SymMatrix SymMatrix::identity(std::int64_t n) {
    SymMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i) {
        m.a_[i * n + i] = 1.0;
    }
    return m;
}

SymMatrix SymMatrix::all_one(std::int64_t n) {
    SymMatrix m(n);
    m.a_.assign(m.a_.size(), 1.0);
    return m;
}

SymMatrix SymMatrix::from_distance(const DistanceMatrix& d) {
    SymMatrix m(d.n);
    for (std::size_t i = 0; i < m.a_.size(); ++i) {
        m.a_[i] = static_cast<double>(d.d[i]);
    }
    return m;
}

SymMatrix SymMatrix::from_rows(std::int64_t n, const std::vector<double>& rows) {
    if (static_cast<std::int64_t>(rows.size()) != n * n) {
        throw InputError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(rows.size()));
    }
    SymMatrix m(n);
    m.a_ = rows;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) != m.at(j, i)) {
                throw InputError("matrix not symmetric at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            }
        }
    }
    return m;
}

void SymMatrix::set(std::int64_t i, std::int64_t j, double value) {
    a_[i * n_ + j] = value;
    a_[j * n_ + i] = value;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const double v : a_) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

double SymMatrix::max_abs() const {
    double best = 0.0;
    for (const double v : a_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

}  // namespace qeg
