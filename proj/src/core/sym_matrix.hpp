#pragma once

#include <cstdint>
#include <vector>

namespace qeg {

struct DistanceMatrix;

/// Dense symmetric real matrix. set() writes both mirror entries, so
/// a(i,j) == a(j,i) holds exactly by construction.
class SymMatrix {
public:
    explicit SymMatrix(std::int64_t n);

    static SymMatrix identity(std::int64_t n);
    static SymMatrix all_one(std::int64_t n);
    static SymMatrix from_distance(const DistanceMatrix& d);

    /// Validates exact symmetry of a row-major n x n matrix.
    static SymMatrix from_rows(std::int64_t n, const std::vector<double>& rows);

    std::int64_t size() const { return n_; }
    double at(std::int64_t i, std::int64_t j) const { return a_[i * n_ + j]; }
    void set(std::int64_t i, std::int64_t j, double value);

    double frobenius_norm() const;
    double max_abs() const;

    const std::vector<double>& data() const { return a_; }

private:
    std::int64_t n_ = 0;
    std::vector<double> a_;
};

}  // namespace qeg
