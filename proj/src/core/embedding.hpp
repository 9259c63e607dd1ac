#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "core/graph.hpp"
#include "core/sym_matrix.hpp"

namespace qeg {

/// Points psi(0..n-1) in R^dim with squared Euclidean distance equal to the
/// graph distance, up to max_deviation.
struct Embedding {
    std::int64_t n = 0;
    std::int64_t dim = 0;
    std::vector<double> points;  // row-major, n rows of dim coordinates
    double max_deviation = 0.0;
};

/// Witness that no Euclidean realization exists: the centered Gram form has
/// an eigenvalue this far below zero.
struct NotQEClass {
    double min_eigenvalue = 0.0;
};

/// Double-centered Gram form M = -1/2 P D P with P = I - J/n; M 1 = 0.
SymMatrix gram_matrix(const DistanceMatrix& d);

/// Classical realization: eigendecompose the Gram form, reject if it has a
/// meaningfully negative eigenvalue, otherwise take V sqrt(Lambda) on the
/// positive part. The returned embedding is verified against d.
std::variant<Embedding, NotQEClass> construct_embedding(const DistanceMatrix& d);

/// Recomputes every pairwise squared distance and returns the largest
/// absolute deviation from d.
double verify_embedding(const Embedding& e, const DistanceMatrix& d);

}  // namespace qeg
