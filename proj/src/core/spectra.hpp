#pragma once

#include <cstdint>
#include <vector>

#include "core/sym_matrix.hpp"

namespace qeg {

/// Full spectral decomposition of a symmetric matrix.
struct EigenDecomposition {
    std::int64_t n = 0;
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // row-major n x n; column j pairs with values[j]

    double vector_entry(std::int64_t i, std::int64_t j) const { return vectors[i * n + j]; }
};

/// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius norm
/// drops below 1e-12 * ||m||_F (at most 100 sweeps). Eigenvalues are sorted
/// descending; ties keep the rotation output order. Throws NumericalError
/// if the sweep budget is exhausted.
EigenDecomposition jacobi_eigen(const SymMatrix& m);

/// Spectrum of m restricted to the orthogonal complement of the all-ones
/// vector: eigenvalues of Q^T m Q where Q holds the n-1 trailing columns of
/// the Householder reflector sending e_1 to 1/sqrt(n).
struct RestrictedSpectrum {
    std::vector<double> values;     // n-1 values, descending
    std::vector<double> maximizer;  // unit vector orthogonal to 1 attaining values[0]
};

RestrictedSpectrum restricted_spectrum(const SymMatrix& m);

}  // namespace qeg
