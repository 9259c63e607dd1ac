#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/spectra.hpp"
#include "core/sym_matrix.hpp"
#include "core/tolerances.hpp"

using namespace qeg;

namespace {

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (std::int64_t u = 0; u < g.order(); ++u) {
        for (std::int64_t v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) {
                m.set(u, v, 1.0);
            }
        }
    }
    return m;
}

SymMatrix random_symmetric(std::mt19937& rng, std::int64_t n) {
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    SymMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i; j < n; ++j) {
            m.set(i, j, value(rng));
        }
    }
    return m;
}

bool multisets_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("identity matrix has unit spectrum") {
    const auto dec = jacobi_eigen(SymMatrix::identity(3));
    REQUIRE(dec.values.size() == 3);
    for (const double v : dec.values) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("C4 adjacency spectrum matches the cycle eigenvalue formula") {
    // Oracle: eigenvalues of the n-cycle adjacency matrix are 2 cos(2 pi j / n).
    std::vector<double> expected;
    for (int j = 0; j < 4; ++j) {
        expected.push_back(2.0 * std::cos(2.0 * M_PI * j / 4.0));
    }
    std::sort(expected.rbegin(), expected.rend());  // 2, 0, 0, -2

    const auto dec = jacobi_eigen(adjacency_matrix(cycle(4)));
    CHECK(multisets_close(dec.values, expected, 1e-12));
    CHECK(dec.values.front() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(dec.values.back() == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("Petersen adjacency spectrum is 3, 1 (x5), -2 (x4)") {
    std::vector<double> expected{3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
    const auto dec = jacobi_eigen(adjacency_matrix(petersen()));
    CHECK(multisets_close(dec.values, expected, 1e-10));
}

TEST_CASE("eigen decompositions satisfy their accuracy contracts") {
    std::mt19937 rng(23);
    for (const std::int64_t n : {1, 2, 3, 5, 8, 12, 20}) {
        const auto m = random_symmetric(rng, n);
        const auto dec = jacobi_eigen(m);
        REQUIRE(static_cast<std::int64_t>(dec.values.size()) == n);

        // residual ||M v - lambda v||_inf per pair
        for (std::int64_t j = 0; j < n; ++j) {
            for (std::int64_t i = 0; i < n; ++i) {
                double mv = 0.0;
                for (std::int64_t t = 0; t < n; ++t) {
                    mv += m.at(i, t) * dec.vector_entry(t, j);
                }
                CHECK(std::abs(mv - dec.values[j] * dec.vector_entry(i, j)) <=
                      kTol.tol_residual);
            }
        }

        // pairwise orthonormality
        for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = a; b < n; ++b) {
                double dot = 0.0;
                for (std::int64_t i = 0; i < n; ++i) {
                    dot += dec.vector_entry(i, a) * dec.vector_entry(i, b);
                }
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= kTol.tol_ortho);
            }
        }

        // descending order
        CHECK(std::is_sorted(dec.values.rbegin(), dec.values.rend()));

        // trace preservation
        double trace = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            trace += m.at(i, i);
        }
        const double sum = std::accumulate(dec.values.begin(), dec.values.end(), 0.0);
        CHECK(std::abs(sum - trace) <= 1e-9 * static_cast<double>(n) *
                                           std::max(1.0, m.max_abs()));

        // reconstruction ||V diag V^T - M||_inf
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                double rebuilt = 0.0;
                for (std::int64_t t = 0; t < n; ++t) {
                    rebuilt += dec.vector_entry(i, t) * dec.values[t] * dec.vector_entry(j, t);
                }
                CHECK(std::abs(rebuilt - m.at(i, j)) <= 1e-8 * std::max(1.0, m.max_abs()));
            }
        }
    }
}

TEST_CASE("restricted spectrum of the all-one matrix vanishes") {
    const auto restricted = restricted_spectrum(SymMatrix::all_one(4));
    REQUIRE(restricted.values.size() == 3);
    for (const double v : restricted.values) {
        CHECK(std::abs(v) <= 1e-12);
    }
}

TEST_CASE("restricted spectrum of the complete-graph distance matrix is all -1") {
    for (const std::int64_t n : {2, 3, 6, 9}) {
        const auto dm = distance_matrix(complete(n));
        const auto restricted = restricted_spectrum(SymMatrix::from_distance(dm));
        REQUIRE(static_cast<std::int64_t>(restricted.values.size()) == n - 1);
        for (const double v : restricted.values) {
            CHECK(v == doctest::Approx(-1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("restricted spectrum of the C5 distance matrix peaks at (-3+sqrt 5)/2") {
    const auto dm = distance_matrix(cycle(5));
    const auto restricted = restricted_spectrum(SymMatrix::from_distance(dm));
    const double expected = (std::sqrt(5.0) - 3.0) / 2.0;  // ~ -0.3819660113
    CHECK(restricted.values.front() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("restricted maximizer is unit, orthogonal to ones, and attains the value") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_symmetric(rng, 6 + trial);
        const auto restricted = restricted_spectrum(m);
        const auto& f = restricted.maximizer;
        const auto n = m.size();

        double norm2 = 0.0, ones = 0.0;
        for (const double x : f) {
            norm2 += x * x;
            ones += x;
        }
        CHECK(std::abs(norm2 - 1.0) <= 1e-12);
        CHECK(std::abs(ones) <= 1e-9);

        double quad = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                quad += f[i] * m.at(i, j) * f[j];
            }
        }
        CHECK(std::abs(quad - restricted.values.front()) <= 1e-8);
    }
}

TEST_CASE("full spectrum = restricted spectrum + Rayleigh quotient of ones when 1 is an eigenvector") {
    // Transmission regular example: distance matrix of C6.
    const auto dm = distance_matrix(cycle(6));
    const auto m = SymMatrix::from_distance(dm);
    const auto full = jacobi_eigen(m);
    auto restricted = restricted_spectrum(m).values;

    double rayleigh = 0.0;  // <1, m 1> / n
    for (std::int64_t i = 0; i < m.size(); ++i) {
        for (std::int64_t j = 0; j < m.size(); ++j) {
            rayleigh += m.at(i, j);
        }
    }
    rayleigh /= static_cast<double>(m.size());

    restricted.push_back(rayleigh);
    CHECK(multisets_close(full.values, restricted, 1e-9));
}

TEST_CASE("restricted spectrum needs at least two vertices") {
    CHECK_THROWS_AS(restricted_spectrum(SymMatrix::identity(1)), InputError);
}

TEST_CASE("from_rows rejects asymmetry") {
    CHECK_THROWS_AS(SymMatrix::from_rows(2, {0.0, 1.0, 2.0, 0.0}), InputError);
    CHECK_THROWS_AS(SymMatrix::from_rows(2, {0.0, 1.0}), InputError);
    const auto m = SymMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0});
    CHECK(m.at(0, 1) == 1.0);
}
