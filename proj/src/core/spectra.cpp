#include "core/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/errors.hpp"
#include "core/tolerances.hpp"

namespace qeg {

namespace {

double offdiag_norm(const std::vector<double>& a, std::int64_t n) {
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const double v = a[i * n + j];
            sum += 2.0 * v * v;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& m) {
    const std::int64_t n = m.size();
    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
    }

    const double target = kTol.jacobi_offdiag_rel * m.frobenius_norm();
    bool converged = offdiag_norm(a, n) <= target;

    for (int sweep = 0; sweep < kTol.jacobi_max_sweeps && !converged; ++sweep) {
        for (std::int64_t p = 0; p < n - 1; ++p) {
            for (std::int64_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) {
                    continue;
                }
                const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                // smaller root of t^2 + 2 tau t - 1 = 0, stable form
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // A <- G^T A G with G the rotation in the (p, q) plane
                for (std::int64_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::int64_t j = 0; j < n; ++j) {
                    const double apj = a[p * n + j];
                    const double aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::int64_t i = 0; i < n; ++i) {
                    const double vip = v[i * n + p];
                    const double viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
        converged = offdiag_norm(a, n) <= target;
    }
    if (!converged) {
        throw NumericalError("jacobi sweeps exhausted, off-diagonal residual " +
                             std::to_string(offdiag_norm(a, n)));
    }

    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int64_t x, std::int64_t y) {
        return a[x * n + x] > a[y * n + y];
    });

    EigenDecomposition dec;
    dec.n = n;
    dec.values.resize(static_cast<std::size_t>(n));
    dec.vectors.resize(static_cast<std::size_t>(n * n));
    for (std::int64_t j = 0; j < n; ++j) {
        dec.values[j] = a[order[j] * n + order[j]];
        for (std::int64_t i = 0; i < n; ++i) {
            dec.vectors[i * n + j] = v[i * n + order[j]];
        }
    }
    return dec;
}

RestrictedSpectrum restricted_spectrum(const SymMatrix& m) {
    const std::int64_t n = m.size();
    if (n < 2) {
        throw InputError("restricted spectrum needs n >= 2");
    }

    // Householder reflector H = I - beta w w^T with H e_1 = 1/sqrt(n);
    // its trailing n-1 columns are an orthonormal basis of the complement
    // of the all-ones direction.
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> w(static_cast<std::size_t>(n), inv_sqrt_n);
    w[0] -= 1.0;
    const double wnorm2 = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
    const double beta = 2.0 / wnorm2;

    // K = H M H via two rank-1 updates: K = M - beta w (w^T M) - beta (M w) w^T
    //                                        + beta^2 (w^T M w) w w^T
    const auto& a = m.data();
    std::vector<double> mw(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            acc += a[i * n + j] * w[j];
        }
        mw[i] = acc;
    }
    const double wmw = std::inner_product(w.begin(), w.end(), mw.begin(), 0.0);

    SymMatrix b(n - 1);
    for (std::int64_t i = 1; i < n; ++i) {
        for (std::int64_t j = i; j < n; ++j) {
            const double kij = a[i * n + j] - beta * w[i] * mw[j] - beta * mw[i] * w[j] +
                               beta * beta * wmw * w[i] * w[j];
            b.set(i - 1, j - 1, kij);
        }
    }

    const auto dec = jacobi_eigen(b);

    RestrictedSpectrum out;
    out.values = dec.values;

    // Map the top eigenvector back: f = H [0; y] = z - beta w (w . z).
    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t i = 1; i < n; ++i) {
        z[i] = dec.vector_entry(i - 1, 0);
    }
    const double wz = std::inner_product(w.begin(), w.end(), z.begin(), 0.0);
    out.maximizer.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        out.maximizer[i] = z[i] - beta * w[i] * wz;
    }
    return out;
}

}  // namespace qeg
