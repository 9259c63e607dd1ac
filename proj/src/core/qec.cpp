#include "core/qec.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/spectra.hpp"
#include "core/sym_matrix.hpp"
#include "core/tolerances.hpp"

namespace qeg {

TransmissionRegularity is_transmission_regular(const Graph& g) {
    const auto dm = distance_matrix(g);
    const std::int64_t expected = dm.row_sum(0);
    for (std::int64_t x = 1; x < dm.n; ++x) {
        if (dm.row_sum(x) != expected) {
            return {false, 0};
        }
    }
    return {true, expected};
}

namespace {

QeClass classify_band(double qec) {
    if (std::abs(qec) <= kTol.qe_class_band) {
        return QeClass::boundary;
    }
    return qec < 0.0 ? QeClass::yes : QeClass::no;
}

}  // namespace

NumericQec qec_numeric_detailed(const Graph& g) {
    if (g.order() < 2) {
        throw InputError("qec needs at least two vertices");
    }
    const auto dm = distance_matrix(g);
    const auto m = SymMatrix::from_distance(dm);

    auto full = jacobi_eigen(m);
    auto restricted = restricted_spectrum(m);

    NumericQec out;
    out.report.qec = restricted.values.front();
    out.report.delta1 = full.values[0];
    out.report.delta2 = full.values[1];
    out.report.qe_class = classify_band(out.report.qec);
    out.report.method = Method::numeric;
    out.distance_spectrum = std::move(full.values);
    out.maximizer = std::move(restricted.maximizer);

    // delta2 <= qec < delta1 holds for every connected graph; a violation
    // beyond tolerance means the eigensolver misbehaved.
    if (out.report.qec < out.report.delta2 - kTol.qe_class_band ||
        out.report.qec >= out.report.delta1 + kTol.qe_class_band) {
        throw NumericalError("restricted spectrum violates delta2 <= qec < delta1: qec=" +
                             std::to_string(out.report.qec) + " delta1=" +
                             std::to_string(out.report.delta1) + " delta2=" +
                             std::to_string(out.report.delta2));
    }
    return out;
}

QecReport qec_numeric(const Graph& g) {
    return qec_numeric_detailed(g).report;
}

namespace {

struct Cluster {
    double value = 0.0;
    std::int64_t count = 0;
};

// Splits a descending eigenvalue list into clusters separated by gaps
// larger than the clustering tolerance.
std::vector<Cluster> cluster_spectrum(const std::vector<double>& values) {
    std::vector<Cluster> out;
    for (const double v : values) {
        if (out.empty() || out.back().value - v > kTol.spectrum_cluster) {
            out.push_back({v, 1});
        } else {
            ++out.back().count;
        }
    }
    return out;
}

bool spectrum_matches(const std::vector<double>& spectrum, const SrgParams& p,
                      const SrgSpectrum& sp) {
    const auto clusters = cluster_spectrum(spectrum);
    if (clusters.size() != 3) {
        return false;
    }
    // Descending: 2(n-1)-k (x1), -s-2 (xg), -r-2 (xf).
    const double delta1 = static_cast<double>(2 * (p.n - 1) - p.k);
    const struct {
        double value;
        std::int64_t count;
    } expected[3] = {{delta1, 1}, {-sp.s - 2.0, sp.g}, {-sp.r - 2.0, sp.f}};
    for (int i = 0; i < 3; ++i) {
        if (clusters[i].count != expected[i].count ||
            std::abs(clusters[i].value - expected[i].value) > kTol.spectrum_value) {
            return false;
        }
    }
    return true;
}

}  // namespace

CrossCheck cross_check(const Graph& g) {
    CrossCheck cc;
    cc.numeric = qec_numeric_detailed(g);
    cc.qec_equals_delta2 =
        std::abs(cc.numeric.report.qec - cc.numeric.report.delta2) <= kTol.qe_class_band;

    const auto detection = detect_srg(g);
    if (detection.kind != SrgKind::srg || detection.params.mu < 1) {
        return cc;
    }

    cc.has_closed_form = true;
    cc.params = detection.params;
    cc.closed_form = qec_closed_form(detection.params);
    cc.difference = std::abs(cc.numeric.report.qec - cc.closed_form.qec);
    cc.values_agree = cc.difference <= kTol.cross_check_max;
    cc.spectrum_ok = spectrum_matches(cc.numeric.distance_spectrum, detection.params,
                                      adjacency_eigenvalues(detection.params));
    return cc;
}

}  // namespace qeg
