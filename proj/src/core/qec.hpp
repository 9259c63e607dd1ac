#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/srg_theory.hpp"

namespace qeg {

struct TransmissionRegularity {
    bool regular = false;
    std::int64_t row_sum = 0;  // common distance row sum, valid when regular
};

/// True iff every row of the distance matrix sums to the same value.
TransmissionRegularity is_transmission_regular(const Graph& g);

/// Numeric QEC result: the conditional maximum of <f, D f> over unit f with
/// <1, f> = 0, plus the data needed to audit it.
struct NumericQec {
    QecReport report;                       // method == numeric
    std::vector<double> distance_spectrum;  // full spectrum of D, descending
    std::vector<double> maximizer;          // unit vector orthogonal to 1 attaining qec
};

/// Restricted-eigenproblem engine for arbitrary connected graphs on n >= 2
/// vertices. Throws DisconnectedError / InputError accordingly.
NumericQec qec_numeric_detailed(const Graph& g);
QecReport qec_numeric(const Graph& g);

/// Numeric engine plus, when the graph is strongly regular with mu >= 1,
/// the closed-form value and the structural checks tying both together.
struct CrossCheck {
    NumericQec numeric;
    bool has_closed_form = false;
    SrgParams params;            // valid when has_closed_form
    QecReport closed_form;       // valid when has_closed_form
    double difference = 0.0;     // |numeric qec - closed-form qec|
    bool values_agree = false;   // difference within tolerance
    bool spectrum_ok = false;    // D-spectrum is {-r-2 (xf), -s-2 (xg), 2(n-1)-k (x1)}
    bool qec_equals_delta2 = false;  // holds for every transmission regular graph
};

CrossCheck cross_check(const Graph& g);

}  // namespace qeg
