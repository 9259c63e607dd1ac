#include "qegraph/qegraph.h"

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/embedding.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/qec.hpp"
#include "core/scan.hpp"
#include "core/srg_theory.hpp"

struct qeg_graph {
    qeg::Graph impl;
};

struct qeg_embedding {
    qeg::Embedding impl;
};

struct qeg_scan_result {
    std::vector<qeg::ScanRow> rows;
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
qeg_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return QEG_OK;
    } catch (const qeg::ParseError& e) {
        t_last_error = e.what();
        return QEG_ERR_PARSE;
    } catch (const qeg::InputError& e) {
        t_last_error = e.what();
        return QEG_ERR_INVALID_ARGUMENT;
    } catch (const qeg::DisconnectedError& e) {
        t_last_error = e.what();
        return QEG_ERR_DISCONNECTED;
    } catch (const qeg::NumericalError& e) {
        t_last_error = e.what();
        return QEG_ERR_NUMERICAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QEG_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return QEG_ERR_INTERNAL;
    }
}

qeg_status require(bool ok, const char* message) {
    if (ok) {
        return QEG_OK;
    }
    t_last_error = message;
    return QEG_ERR_INVALID_ARGUMENT;
}

void copy_string(char* dst, size_t capacity, const std::string& src) {
    std::snprintf(dst, capacity, "%s", src.c_str());
}

qeg_report to_c(const qeg::QecReport& rep) {
    qeg_report out;
    out.qec = rep.qec;
    out.delta1 = rep.delta1;
    out.delta2 = rep.delta2;
    switch (rep.qe_class) {
        case qeg::QeClass::yes: out.qe_class = QEG_QE_YES; break;
        case qeg::QeClass::no: out.qe_class = QEG_QE_NO; break;
        case qeg::QeClass::boundary: out.qe_class = QEG_QE_BOUNDARY; break;
    }
    out.method = rep.method == qeg::Method::closed_form ? QEG_METHOD_CLOSED_FORM
                                                        : QEG_METHOD_NUMERIC;
    return out;
}

qeg_srg_params to_c(const qeg::SrgParams& p) {
    return {p.n, p.k, p.lambda, p.mu};
}

qeg::SrgParams from_c(const qeg_srg_params& p) {
    return {p.n, p.k, p.lambda, p.mu};
}

}  // namespace

extern "C" {

const char* qeg_status_name(qeg_status status) {
    switch (status) {
        case QEG_OK: return "ok";
        case QEG_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QEG_ERR_PARSE: return "parse_error";
        case QEG_ERR_DISCONNECTED: return "disconnected";
        case QEG_ERR_NOT_QE_CLASS: return "not_qe_class";
        case QEG_ERR_NUMERICAL: return "numerical_error";
        case QEG_ERR_INTERNAL: return "internal_error";
    }
    return "?";
}

const char* qeg_last_error(void) {
    return t_last_error.c_str();
}

const char* qeg_version(void) {
    return "0.1.0";
}

qeg_status qeg_graph_from_edge_list(int64_t n, const int64_t* endpoints, size_t edge_count,
                                    qeg_graph** out) {
    if (const auto bad = require(out != nullptr, "out must not be NULL")) {
        return bad;
    }
    if (const auto bad = require(endpoints != nullptr || edge_count == 0,
                                 "endpoints must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        std::vector<std::pair<std::int64_t, std::int64_t>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        }
        *out = new qeg_graph{qeg::Graph::from_edge_list(n, edges)};
    });
}

qeg_status qeg_graph_from_file(const char* path, qeg_graph** out) {
    if (const auto bad = require(path && out, "path and out must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = new qeg_graph{qeg::read_edge_list_file(path)}; });
}

qeg_status qeg_graph_parse(const char* text, qeg_graph** out) {
    if (const auto bad = require(text && out, "text and out must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        std::istringstream in(text);
        *out = new qeg_graph{qeg::read_edge_list(in)};
    });
}

qeg_status qeg_graph_generate(const char* spec, qeg_graph** out) {
    if (const auto bad = require(spec && out, "spec and out must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = new qeg_graph{qeg::generate(spec)}; });
}

void qeg_graph_free(qeg_graph* g) {
    delete g;
}

int64_t qeg_graph_order(const qeg_graph* g) {
    return g ? g->impl.order() : 0;
}

int64_t qeg_graph_edge_count(const qeg_graph* g) {
    return g ? g->impl.edge_count() : 0;
}

int qeg_graph_has_edge(const qeg_graph* g, int64_t u, int64_t v) {
    if (!g || u < 0 || v < 0 || u >= g->impl.order() || v >= g->impl.order()) {
        return 0;
    }
    return g->impl.has_edge(u, v) ? 1 : 0;
}

int qeg_graph_is_connected(const qeg_graph* g) {
    return g && g->impl.is_connected() ? 1 : 0;
}

qeg_status qeg_graph_complement(const qeg_graph* g, qeg_graph** out) {
    if (const auto bad = require(g && out, "graph and out must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = new qeg_graph{g->impl.complement()}; });
}

qeg_status qeg_graph_detect_srg(const qeg_graph* g, qeg_srg_kind* kind, qeg_srg_params* params) {
    if (const auto bad = require(g && kind && params, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto detection = qeg::detect_srg(g->impl);
        switch (detection.kind) {
            case qeg::SrgKind::srg: *kind = QEG_SRG_STRONGLY_REGULAR; break;
            case qeg::SrgKind::not_srg: *kind = QEG_SRG_NOT; break;
            case qeg::SrgKind::complete_graph: *kind = QEG_SRG_COMPLETE; break;
            case qeg::SrgKind::empty_graph: *kind = QEG_SRG_EMPTY; break;
        }
        *params = to_c(detection.params);
    });
}

qeg_status qeg_validate_params(const qeg_srg_params* params, qeg_feasibility* out) {
    if (const auto bad = require(params && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto rep = qeg::validate_params(from_c(*params));
        out->feasible = rep.feasible ? 1 : 0;
        copy_string(out->violation, sizeof out->violation, qeg::to_string(rep.violation));
        out->is_conference = rep.is_conference ? 1 : 0;
        out->integer_eigenvalues = rep.integer_eigenvalues ? 1 : 0;
    });
}

qeg_status qeg_srg_eigenvalues(const qeg_srg_params* params, qeg_srg_spectrum* out) {
    if (const auto bad = require(params && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto p = from_c(*params);
        const auto sp = qeg::adjacency_eigenvalues(p);
        out->s = sp.s;
        out->r = sp.r;
        out->k = sp.k;
        out->f = sp.f;
        out->g = sp.g;
        out->disc = sp.disc;
        out->integer_eigenvalues = sp.integer_eigenvalues ? 1 : 0;
        const auto dist = qeg::distance_eigenvalues(p);
        out->distance_eigenvalues[0] = dist[0];
        out->distance_eigenvalues[1] = dist[1];
        out->distance_eigenvalues[2] = dist[2];
    });
}

const char* qeg_qe_class_name(qeg_qe_class c) {
    switch (c) {
        case QEG_QE_YES: return "yes";
        case QEG_QE_NO: return "no";
        case QEG_QE_BOUNDARY: return "boundary";
    }
    return "?";
}

const char* qeg_method_name(qeg_method m) {
    return m == QEG_METHOD_CLOSED_FORM ? "closed_form" : "numeric";
}

qeg_status qeg_qec_closed_form(const qeg_srg_params* params, qeg_report* out) {
    if (const auto bad = require(params && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = to_c(qeg::qec_closed_form(from_c(*params))); });
}

qeg_status qeg_qec_numeric(const qeg_graph* g, qeg_report* out) {
    if (const auto bad = require(g && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = to_c(qeg::qec_numeric(g->impl)); });
}

qeg_status qeg_transmission_regular(const qeg_graph* g, int* regular, int64_t* row_sum) {
    if (const auto bad = require(g && regular && row_sum, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto tr = qeg::is_transmission_regular(g->impl);
        *regular = tr.regular ? 1 : 0;
        *row_sum = tr.row_sum;
    });
}

qeg_status qeg_cross_check_graph(const qeg_graph* g, qeg_cross_check* out) {
    if (const auto bad = require(g && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto cc = qeg::cross_check(g->impl);
        out->numeric = to_c(cc.numeric.report);
        out->has_closed_form = cc.has_closed_form ? 1 : 0;
        out->params = to_c(cc.params);
        out->closed_form = to_c(cc.closed_form);
        out->difference = cc.difference;
        out->values_agree = cc.values_agree ? 1 : 0;
        out->spectrum_ok = cc.spectrum_ok ? 1 : 0;
        out->qec_equals_delta2 = cc.qec_equals_delta2 ? 1 : 0;
    });
}

qeg_status qeg_matrix_identities(const qeg_graph* g, const qeg_srg_params* params,
                                 qeg_identity_report* out) {
    if (const auto bad = require(g && params && out, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto check = qeg::matrix_identity_check(g->impl, from_c(*params));
        out->pass = check.pass ? 1 : 0;
        copy_string(out->identity, sizeof out->identity, check.identity);
        out->row = check.row;
        out->col = check.col;
        out->lhs = check.lhs;
        out->rhs = check.rhs;
    });
}

qeg_status qeg_embed(const qeg_graph* g, qeg_embedding** out, double* min_eigenvalue) {
    if (const auto bad = require(g && out, "graph and out must not be NULL")) {
        return bad;
    }
    qeg_status status = QEG_OK;
    const auto wrapped = guarded([&] {
        const auto dm = qeg::distance_matrix(g->impl);
        auto result = qeg::construct_embedding(dm);
        if (std::holds_alternative<qeg::NotQEClass>(result)) {
            const auto witness = std::get<qeg::NotQEClass>(result);
            if (min_eigenvalue) {
                *min_eigenvalue = witness.min_eigenvalue;
            }
            t_last_error = "graph is not of QE class: centered Gram form has eigenvalue " +
                           std::to_string(witness.min_eigenvalue);
            status = QEG_ERR_NOT_QE_CLASS;
            return;
        }
        *out = new qeg_embedding{std::get<qeg::Embedding>(std::move(result))};
    });
    return wrapped != QEG_OK ? wrapped : status;
}

void qeg_embedding_free(qeg_embedding* e) {
    delete e;
}

int64_t qeg_embedding_order(const qeg_embedding* e) {
    return e ? e->impl.n : 0;
}

int64_t qeg_embedding_dim(const qeg_embedding* e) {
    return e ? e->impl.dim : 0;
}

const double* qeg_embedding_points(const qeg_embedding* e) {
    return e ? e->impl.points.data() : nullptr;
}

double qeg_embedding_max_deviation(const qeg_embedding* e) {
    return e ? e->impl.max_deviation : 0.0;
}

qeg_status qeg_scan(int64_t n_max, qeg_scan_result** out) {
    if (const auto bad = require(out != nullptr, "out must not be NULL")) {
        return bad;
    }
    return guarded([&] { *out = new qeg_scan_result{qeg::enumerate_feasible(n_max)}; });
}

void qeg_scan_result_free(qeg_scan_result* rows) {
    delete rows;
}

size_t qeg_scan_result_count(const qeg_scan_result* rows) {
    return rows ? rows->rows.size() : 0;
}

qeg_status qeg_scan_result_row(const qeg_scan_result* rows, size_t index, qeg_scan_row* out) {
    if (const auto bad = require(rows && out, "arguments must not be NULL")) {
        return bad;
    }
    if (const auto bad = require(index < rows->rows.size(), "row index out of range")) {
        return bad;
    }
    const auto& row = rows->rows[index];
    out->params = to_c(row.params);
    out->s = row.spectrum.s;
    out->r = row.spectrum.r;
    out->f = row.spectrum.f;
    out->g = row.spectrum.g;
    out->qec = row.qec;
    switch (row.qe_class) {
        case qeg::QeClass::yes: out->qe_class = QEG_QE_YES; break;
        case qeg::QeClass::no: out->qe_class = QEG_QE_NO; break;
        case qeg::QeClass::boundary: out->qe_class = QEG_QE_BOUNDARY; break;
    }
    out->conference = row.conference ? 1 : 0;
    return QEG_OK;
}

size_t qeg_named_table_size(void) {
    return 9;
}

qeg_status qeg_named_table(qeg_named_row* rows, size_t capacity, size_t* written) {
    if (const auto bad = require(rows && written, "arguments must not be NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto table = qeg::named_table();
        if (capacity < table.size()) {
            throw qeg::InputError("named table needs capacity " + std::to_string(table.size()));
        }
        for (size_t i = 0; i < table.size(); ++i) {
            copy_string(rows[i].name, sizeof rows[i].name, table[i].name);
            rows[i].params = to_c(table[i].params);
            rows[i].expected_qec = table[i].expected_qec;
            rows[i].computed_qec = table[i].computed_qec;
            rows[i].pass = table[i].pass ? 1 : 0;
        }
        *written = table.size();
    });
}

}  // extern "C"
