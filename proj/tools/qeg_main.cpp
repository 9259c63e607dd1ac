// qeg - command line front end for the qegraph shared library.
//
// Exit codes: 0 success, 1 input error, 2 disconnected graph,
// 3 not of QE class, 4 named-table mismatch, 5 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qegraph/qegraph.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisconnected = 2;
constexpr int kExitNotQeClass = 3;
constexpr int kExitTableMismatch = 4;
constexpr int kExitNumerical = 5;

int exit_code_for(qeg_status status) {
    switch (status) {
        case QEG_OK: return kExitOk;
        case QEG_ERR_INVALID_ARGUMENT:
        case QEG_ERR_PARSE: return kExitInput;
        case QEG_ERR_DISCONNECTED: return kExitDisconnected;
        case QEG_ERR_NOT_QE_CLASS: return kExitNotQeClass;
        case QEG_ERR_NUMERICAL:
        case QEG_ERR_INTERNAL: return kExitNumerical;
    }
    return kExitNumerical;
}

int fail(qeg_status status) {
    std::cerr << "error: " << qeg_last_error() << "\n";
    return exit_code_for(status);
}

// 10 significant digits; exact integers print without a decimal point.
std::string format_value(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct GraphSource {
    std::string file;
    std::string gen;

    void attach(CLI::App* cmd) {
        auto* file_opt = cmd->add_option("--file", file, "edge-list file (first line \"n m\")");
        auto* gen_opt =
            cmd->add_option("--gen", gen, "generator spec family[:p1,p2,...], e.g. paley:13");
        file_opt->excludes(gen_opt);
    }

    // Returns 0 and fills *out, or a process exit code after printing the error.
    int open(qeg_graph** out) const;

    std::string label() const { return file.empty() ? gen : file; }
};

int GraphSource::open(qeg_graph** out) const {
    if (file.empty() == gen.empty()) {
        std::cerr << "error: exactly one of --file or --gen is required\n";
        return kExitInput;
    }
    const auto status = !file.empty() ? qeg_graph_from_file(file.c_str(), out)
                                      : qeg_graph_generate(gen.c_str(), out);
    return status == QEG_OK ? 0 : fail(status);
}

json report_to_json(const qeg_report& rep) {
    return json{{"qec", rep.qec},
                {"delta1", rep.delta1},
                {"delta2", rep.delta2},
                {"qe_class", qeg_qe_class_name(rep.qe_class)},
                {"method", qeg_method_name(rep.method)}};
}

json params_to_json(const qeg_srg_params& p) {
    return json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

int run_qec(const GraphSource& source, bool as_json) {
    qeg_graph* graph = nullptr;
    if (const int code = source.open(&graph); code != 0) {
        return code;
    }

    qeg_cross_check cc;
    const auto status = qeg_cross_check_graph(graph, &cc);
    qeg_graph_free(graph);
    if (status != QEG_OK) {
        return fail(status);
    }

    if (as_json) {
        json out = report_to_json(cc.numeric);
        out["graph"] = source.label();
        if (cc.has_closed_form) {
            out["srg"] = params_to_json(cc.params);
            out["cross_check"] = {{"closed_form", cc.closed_form.qec},
                                  {"difference", cc.difference},
                                  {"agree", cc.values_agree != 0},
                                  {"spectrum_ok", cc.spectrum_ok != 0}};
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    std::cout << "graph        " << source.label() << "\n";
    std::cout << "qec          " << format_value(cc.numeric.qec) << "\n";
    std::cout << "delta1       " << format_value(cc.numeric.delta1) << "\n";
    std::cout << "delta2       " << format_value(cc.numeric.delta2) << "\n";
    std::cout << "class        " << qeg_qe_class_name(cc.numeric.qe_class) << "\n";
    std::cout << "method       " << qeg_method_name(cc.numeric.method) << "\n";
    if (cc.has_closed_form) {
        std::cout << "srg          (" << cc.params.n << ", " << cc.params.k << ", "
                  << cc.params.lambda << ", " << cc.params.mu << ")\n";
        std::cout << "closed_form  " << format_value(cc.closed_form.qec) << "\n";
        std::cout << "difference   " << format_value(cc.difference) << "\n";
    }
    return kExitOk;
}

int run_check(int64_t n, int64_t k, int64_t lambda, int64_t mu, bool as_json) {
    const qeg_srg_params params{n, k, lambda, mu};
    qeg_feasibility feas;
    if (const auto status = qeg_validate_params(&params, &feas); status != QEG_OK) {
        return fail(status);
    }

    json out{{"params", params_to_json(params)},
             {"feasible", feas.feasible != 0},
             {"violation", feas.violation},
             {"conference", feas.is_conference != 0},
             {"integer_eigenvalues", feas.integer_eigenvalues != 0}};

    qeg_srg_spectrum spectrum;
    qeg_report rep;
    if (feas.feasible) {
        if (const auto status = qeg_srg_eigenvalues(&params, &spectrum); status != QEG_OK) {
            return fail(status);
        }
        if (const auto status = qeg_qec_closed_form(&params, &rep); status != QEG_OK) {
            return fail(status);
        }
        out["spectrum"] = {{"s", spectrum.s}, {"r", spectrum.r}, {"k", spectrum.k},
                           {"f", spectrum.f}, {"g", spectrum.g}, {"disc", spectrum.disc}};
        out["distance_eigenvalues"] = {spectrum.distance_eigenvalues[0],
                                       spectrum.distance_eigenvalues[1],
                                       spectrum.distance_eigenvalues[2]};
        out["qec"] = rep.qec;
        out["delta1"] = rep.delta1;
        out["delta2"] = rep.delta2;
        out["qe_class"] = qeg_qe_class_name(rep.qe_class);
        out["method"] = qeg_method_name(rep.method);
    }

    if (as_json) {
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    std::cout << "params       srg(" << n << ", " << k << ", " << lambda << ", " << mu << ")\n";
    std::cout << "feasible     " << (feas.feasible ? "yes" : "no") << "\n";
    if (!feas.feasible) {
        std::cout << "violation    " << feas.violation << "\n";
        return kExitOk;
    }
    std::cout << "conference   " << (feas.is_conference ? "yes" : "no") << "\n";
    std::cout << "integer      " << (feas.integer_eigenvalues ? "yes" : "no") << "\n";
    std::cout << "s            " << format_value(spectrum.s) << "  (multiplicity " << spectrum.g
              << ")\n";
    std::cout << "r            " << format_value(spectrum.r) << "  (multiplicity " << spectrum.f
              << ")\n";
    std::cout << "distance     " << format_value(spectrum.distance_eigenvalues[0]) << " (x"
              << spectrum.f << "), " << format_value(spectrum.distance_eigenvalues[1]) << " (x"
              << spectrum.g << "), " << format_value(spectrum.distance_eigenvalues[2])
              << " (x1)\n";
    std::cout << "qec          " << format_value(rep.qec) << "\n";
    std::cout << "delta1       " << format_value(rep.delta1) << "\n";
    std::cout << "delta2       " << format_value(rep.delta2) << "\n";
    std::cout << "class        " << qeg_qe_class_name(rep.qe_class) << "\n";
    return kExitOk;
}

int run_scan(int64_t n_max, bool as_json) {
    qeg_scan_result* result = nullptr;
    if (const auto status = qeg_scan(n_max, &result); status != QEG_OK) {
        return fail(status);
    }

    const size_t count = qeg_scan_result_count(result);
    if (!as_json) {
        std::cout << "n\tk\tlambda\tmu\ts\tr\tf\tg\tqec\tclass\tconference\texistence\n";
    }
    for (size_t i = 0; i < count; ++i) {
        qeg_scan_row row;
        if (const auto status = qeg_scan_result_row(result, i, &row); status != QEG_OK) {
            qeg_scan_result_free(result);
            return fail(status);
        }
        if (as_json) {
            json line{{"n", row.params.n},
                      {"k", row.params.k},
                      {"lambda", row.params.lambda},
                      {"mu", row.params.mu},
                      {"s", row.s},
                      {"r", row.r},
                      {"f", row.f},
                      {"g", row.g},
                      {"qec", row.qec},
                      {"class", qeg_qe_class_name(row.qe_class)},
                      {"conference", row.conference != 0},
                      {"existence", "unknown"}};
            std::cout << line.dump() << "\n";
        } else {
            std::cout << row.params.n << '\t' << row.params.k << '\t' << row.params.lambda
                      << '\t' << row.params.mu << '\t' << format_value(row.s) << '\t'
                      << format_value(row.r) << '\t' << row.f << '\t' << row.g << '\t'
                      << format_value(row.qec) << '\t' << qeg_qe_class_name(row.qe_class) << '\t'
                      << (row.conference ? "yes" : "no") << '\t' << "unknown" << "\n";
        }
    }
    qeg_scan_result_free(result);
    return kExitOk;
}

int run_embed(const GraphSource& source, const std::string& out_path, bool as_json) {
    qeg_graph* graph = nullptr;
    if (const int code = source.open(&graph); code != 0) {
        return code;
    }

    qeg_embedding* embedding = nullptr;
    double min_eigenvalue = 0.0;
    const auto status = qeg_embed(graph, &embedding, &min_eigenvalue);
    if (status == QEG_ERR_NOT_QE_CLASS) {
        qeg_report rep;
        std::string qec_note;
        if (qeg_qec_numeric(graph, &rep) == QEG_OK) {
            qec_note = ", qec = " + format_value(rep.qec);
        }
        std::cerr << "error: " << qeg_last_error() << qec_note << "\n";
        qeg_graph_free(graph);
        return kExitNotQeClass;
    }
    qeg_graph_free(graph);
    if (status != QEG_OK) {
        return fail(status);
    }

    const int64_t n = qeg_embedding_order(embedding);
    const int64_t dim = qeg_embedding_dim(embedding);
    const double* points = qeg_embedding_points(embedding);

    json out;
    out["n"] = n;
    out["dim"] = dim;
    json rows = json::array();
    for (int64_t i = 0; i < n; ++i) {
        json row = json::array();
        for (int64_t c = 0; c < dim; ++c) {
            row.push_back(points[i * dim + c]);
        }
        rows.push_back(row);
    }
    out["points"] = rows;
    out["max_deviation"] = qeg_embedding_max_deviation(embedding);
    qeg_embedding_free(embedding);

    if (out_path.empty()) {
        std::cout << out.dump(as_json ? -1 : 2) << "\n";
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInput;
    }
    file << out.dump(2) << "\n";
    std::cout << "wrote " << out_path << " (n=" << n << ", dim=" << dim << ")\n";
    return kExitOk;
}

int run_table(bool as_json) {
    std::vector<qeg_named_row> rows(qeg_named_table_size());
    size_t written = 0;
    if (const auto status = qeg_named_table(rows.data(), rows.size(), &written);
        status != QEG_OK) {
        return fail(status);
    }

    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (size_t i = 0; i < written; ++i) {
            const auto& row = rows[i];
            all_pass = all_pass && row.pass != 0;
            out.push_back({{"name", row.name},
                           {"params", params_to_json(row.params)},
                           {"expected_qec", row.expected_qec},
                           {"computed_qec", row.computed_qec},
                           {"pass", row.pass != 0}});
        }
        std::cout << out.dump() << "\n";
    } else {
        std::printf("%-18s %4s %4s %7s %4s %9s %9s  %s\n", "graph", "n", "k", "lambda", "mu",
                    "expected", "computed", "result");
        for (size_t i = 0; i < written; ++i) {
            const auto& row = rows[i];
            all_pass = all_pass && row.pass != 0;
            std::printf("%-18s %4lld %4lld %7lld %4lld %9lld %9s  %s\n", row.name,
                        static_cast<long long>(row.params.n),
                        static_cast<long long>(row.params.k),
                        static_cast<long long>(row.params.lambda),
                        static_cast<long long>(row.params.mu),
                        static_cast<long long>(row.expected_qec),
                        format_value(row.computed_qec).c_str(), row.pass ? "PASS" : "FAIL");
        }
    }
    return all_pass ? kExitOk : kExitTableMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic embedding constants of graphs"};
    app.require_subcommand(1);

    auto* qec_cmd = app.add_subcommand("qec", "compute the QE constant of a graph");
    GraphSource qec_source;
    bool qec_json = false;
    qec_source.attach(qec_cmd);
    qec_cmd->add_flag("--json", qec_json, "emit JSON");

    auto* check_cmd =
        app.add_subcommand("check", "feasibility and closed-form report for srg(n,k,lambda,mu)");
    int64_t cn = 0, ck = 0, clambda = 0, cmu = 0;
    bool check_json = false;
    check_cmd->add_option("n", cn, "vertex count")->required();
    check_cmd->add_option("k", ck, "degree")->required();
    check_cmd->add_option("lambda", clambda, "common neighbours of adjacent pairs")->required();
    check_cmd->add_option("mu", cmu, "common neighbours of non-adjacent pairs")->required();
    check_cmd->add_flag("--json", check_json, "emit JSON");

    auto* scan_cmd = app.add_subcommand("scan", "enumerate feasible parameter tuples up to n_max");
    int64_t n_max = 0;
    bool scan_json = false;
    scan_cmd->add_option("n_max", n_max, "largest vertex count to scan")->required();
    scan_cmd->add_flag("--json", scan_json, "emit JSON lines instead of TSV");

    auto* embed_cmd = app.add_subcommand("embed", "construct a quadratic embedding");
    GraphSource embed_source;
    std::string embed_out;
    bool embed_json = false;
    embed_source.attach(embed_cmd);
    embed_cmd->add_option("-o,--output", embed_out, "output JSON path (default: stdout)");
    embed_cmd->add_flag("--json", embed_json, "compact JSON on stdout");

    auto* table_cmd = app.add_subcommand("table", "recompute the classical named-graph table");
    bool table_json = false;
    table_cmd->add_flag("--json", table_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (qec_cmd->parsed()) {
        return run_qec(qec_source, qec_json);
    }
    if (check_cmd->parsed()) {
        return run_check(cn, ck, clambda, cmu, check_json);
    }
    if (scan_cmd->parsed()) {
        return run_scan(n_max, scan_json);
    }
    if (embed_cmd->parsed()) {
        return run_embed(embed_source, embed_out, embed_json);
    }
    if (table_cmd->parsed()) {
        return run_table(table_json);
    }
    return kExitInput;
}
