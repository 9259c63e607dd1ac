#ifndef QEGRAPH_H
#define QEGRAPH_H

/* qegraph - quadratic embedding constants of graphs.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * released through these functions; every fallible call returns a
 * qeg_status and leaves a human-readable detail message readable via
 * qeg_last_error() (thread-local). Output parameters are written only on
 * QEG_OK unless stated otherwise.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qeg_status {
    QEG_OK = 0,
    QEG_ERR_INVALID_ARGUMENT = 1, /* bad parameters, ranges, generator specs */
    QEG_ERR_PARSE = 2,            /* malformed edge-list text */
    QEG_ERR_DISCONNECTED = 3,     /* graph distance undefined */
    QEG_ERR_NOT_QE_CLASS = 4,     /* no Euclidean realization exists */
    QEG_ERR_NUMERICAL = 5,        /* accuracy contract violated */
    QEG_ERR_INTERNAL = 6
} qeg_status;

const char* qeg_status_name(qeg_status status);

/* Detail message for the most recent failing call on this thread. */
const char* qeg_last_error(void);

const char* qeg_version(void);

/* ------------------------------------------------------------------ */
/* Graphs                                                              */

typedef struct qeg_graph qeg_graph;

/* endpoints holds edge_count (u, v) pairs flattened to 2*edge_count values. */
qeg_status qeg_graph_from_edge_list(int64_t n, const int64_t* endpoints, size_t edge_count,
                                    qeg_graph** out);

/* Edge-list text: first non-comment line "n m", then m pairs "u v"
 * (0-based); '#' starts a comment running to end of line. */
qeg_status qeg_graph_from_file(const char* path, qeg_graph** out);
qeg_status qeg_graph_parse(const char* text, qeg_graph** out);

/* Named families: "family[:p1[,p2...]]", e.g. "petersen", "cycle:5",
 * "paley:13", "complete_multipartite:3,3,3". Families: cycle, complete,
 * complete_multipartite, cocktail_party, petersen, triangular, rook,
 * paley, clebsch, shrikhande. */
qeg_status qeg_graph_generate(const char* spec, qeg_graph** out);

void qeg_graph_free(qeg_graph* g);

int64_t qeg_graph_order(const qeg_graph* g);
int64_t qeg_graph_edge_count(const qeg_graph* g);
int qeg_graph_has_edge(const qeg_graph* g, int64_t u, int64_t v);
int qeg_graph_is_connected(const qeg_graph* g);

qeg_status qeg_graph_complement(const qeg_graph* g, qeg_graph** out);

/* ------------------------------------------------------------------ */
/* Strong regularity                                                   */

typedef struct qeg_srg_params {
    int64_t n;
    int64_t k;
    int64_t lambda;
    int64_t mu;
} qeg_srg_params;

typedef enum qeg_srg_kind {
    QEG_SRG_STRONGLY_REGULAR = 0,
    QEG_SRG_NOT = 1,
    QEG_SRG_COMPLETE = 2, /* mu undetermined: params.mu is the sentinel -1 */
    QEG_SRG_EMPTY = 3     /* lambda undetermined: params.lambda is -1 */
} qeg_srg_kind;

qeg_status qeg_graph_detect_srg(const qeg_graph* g, qeg_srg_kind* kind, qeg_srg_params* params);

/* Verdict of the necessary feasibility conditions for mu >= 1 parameters.
 * feasible means every necessary condition passes, not that a graph exists.
 * violation names the single failing condition ("none" when feasible). */
typedef struct qeg_feasibility {
    int feasible;
    char violation[32];
    int is_conference;
    int integer_eigenvalues;
} qeg_feasibility;

qeg_status qeg_validate_params(const qeg_srg_params* params, qeg_feasibility* out);

/* Adjacency spectrum s < r < k with multiplicities g, f, 1, the discriminant
 * (lambda-mu)^2 + 4(k-mu), and the distance spectrum (-r-2, -s-2, 2(n-1)-k)
 * in increasing order with multiplicities (f, g, 1). */
typedef struct qeg_srg_spectrum {
    double s;
    double r;
    int64_t k;
    int64_t f;
    int64_t g;
    int64_t disc;
    int integer_eigenvalues;
    double distance_eigenvalues[3];
} qeg_srg_spectrum;

qeg_status qeg_srg_eigenvalues(const qeg_srg_params* params, qeg_srg_spectrum* out);

/* ------------------------------------------------------------------ */
/* QE constants                                                        */

typedef enum qeg_qe_class {
    QEG_QE_YES = 0,     /* qec < 0: strict quadratic embedding */
    QEG_QE_NO = 1,      /* qec > 0: no Euclidean realization */
    QEG_QE_BOUNDARY = 2 /* qec = 0 */
} qeg_qe_class;

typedef enum qeg_method { QEG_METHOD_CLOSED_FORM = 0, QEG_METHOD_NUMERIC = 1 } qeg_method;

const char* qeg_qe_class_name(qeg_qe_class c);
const char* qeg_method_name(qeg_method m);

typedef struct qeg_report {
    double qec;
    double delta1; /* largest distance eigenvalue */
    double delta2; /* second largest distance eigenvalue */
    qeg_qe_class qe_class;
    qeg_method method;
} qeg_report;

/* Closed form for feasible srg parameters with mu >= 1: qec = -s - 2. */
qeg_status qeg_qec_closed_form(const qeg_srg_params* params, qeg_report* out);

/* Numeric engine for any connected graph on >= 2 vertices: conditional
 * maximum of <f, D f> over unit f orthogonal to the all-ones vector. */
qeg_status qeg_qec_numeric(const qeg_graph* g, qeg_report* out);

/* regular is set to 1 and row_sum to the common distance row sum when the
 * distance matrix has constant row sums, else regular = 0. */
qeg_status qeg_transmission_regular(const qeg_graph* g, int* regular, int64_t* row_sum);

typedef struct qeg_cross_check {
    qeg_report numeric;
    int has_closed_form; /* graph detected as srg with mu >= 1 */
    qeg_srg_params params;
    qeg_report closed_form;
    double difference;
    int values_agree;
    int spectrum_ok;
    int qec_equals_delta2;
} qeg_cross_check;

qeg_status qeg_cross_check_graph(const qeg_graph* g, qeg_cross_check* out);

/* Exact integer verification of the strongly-regular matrix identities.
 * pass = 0 fills identity/row/col/lhs/rhs with the first failing entry. */
typedef struct qeg_identity_report {
    int pass;
    char identity[32];
    int64_t row;
    int64_t col;
    int64_t lhs;
    int64_t rhs;
} qeg_identity_report;

qeg_status qeg_matrix_identities(const qeg_graph* g, const qeg_srg_params* params,
                                 qeg_identity_report* out);

/* ------------------------------------------------------------------ */
/* Quadratic embeddings                                                */

typedef struct qeg_embedding qeg_embedding;

/* Builds points with squared Euclidean distance equal to the graph
 * distance. Returns QEG_ERR_NOT_QE_CLASS when no realization exists; in
 * that case *min_eigenvalue (when non-NULL) receives the witness, the most
 * negative eigenvalue of the centered Gram form. */
qeg_status qeg_embed(const qeg_graph* g, qeg_embedding** out, double* min_eigenvalue);

void qeg_embedding_free(qeg_embedding* e);
int64_t qeg_embedding_order(const qeg_embedding* e);
int64_t qeg_embedding_dim(const qeg_embedding* e);
/* Row-major: order() rows of dim() coordinates. */
const double* qeg_embedding_points(const qeg_embedding* e);
double qeg_embedding_max_deviation(const qeg_embedding* e);

/* ------------------------------------------------------------------ */
/* Parameter scan                                                      */

typedef struct qeg_scan_result qeg_scan_result;

typedef struct qeg_scan_row {
    qeg_srg_params params;
    double s;
    double r;
    int64_t f;
    int64_t g;
    double qec;
    qeg_qe_class qe_class;
    int conference;
    /* existence of an actual graph is never decided: always "unknown" */
} qeg_scan_row;

/* Feasible tuples with mu >= 1 for 4 <= n <= n_max (n_max <= 100000),
 * sorted by (n, k, lambda, mu); deterministic across runs. */
qeg_status qeg_scan(int64_t n_max, qeg_scan_result** out);
void qeg_scan_result_free(qeg_scan_result* rows);
size_t qeg_scan_result_count(const qeg_scan_result* rows);
qeg_status qeg_scan_result_row(const qeg_scan_result* rows, size_t index, qeg_scan_row* out);

/* ------------------------------------------------------------------ */
/* Named table                                                         */

typedef struct qeg_named_row {
    char name[24];
    qeg_srg_params params;
    int64_t expected_qec;
    double computed_qec;
    int pass; /* computed equals the published integer exactly */
} qeg_named_row;

size_t qeg_named_table_size(void);
/* Writes up to capacity rows, sets *written to the table size. Fails with
 * QEG_ERR_INVALID_ARGUMENT when capacity is too small. */
qeg_status qeg_named_table(qeg_named_row* rows, size_t capacity, size_t* written);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QEGRAPH_H */
