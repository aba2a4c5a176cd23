/* resjoin - resistance distances, Kirchhoff indices and Kemeny constants for
 * central graphs and central vertex/edge joins.
 *
 * C interface of the shared library. All objects are opaque handles owned by
 * the library; every function that can fail returns an rj_status and reports
 * detail through rj_last_error(). Strings returned through char** are heap
 * allocated and must be released with rj_string_free().
 */
#ifndef RESJOIN_H
#define RESJOIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RESJOIN_API __declspec(dllexport)
#else
#define RESJOIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rj_status {
    RJ_OK = 0,
    RJ_ERROR_LOOP_EDGE = 1,
    RJ_ERROR_DUPLICATE_EDGE = 2,
    RJ_ERROR_INDEX_OUT_OF_RANGE = 3,
    RJ_ERROR_BAD_PARAMS = 4,
    RJ_ERROR_NOT_POSITIVE_DEFINITE = 5,
    RJ_ERROR_DISCONNECTED = 6,
    RJ_ERROR_SINGULAR_L3 = 7,
    RJ_ERROR_NOT_LAPLACIAN = 8,
    RJ_ERROR_SINGULAR_SHIFT = 9,
    RJ_ERROR_NOT_REGULAR = 10,
    RJ_ERROR_BAD_INDEX = 11,
    RJ_ERROR_PARSE = 12,
    RJ_ERROR_NOT_SYMMETRIC = 13,
    RJ_ERROR_IO = 14,
    RJ_ERROR_INVALID_ARGUMENT = 15,
    RJ_ERROR_INTERNAL = 16
} rj_status;

typedef enum rj_vertex_class {
    RJ_CLASS_PLAIN = 0,   /* vertex of an ordinary graph */
    RJ_CLASS_G1 = 1,      /* original vertex of the first operand */
    RJ_CLASS_EDGE = 2,    /* subdivision vertex of an edge of the first operand */
    RJ_CLASS_G2 = 3       /* vertex of the second operand */
} rj_vertex_class;

typedef enum rj_join_kind {
    RJ_KIND_PLAIN = 0,
    RJ_KIND_CENTRAL = 1,
    RJ_KIND_CVJ = 2,      /* central vertex join */
    RJ_KIND_CEJ = 3       /* central edge join */
} rj_join_kind;

typedef enum rj_engine {
    RJ_ENGINE_AUTO = 0,
    RJ_ENGINE_ORACLE = 1,        /* Moore-Penrose pseudoinverse of the full Laplacian */
    RJ_ENGINE_CLOSED_FORM = 2,   /* per-vertex-class closed formulas */
    RJ_ENGINE_BLOCK_INVERSE = 3  /* block {1}-inverse assembled from the join partition */
} rj_engine;

typedef struct rj_graph rj_graph;
typedef struct rj_resistance_report rj_resistance_report;
typedef struct rj_index_report rj_index_report;

/* ---- diagnostics ---- */

RESJOIN_API const char* rj_version(void);
RESJOIN_API const char* rj_status_name(rj_status status);
/* Message for the most recent failure on this thread; empty string if none. */
RESJOIN_API const char* rj_last_error(void);
RESJOIN_API void rj_string_free(char* s);

/* ---- graphs ---- */

/* endpoints holds edge_count (i,j) pairs, flattened. Edges are canonicalized;
 * loops, duplicates and out-of-range indices are rejected. */
RESJOIN_API rj_status rj_graph_from_edge_list(uint32_t n, const uint32_t* endpoints,
                                              size_t edge_count, rj_graph** out);
/* spec grammar: path:N | cycle:N | complete:N | kbip:P,Q | file:PATH */
RESJOIN_API rj_status rj_graph_from_spec(const char* spec, rj_graph** out);
RESJOIN_API rj_status rj_graph_read_file(const char* path, rj_graph** out);
RESJOIN_API rj_status rj_graph_write_file(const rj_graph* g, const char* path);
/* Edge-list text: first line "n m", then one "i j" line per edge, canonical order. */
RESJOIN_API rj_status rj_graph_format_edge_list(const rj_graph* g, char** out);
RESJOIN_API void rj_graph_free(rj_graph* g);

RESJOIN_API uint32_t rj_graph_order(const rj_graph* g);
RESJOIN_API uint32_t rj_graph_size(const rj_graph* g);
RESJOIN_API rj_status rj_graph_edge(const rj_graph* g, uint32_t k, uint32_t* i, uint32_t* j);
RESJOIN_API rj_status rj_graph_degree(const rj_graph* g, uint32_t v, uint32_t* out);
RESJOIN_API int rj_graph_is_connected(const rj_graph* g);
/* Common degree if the graph is regular, else -1. */
RESJOIN_API int32_t rj_graph_regular_degree(const rj_graph* g);

RESJOIN_API rj_join_kind rj_graph_kind(const rj_graph* g);
RESJOIN_API rj_vertex_class rj_graph_vertex_class(const rj_graph* g, uint32_t v);
/* Source vertex index (G1/G2 classes) or source edge index (EDGE class); -1 for plain. */
RESJOIN_API int32_t rj_graph_vertex_source(const rj_graph* g, uint32_t v);

/* ---- constructions ----
 * Vertex order of every result: G1 vertices (source order), then one
 * subdivision vertex per G1 edge (canonical edge order), then G2 vertices. */

RESJOIN_API rj_status rj_central(const rj_graph* g, rj_graph** out);
RESJOIN_API rj_status rj_central_vertex_join(const rj_graph* g1, const rj_graph* g2,
                                             rj_graph** out);
RESJOIN_API rj_status rj_central_edge_join(const rj_graph* g1, const rj_graph* g2,
                                           rj_graph** out);

/* ---- resistance ---- */

/* check != 0 additionally runs the oracle and records the max deviation. */
RESJOIN_API rj_status rj_resistance(const rj_graph* g, rj_engine engine, int check,
                                    rj_resistance_report** out);
RESJOIN_API void rj_resistance_report_free(rj_resistance_report* r);
RESJOIN_API uint32_t rj_resistance_order(const rj_resistance_report* r);
RESJOIN_API rj_engine rj_resistance_engine(const rj_resistance_report* r);
RESJOIN_API rj_status rj_resistance_entry(const rj_resistance_report* r, uint32_t i,
                                          uint32_t j, double* out);
/* Copies the full matrix, row major, into buf (length order*order). */
RESJOIN_API rj_status rj_resistance_matrix(const rj_resistance_report* r, double* buf,
                                           size_t buf_len);
/* 1 and the deviation if an oracle check was requested, else 0. */
RESJOIN_API int rj_resistance_oracle_deviation(const rj_resistance_report* r, double* out);

/* ---- indices ---- */

RESJOIN_API rj_status rj_indices(const rj_graph* g, rj_index_report** out);
RESJOIN_API void rj_index_report_free(rj_index_report* r);
RESJOIN_API double rj_index_kirchhoff_from_r(const rj_index_report* r);
RESJOIN_API double rj_index_kirchhoff_trace(const rj_index_report* r);
RESJOIN_API double rj_index_kemeny(const rj_index_report* r);
RESJOIN_API double rj_index_foster_residual(const rj_index_report* r);
RESJOIN_API size_t rj_index_reported_count(const rj_index_report* r);
/* tag stays owned by the report and is valid until rj_index_report_free.
 * reported/deviation are NaN when the expansion is undefined for the input. */
RESJOIN_API rj_status rj_index_reported(const rj_index_report* r, size_t k,
                                        const char** tag, double* reported,
                                        double* computed, double* deviation);
/* Full report as JSON (schema 1). */
RESJOIN_API rj_status rj_index_report_json(const rj_index_report* r, char** out);

/* ---- verification sweep and benchmark ---- */

/* Runs the invariant sweeps (engine equivalence, metric axioms, identity
 * suites) up to the given bounds and gathers the documented reference-value
 * deviations. failure_count receives the number of failed sections;
 * report_json receives a schema-1 JSON report. fault_injection != 0 perturbs
 * one engine constant and is for exercising the harness only. */
RESJOIN_API rj_status rj_verify(uint32_t max_n1, uint32_t max_n2, double tolerance,
                                int fault_injection, char** report_json,
                                int* failure_count);

/* Closed form vs full-Laplacian oracle timings on cycle(n) vertex-joined with
 * complete(ceil(n/2)); one CSV row per size. */
RESJOIN_API rj_status rj_bench(const uint32_t* sizes, size_t size_count, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* RESJOIN_H */
