#include "resjoin/resjoin.h"

#include <cstring>
#include <new>
#include <string>

#include "bench.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "resistance.hpp"
#include "verify.hpp"

using namespace resjoin;

struct rj_graph {
    LabeledJoinGraph g;
};

struct rj_resistance_report {
    ResistanceReport report;
};

struct rj_index_report {
    IndexReport report;
};

namespace {

thread_local std::string t_last_error;

rj_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::LoopEdge: return RJ_ERROR_LOOP_EDGE;
    case ErrorCode::DuplicateEdge: return RJ_ERROR_DUPLICATE_EDGE;
    case ErrorCode::IndexOutOfRange: return RJ_ERROR_INDEX_OUT_OF_RANGE;
    case ErrorCode::BadParams: return RJ_ERROR_BAD_PARAMS;
    case ErrorCode::NotPositiveDefinite: return RJ_ERROR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::Disconnected: return RJ_ERROR_DISCONNECTED;
    case ErrorCode::SingularL3: return RJ_ERROR_SINGULAR_L3;
    case ErrorCode::NotLaplacian: return RJ_ERROR_NOT_LAPLACIAN;
    case ErrorCode::SingularShift: return RJ_ERROR_SINGULAR_SHIFT;
    case ErrorCode::NotRegular: return RJ_ERROR_NOT_REGULAR;
    case ErrorCode::BadIndex: return RJ_ERROR_BAD_INDEX;
    case ErrorCode::Parse: return RJ_ERROR_PARSE;
    case ErrorCode::NotSymmetric: return RJ_ERROR_NOT_SYMMETRIC;
    case ErrorCode::Io: return RJ_ERROR_IO;
    case ErrorCode::InvalidArgument: return RJ_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return RJ_ERROR_INTERNAL;
    }
    return RJ_ERROR_INTERNAL;
}

template <typename Fn>
rj_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return RJ_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return RJ_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RJ_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rj_status require(bool ok, const char* message) {
    if (ok) return RJ_OK;
    t_last_error = message;
    return RJ_ERROR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* rj_version(void) { return "1.0.0"; }

const char* rj_status_name(rj_status status) {
    switch (status) {
    case RJ_OK: return "ok";
    case RJ_ERROR_LOOP_EDGE: return "loop_edge";
    case RJ_ERROR_DUPLICATE_EDGE: return "duplicate_edge";
    case RJ_ERROR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case RJ_ERROR_BAD_PARAMS: return "bad_params";
    case RJ_ERROR_NOT_POSITIVE_DEFINITE: return "not_positive_definite";
    case RJ_ERROR_DISCONNECTED: return "disconnected";
    case RJ_ERROR_SINGULAR_L3: return "singular_l3";
    case RJ_ERROR_NOT_LAPLACIAN: return "not_laplacian";
    case RJ_ERROR_SINGULAR_SHIFT: return "singular_shift";
    case RJ_ERROR_NOT_REGULAR: return "not_regular";
    case RJ_ERROR_BAD_INDEX: return "bad_index";
    case RJ_ERROR_PARSE: return "parse_error";
    case RJ_ERROR_NOT_SYMMETRIC: return "not_symmetric";
    case RJ_ERROR_IO: return "io_error";
    case RJ_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case RJ_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* rj_last_error(void) { return t_last_error.c_str(); }

void rj_string_free(char* s) { delete[] s; }

rj_status rj_graph_from_edge_list(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                                  rj_graph** out) {
    if (auto bad = require(out && (endpoints || edge_count == 0), "null argument")) return bad;
    return guarded([&] {
        std::vector<Edge> pairs;
        pairs.reserve(edge_count);
        for (size_t k = 0; k < edge_count; ++k)
            pairs.emplace_back(static_cast<int>(endpoints[2 * k]),
                               static_cast<int>(endpoints[2 * k + 1]));
        *out = new rj_graph{as_plain(Graph::from_edge_list(static_cast<int>(n), pairs))};
    });
}

rj_status rj_graph_from_spec(const char* spec, rj_graph** out) {
    if (auto bad = require(spec && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_graph{as_plain(parse_graph_spec(spec))}; });
}

rj_status rj_graph_read_file(const char* path, rj_graph** out) {
    if (auto bad = require(path && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_graph{as_plain(read_edge_list_file(path))}; });
}

rj_status rj_graph_write_file(const rj_graph* g, const char* path) {
    if (auto bad = require(g && path, "null argument")) return bad;
    return guarded([&] { write_edge_list_file(g->g.graph, path); });
}

rj_status rj_graph_format_edge_list(const rj_graph* g, char** out) {
    if (auto bad = require(g && out, "null argument")) return bad;
    return guarded([&] { *out = copy_string(format_edge_list(g->g.graph)); });
}

void rj_graph_free(rj_graph* g) { delete g; }

uint32_t rj_graph_order(const rj_graph* g) { return g ? g->g.graph.order() : 0; }

uint32_t rj_graph_size(const rj_graph* g) { return g ? g->g.graph.size() : 0; }

rj_status rj_graph_edge(const rj_graph* g, uint32_t k, uint32_t* i, uint32_t* j) {
    if (auto bad = require(g && i && j, "null argument")) return bad;
    return guarded([&] {
        const Edge& e = g->g.graph.edge(static_cast<int>(k));
        *i = e.first;
        *j = e.second;
    });
}

rj_status rj_graph_degree(const rj_graph* g, uint32_t v, uint32_t* out) {
    if (auto bad = require(g && out, "null argument")) return bad;
    return guarded([&] { *out = g->g.graph.degree(static_cast<int>(v)); });
}

int rj_graph_is_connected(const rj_graph* g) { return g && g->g.graph.is_connected() ? 1 : 0; }

int32_t rj_graph_regular_degree(const rj_graph* g) {
    if (!g) return -1;
    const auto d = g->g.graph.regular_degree();
    return d ? *d : -1;
}

rj_join_kind rj_graph_kind(const rj_graph* g) {
    if (!g) return RJ_KIND_PLAIN;
    switch (g->g.kind) {
    case JoinKind::Plain: return RJ_KIND_PLAIN;
    case JoinKind::Central: return RJ_KIND_CENTRAL;
    case JoinKind::Cvj: return RJ_KIND_CVJ;
    case JoinKind::Cej: return RJ_KIND_CEJ;
    }
    return RJ_KIND_PLAIN;
}

rj_vertex_class rj_graph_vertex_class(const rj_graph* g, uint32_t v) {
    if (!g || v >= g->g.labels.size()) return RJ_CLASS_PLAIN;
    switch (g->g.labels[v].cls) {
    case VertexClass::Plain: return RJ_CLASS_PLAIN;
    case VertexClass::G1Vertex: return RJ_CLASS_G1;
    case VertexClass::EdgeVertex: return RJ_CLASS_EDGE;
    case VertexClass::G2Vertex: return RJ_CLASS_G2;
    }
    return RJ_CLASS_PLAIN;
}

int32_t rj_graph_vertex_source(const rj_graph* g, uint32_t v) {
    if (!g || v >= g->g.labels.size()) return -1;
    return g->g.labels[v].source;
}

rj_status rj_central(const rj_graph* g, rj_graph** out) {
    if (auto bad = require(g && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_graph{central(g->g.graph)}; });
}

rj_status rj_central_vertex_join(const rj_graph* g1, const rj_graph* g2, rj_graph** out) {
    if (auto bad = require(g1 && g2 && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_graph{central_vertex_join(g1->g.graph, g2->g.graph)}; });
}

rj_status rj_central_edge_join(const rj_graph* g1, const rj_graph* g2, rj_graph** out) {
    if (auto bad = require(g1 && g2 && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_graph{central_edge_join(g1->g.graph, g2->g.graph)}; });
}

rj_status rj_resistance(const rj_graph* g, rj_engine engine, int check,
                        rj_resistance_report** out) {
    if (auto bad = require(g && out, "null argument")) return bad;
    return guarded([&] {
        std::optional<Engine> chosen;
        switch (engine) {
        case RJ_ENGINE_AUTO: break;
        case RJ_ENGINE_ORACLE: chosen = Engine::Oracle; break;
        case RJ_ENGINE_CLOSED_FORM: chosen = Engine::ClosedForm; break;
        case RJ_ENGINE_BLOCK_INVERSE: chosen = Engine::BlockInverse; break;
        }
        *out = new rj_resistance_report{resistance(g->g, chosen, check != 0)};
    });
}

void rj_resistance_report_free(rj_resistance_report* r) { delete r; }

uint32_t rj_resistance_order(const rj_resistance_report* r) {
    return r ? static_cast<uint32_t>(r->report.R.dim()) : 0;
}

rj_engine rj_resistance_engine(const rj_resistance_report* r) {
    if (!r) return RJ_ENGINE_AUTO;
    switch (r->report.engine) {
    case Engine::Oracle: return RJ_ENGINE_ORACLE;
    case Engine::ClosedForm: return RJ_ENGINE_CLOSED_FORM;
    case Engine::BlockInverse: return RJ_ENGINE_BLOCK_INVERSE;
    }
    return RJ_ENGINE_AUTO;
}

rj_status rj_resistance_entry(const rj_resistance_report* r, uint32_t i, uint32_t j, double* out) {
    if (auto bad = require(r && out, "null argument")) return bad;
    if (i >= r->report.R.dim() || j >= r->report.R.dim()) {
        t_last_error = "matrix index out of range";
        return RJ_ERROR_BAD_INDEX;
    }
    *out = r->report.R(i, j);
    return RJ_OK;
}

rj_status rj_resistance_matrix(const rj_resistance_report* r, double* buf, size_t buf_len) {
    if (auto bad = require(r && buf, "null argument")) return bad;
    const size_t need = r->report.R.dim() * r->report.R.dim();
    if (buf_len < need) {
        t_last_error = "buffer too small";
        return RJ_ERROR_BAD_PARAMS;
    }
    std::memcpy(buf, r->report.R.data().data(), need * sizeof(double));
    return RJ_OK;
}

int rj_resistance_oracle_deviation(const rj_resistance_report* r, double* out) {
    if (!r || !r->report.oracle_deviation) return 0;
    if (out) *out = *r->report.oracle_deviation;
    return 1;
}

rj_status rj_indices(const rj_graph* g, rj_index_report** out) {
    if (auto bad = require(g && out, "null argument")) return bad;
    return guarded([&] { *out = new rj_index_report{index_report(g->g)}; });
}

void rj_index_report_free(rj_index_report* r) { delete r; }

double rj_index_kirchhoff_from_r(const rj_index_report* r) {
    return r ? r->report.kirchhoff_from_R : 0.0;
}

double rj_index_kirchhoff_trace(const rj_index_report* r) {
    return r ? r->report.kirchhoff_trace : 0.0;
}

double rj_index_kemeny(const rj_index_report* r) { return r ? r->report.kemeny : 0.0; }

double rj_index_foster_residual(const rj_index_report* r) {
    return r ? r->report.foster_residual : 0.0;
}

size_t rj_index_reported_count(const rj_index_report* r) {
    return r ? r->report.reported.size() : 0;
}

rj_status rj_index_reported(const rj_index_report* r, size_t k, const char** tag,
                            double* reported, double* computed, double* deviation) {
    if (auto bad = require(r != nullptr, "null argument")) return bad;
    if (k >= r->report.reported.size()) {
        t_last_error = "reported-value index out of range";
        return RJ_ERROR_BAD_INDEX;
    }
    const ReportedValue& rv = r->report.reported[k];
    if (tag) *tag = rv.tag.c_str();
    if (reported) *reported = rv.reported;
    if (computed) *computed = rv.computed;
    if (deviation) *deviation = rv.deviation;
    return RJ_OK;
}

rj_status rj_index_report_json(const rj_index_report* r, char** out) {
    if (auto bad = require(r && out, "null argument")) return bad;
    return guarded([&] { *out = copy_string(index_report_json(r->report)); });
}

rj_status rj_verify(uint32_t max_n1, uint32_t max_n2, double tolerance, int fault_injection,
                    char** report_json, int* failure_count) {
    if (auto bad = require(report_json || failure_count, "null output arguments")) return bad;
    return guarded([&] {
        VerifyOptions options;
        options.max_n1 = static_cast<int>(max_n1);
        options.max_n2 = static_cast<int>(max_n2);
        options.tolerance = tolerance;
        options.inject_fault = fault_injection != 0;
        const VerifyReport report = run_verify(options);
        if (failure_count) *failure_count = report.failures;
        if (report_json) *report_json = copy_string(verify_report_json(report));
    });
}

rj_status rj_bench(const uint32_t* sizes, size_t size_count, char** csv) {
    if (auto bad = require(csv && (sizes || size_count == 0), "null argument")) return bad;
    return guarded([&] {
        std::vector<int> s(sizes, sizes + size_count);
        *csv = copy_string(bench_csv(run_bench(s)));
    });
}

} // extern "C"
