#include "indices.hpp"

#include <cmath>
#include <limits>

#include "error.hpp"
#include "linalg.hpp"
#include "resistance.hpp"
#include "util.hpp"

namespace resjoin {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = 3.14159265358979323846;

Matrix spd_inverse(const SymMatrix& a) { return CholeskyFactor(a).inverse(); }

// (-L/2 + cI)^{-1}, the workhorse of the central-graph formulas.
Matrix half_laplacian_inverse(const Graph& g, double c) {
    const int n = g.order();
    Matrix s = -0.5 * g.laplacian().to_matrix() + c * Matrix::identity(n);
    return spd_inverse(SymMatrix::from_matrix(s));
}

std::vector<double> degree_vector(const Graph& g) {
    std::vector<double> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return d;
}

double quadratic_form(const std::vector<double>& v, const Matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * m(i, j) * v[j];
    return s;
}

bool is_cycle(const Graph& g) {
    return g.order() >= 3 && g.regular_degree() == 2 && g.is_connected();
}

bool is_balanced_complete_bipartite(const Graph& g, int* half) {
    const int n = g.order();
    if (n < 2 || n % 2 != 0) return false;
    const int p = n / 2;
    if (g.regular_degree() != p || g.size() != p * p) return false;
    if (!g.is_connected()) return false;
    // 2-color; every cross pair must be an edge, no same-color edge.
    std::vector<int> color(n, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    const auto adj = g.adjacency_lists();
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return false;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((color[i] != color[j]) != g.has_edge(i, j)) return false;
    *half = p;
    return true;
}

bool matches(const Graph& g, const Graph& reference) {
    // Order/size/degree-multiset match is enough for the tiny worked-example
    // operands this is used with (C4, K2).
    if (g.order() != reference.order() || g.size() != reference.size()) return false;
    auto a = g.degrees();
    auto b = reference.degrees();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && g.is_connected() == reference.is_connected();
}

} // namespace

double kirchhoff_from_resistance(const SymMatrix& r) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = i + 1; j < r.dim(); ++j) s += r(i, j);
    return s;
}

double kirchhoff_trace(const Graph& g) {
    const SymMatrix pinv = laplacian_pseudoinverse(g.laplacian());
    return static_cast<double>(g.order()) * pinv.trace();
}

double kirchhoff_from_one_inverse(const SymMatrix& x) {
    const std::size_t n = x.dim();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += x(i, j);
    return static_cast<double>(n) * x.trace() - total;
}

double kemeny(const Graph& g) {
    if (g.size() == 0) fail(ErrorCode::BadParams, "Kemeny's constant needs at least one edge");
    const SymMatrix r = resistance_oracle(g).R;
    const auto d = degree_vector(g);
    double s = 0.0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) s += d[i] * d[j] * r(i, j);
    return s / (4.0 * g.size());
}

double kemeny_spectral(const Graph& g) {
    if (g.size() == 0) fail(ErrorCode::BadParams, "Kemeny's constant needs at least one edge");
    if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph must be connected");
    const int n = g.order();
    const SymMatrix a = g.adjacency();
    SymMatrix norm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            norm.set(i, j, a(i, j) / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j)));
    auto ev = symmetric_eigenvalues(norm); // ascending; the top one is 1
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < ev.size(); ++k) s += 1.0 / (1.0 - ev[k]);
    return s;
}

KemenyCentral kemeny_central(const Graph& g) {
    if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph must be connected");
    const int n = g.order(), m = g.size();
    const LabeledJoinGraph c = central(g);
    const SymMatrix r = resistance_oracle(c.graph).R;

    KemenyCentral out;
    out.by_definition = kemeny(c.graph);

    // Stated class weights, applied to ordered class sums (cross pairs
    // counted in both directions, mirroring the definition's double sum).
    double vv = 0.0, ev = 0.0, ee = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vv += r(i, j);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < n; ++j) ev += r(n + k, j);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) ee += r(n + k, n + l);
    const double w = n - 1.0;
    out.by_class_weights = (4.0 * vv + 2.0 * w * (2.0 * ev) + w * w * ee) / (4.0 * m + 2.0 * n * w);
    out.difference = out.by_class_weights - out.by_definition;
    return out;
}

double foster_check(const Graph& g, const SymMatrix& r) {
    if (r.dim() != static_cast<std::size_t>(g.order()))
        fail(ErrorCode::BadParams, "resistance matrix order mismatch");
    double s = 0.0;
    for (const auto& [i, j] : g.edges()) s += r(i, j);
    return std::fabs(s - (g.order() - 1.0));
}

namespace {

double kf_central_expanded(const Graph& g) {
    const int n = g.order(), m = g.size();
    const Matrix h = half_laplacian_inverse(g, n);
    const auto alpha = degree_vector(g);
    double edge_entries = 0.0;
    for (const auto& [i, j] : g.edges()) edge_entries += h(i, j);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += h(i, i);
    return (m + n) * tr - 0.25 * quadratic_form(alpha, h) + m * (m + n - 1.0) / 2.0 -
           (2.0 * m + n) / n + (m + n) * (n - 1.0) / 4.0 + (m + n) / 4.0 * (4.0 * edge_entries);
}

double kf_central_regular(const Graph& g) {
    const int n = g.order();
    const int d = *g.regular_degree();
    const Matrix h = half_laplacian_inverse(g, n);
    double tr = 0.0, tr_qhq = 0.0;
    for (int i = 0; i < n; ++i) tr += h(i, i);
    for (const auto& [p, q] : g.edges()) tr_qhq += h(p, p) + h(q, q) + 2.0 * h(p, q);
    return n * (d + 2.0) / 2.0 * tr + n * (d + 2.0) / 8.0 * tr_qhq - d * (d + n) / 4.0 +
           n * n * d * (d + 2.0) / 8.0 - (d + 1.0);
}

double kf_central_cycle_series(int n) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += 1.0 / ((n - 1.0) + std::cos(2.0 * kPi * k / n));
    return 4.0 * n * s + static_cast<double>(n) * n - 3.0;
}

double kf_central_bipartite_series(int n) {
    const double n3 = std::pow(n, 3);
    return (120.0 * std::pow(n, 4) + 168.0 * n3 - 157.0 * n3 - 164.0 * n + 488.0) / 120.0;
}

double kf_cvj_expanded(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), m1 = g1.size(), n2 = g2.order();
    const Matrix h = half_laplacian_inverse(g1, n1 + n2);
    Matrix gs = g2.laplacian().to_matrix() + static_cast<double>(n1) * Matrix::identity(n2);
    const Matrix gi = spd_inverse(SymMatrix::from_matrix(gs));
    const auto alpha = degree_vector(g1);

    double tr_h = 0.0, tr_g = 0.0, tr_qhq = 0.0;
    for (int i = 0; i < n1; ++i) tr_h += h(i, i);
    for (int j = 0; j < n2; ++j) tr_g += gi(j, j);
    for (const auto& [p, q] : g1.edges()) tr_qhq += h(p, p) + h(q, q) + 2.0 * h(p, q);

    const double nn = static_cast<double>(n1) * (n1 + n2);
    return (m1 + n1 + n2) *
               (tr_h + tr_g + 0.25 * tr_qhq + m1 / 2.0 - (m1 + n1) / nn) -
           0.25 * quadratic_form(alpha, h) + static_cast<double>(m1) * m1 / nn - m1 / 2.0 -
           static_cast<double>(n2) / n1;
}

double kf_cej_expanded(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), m1 = g1.size(), n2 = g2.order(), m2 = g2.size();
    const int d = *g1.regular_degree();
    const double s2 = n2 + 2.0;
    const double a = (n1 * s2 + n2 * d) / s2;
    const double b = -(n2 + 1.0) / s2;

    Matrix ns = b * g1.laplacian().to_matrix() + a * Matrix::identity(n1);
    const Matrix nm = spd_inverse(SymMatrix::from_matrix(ns));
    Matrix gs = g2.laplacian().to_matrix() + static_cast<double>(m1) * Matrix::identity(n2);
    const Matrix gi = spd_inverse(SymMatrix::from_matrix(gs));
    const auto alpha = degree_vector(g1);

    double tr_n = 0.0, tr_g = 0.0, tr_qnq = 0.0;
    for (int i = 0; i < n1; ++i) tr_n += nm(i, i);
    for (int j = 0; j < n2; ++j) tr_g += gi(j, j);
    for (const auto& [p, q] : g1.edges()) tr_qnq += nm(p, p) + nm(q, q) + 2.0 * nm(p, q);

    // M+ = N - J/(a n1); the quadratic form uses M+ as stated.
    Matrix m_pinv = nm - Matrix::ones(n1, n1, 1.0 / (a * n1));

    // The n2(n2+2)/(2 m2) term divides by the size of g2; for an edgeless g2
    // the expansion is undefined and the reported value is NaN.
    const double m2_term = (m2 == 0) ? kNan : n2 * s2 / (2.0 * m2);

    return (m1 + n1 + n2) * (tr_n + tr_g - 4.0 * m1 / (a * n1 * s2 * s2) +
                             tr_qnq / (s2 * s2) + (2.0 * m1 + n2) / (2.0 * s2) +
                             n2 / (2.0 * m1) - 1.0 / a) -
           (m1 + 2.0 * n2) / 2.0 - m2_term - quadratic_form(alpha, m_pinv) / (s2 * s2);
}

double computed_kf(JoinKind kind, const Graph& g1, const Graph* g2) {
    switch (kind) {
    case JoinKind::Central:
        return kirchhoff_from_resistance(resistance_oracle(central(g1).graph).R);
    case JoinKind::Cvj:
        return kirchhoff_from_resistance(resistance_oracle(central_vertex_join(g1, *g2).graph).R);
    case JoinKind::Cej:
        return kirchhoff_from_resistance(resistance_oracle(central_edge_join(g1, *g2).graph).R);
    case JoinKind::Plain:
        return kirchhoff_from_resistance(resistance_oracle(g1).R);
    }
    fail(ErrorCode::Internal, "unreachable");
}

ReportedValue make_reported(std::string tag, double reported, double computed) {
    return {std::move(tag), reported, computed, reported - computed};
}

} // namespace

ReportedValue reported_kirchhoff(JoinKind kind, const Graph& g1, const Graph* g2) {
    switch (kind) {
    case JoinKind::Central: {
        if (!g1.is_connected()) fail(ErrorCode::Disconnected, "graph must be connected");
        return make_reported("central_expanded_formula", kf_central_expanded(g1),
                             computed_kf(kind, g1, nullptr));
    }
    case JoinKind::Cvj: {
        if (!g2) fail(ErrorCode::BadParams, "central vertex join needs two graphs");
        if (!g1.is_connected()) fail(ErrorCode::Disconnected, "first operand must be connected");
        return make_reported("cvj_expanded_formula", kf_cvj_expanded(g1, *g2),
                             computed_kf(kind, g1, g2));
    }
    case JoinKind::Cej: {
        if (!g2) fail(ErrorCode::BadParams, "central edge join needs two graphs");
        if (!g1.is_connected()) fail(ErrorCode::Disconnected, "first operand must be connected");
        if (!g1.regular_degree())
            fail(ErrorCode::NotRegular, "edge-join formula needs a regular first operand");
        return make_reported("cej_expanded_formula", kf_cej_expanded(g1, *g2),
                             computed_kf(kind, g1, g2));
    }
    case JoinKind::Plain:
        fail(ErrorCode::BadParams, "no reported formula for a plain graph");
    }
    fail(ErrorCode::Internal, "unreachable");
}

std::vector<ReportedValue> collect_reported(JoinKind kind, const Graph& g1, const Graph* g2) {
    std::vector<ReportedValue> out;
    if (kind == JoinKind::Plain) return out;
    out.push_back(reported_kirchhoff(kind, g1, g2));
    const double computed = out.front().computed;

    if (kind == JoinKind::Central) {
        if (g1.regular_degree())
            out.push_back(make_reported("central_regular_formula", kf_central_regular(g1), computed));
        if (is_cycle(g1))
            out.push_back(make_reported("central_cycle_series",
                                        kf_central_cycle_series(g1.order()), computed));
        int half = 0;
        if (is_balanced_complete_bipartite(g1, &half))
            out.push_back(make_reported("central_bipartite_series",
                                        kf_central_bipartite_series(half), computed));
    } else if (g2) {
        // Worked-example scalars for C4 joined with K2.
        const bool c4k2 = matches(g1, Graph::cycle(4)) && matches(*g2, Graph::complete(2));
        if (kind == JoinKind::Cvj && c4k2)
            out.push_back(make_reported("cvj_reference_value", 30.15, computed));
        if (kind == JoinKind::Cej && c4k2)
            out.push_back(make_reported("cej_reference_value", 25.5, computed));
    }
    return out;
}

BoundCheck central_kf_bound(const Graph& g) {
    if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph must be connected");
    const int n = g.order(), m = g.size();
    int delta = 0;
    for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
    const Matrix h = half_laplacian_inverse(g, n);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += h(i, i);
    const double bound = (m + n) * (delta + 2.0) / 2.0 * tr + (m * (2.0 * m + n + 1.0) + 8.0) / 2.0 -
                         n * (n + 1.0) / 2.0 - 4.0 * m * (m + 2.0 * n) / (2.0 * n * n);
    const double kf = computed_kf(JoinKind::Central, g, nullptr);
    return {bound, kf <= bound + 1e-9};
}

IndexReport index_report(const LabeledJoinGraph& joined) {
    IndexReport rep;
    rep.kind = joined.kind;
    rep.order = joined.graph.order();

    const ResistanceReport rr = resistance(joined, std::nullopt, false);
    rep.kirchhoff_from_R = kirchhoff_from_resistance(rr.R);
    rep.kirchhoff_trace = kirchhoff_trace(joined.graph);
    rep.kemeny = kemeny(joined.graph);
    rep.foster_residual = foster_check(joined.graph, rr.R);
    rep.reported = collect_reported(joined.kind, joined.source1,
                                    joined.source2 ? &*joined.source2 : nullptr);
    if (joined.kind == JoinKind::Central) {
        rep.bound_check = central_kf_bound(joined.source1);
        rep.kemeny_central = kemeny_central(joined.source1);
    }
    return rep;
}

std::string index_report_json(const IndexReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    switch (report.kind) {
    case JoinKind::Plain: j["kind"] = "plain"; break;
    case JoinKind::Central: j["kind"] = "central"; break;
    case JoinKind::Cvj: j["kind"] = "cvj"; break;
    case JoinKind::Cej: j["kind"] = "cej"; break;
    }
    j["order"] = report.order;
    j["kirchhoff_from_R"] = json_num(report.kirchhoff_from_R);
    j["kirchhoff_trace"] = json_num(report.kirchhoff_trace);
    j["kemeny"] = json_num(report.kemeny);
    j["foster_residual"] = json_num(report.foster_residual);
    j["reported"] = nlohmann::json::array();
    for (const auto& rv : report.reported) {
        j["reported"].push_back({{"tag", rv.tag},
                                 {"reported", json_num(rv.reported)},
                                 {"computed", json_num(rv.computed)},
                                 {"deviation", json_num(rv.deviation)}});
    }
    if (report.bound_check)
        j["bound_check"] = {{"bound", json_num(report.bound_check->bound)},
                            {"holds", report.bound_check->holds}};
    if (report.kemeny_central)
        j["kemeny_central"] = {{"by_definition", json_num(report.kemeny_central->by_definition)},
                               {"by_class_weights", json_num(report.kemeny_central->by_class_weights)},
                               {"difference", json_num(report.kemeny_central->difference)}};
    return j.dump(2);
}

} // namespace resjoin
