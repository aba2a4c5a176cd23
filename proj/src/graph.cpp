#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace resjoin {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degrees_(n, 0) {
    for (const auto& [i, j] : edges_) {
        ++degrees_[i];
        ++degrees_[j];
    }
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n <= 0) fail(ErrorCode::BadParams, "vertex count must be positive");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
        if (i == j) fail(ErrorCode::LoopEdge, "self-loops are not allowed");
        if (i > j) std::swap(i, j);
        edges.emplace_back(i, j);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorCode::DuplicateEdge, "duplicate edge");
    return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
    if (n < 1) fail(ErrorCode::BadParams, "path needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) fail(ErrorCode::BadParams, "cycle needs at least three vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}

Graph Graph::complete(int n) {
    if (n < 1) fail(ErrorCode::BadParams, "complete graph needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edge_list(n, e);
}

Graph Graph::complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) fail(ErrorCode::BadParams, "both parts need at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return from_edge_list(p + q, e);
}

const Edge& Graph::edge(int k) const {
    if (k < 0 || k >= size()) fail(ErrorCode::BadIndex, "edge index out of range");
    return edges_[k];
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) fail(ErrorCode::BadIndex, "vertex index out of range");
    return degrees_[v];
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    const auto adj = adjacency_lists();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const int d = degrees_[0];
    for (int v = 1; v < n_; ++v)
        if (degrees_[v] != d) return std::nullopt;
    return d;
}

SymMatrix Graph::adjacency() const {
    SymMatrix a(n_);
    for (const auto& [i, j] : edges_) a.set(i, j, 1.0);
    return a;
}

SymMatrix Graph::laplacian() const {
    SymMatrix l(n_);
    for (int v = 0; v < n_; ++v) l.set(v, v, degrees_[v]);
    for (const auto& [i, j] : edges_) l.set(i, j, -1.0);
    return l;
}

Matrix Graph::incidence() const {
    Matrix q(n_, edges_.size());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        q(edges_[k].first, k) = 1.0;
        q(edges_[k].second, k) = 1.0;
    }
    return q;
}

namespace {

// Shared construction core: C(g1), optionally joined with g2 on the original
// vertices (cvj) or on the subdivision vertices (cej).
LabeledJoinGraph build_join(JoinKind kind, const Graph& g1, const Graph* g2) {
    const int n1 = g1.order(), m1 = g1.size();
    const int n2 = g2 ? g2->order() : 0;
    const int total = n1 + m1 + n2;

    std::vector<Edge> edges;
    for (int k = 0; k < m1; ++k) {
        edges.emplace_back(g1.edge(k).first, n1 + k);
        edges.emplace_back(g1.edge(k).second, n1 + k);
    }
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            if (!g1.has_edge(i, j)) edges.emplace_back(i, j);
    if (g2) {
        const int off = n1 + m1;
        for (const auto& [i, j] : g2->edges()) edges.emplace_back(off + i, off + j);
        if (kind == JoinKind::Cvj) {
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j) edges.emplace_back(i, off + j);
        } else {
            for (int k = 0; k < m1; ++k)
                for (int j = 0; j < n2; ++j) edges.emplace_back(n1 + k, off + j);
        }
    }

    LabeledJoinGraph out{Graph::from_edge_list(total, edges), kind, {}, g1, std::nullopt};
    out.labels.reserve(total);
    for (int i = 0; i < n1; ++i) out.labels.push_back({VertexClass::G1Vertex, i});
    for (int k = 0; k < m1; ++k) out.labels.push_back({VertexClass::EdgeVertex, k});
    for (int j = 0; j < n2; ++j) out.labels.push_back({VertexClass::G2Vertex, j});
    if (g2) out.source2 = *g2;
    return out;
}

} // namespace

LabeledJoinGraph central(const Graph& g) { return build_join(JoinKind::Central, g, nullptr); }

LabeledJoinGraph central_vertex_join(const Graph& g1, const Graph& g2) {
    return build_join(JoinKind::Cvj, g1, &g2);
}

LabeledJoinGraph central_edge_join(const Graph& g1, const Graph& g2) {
    return build_join(JoinKind::Cej, g1, &g2);
}

LabeledJoinGraph as_plain(const Graph& g) {
    LabeledJoinGraph out{g, JoinKind::Plain, {}, g, std::nullopt};
    out.labels.assign(g.order(), VertexLabel{});
    return out;
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) fail(ErrorCode::Parse, "expected header line \"n m\"");
    if (m < 0) fail(ErrorCode::Parse, "negative edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int i = 0, j = 0;
        if (!(in >> i >> j)) fail(ErrorCode::Parse, "truncated edge list");
        edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    out << format_edge_list(g);
    if (!out) fail(ErrorCode::Io, "write to " + path + " failed");
}

Graph parse_graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::Parse, "graph spec needs the form kind:params, got \"" + spec + "\"");
    const std::string kind = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (kind == "file") return read_edge_list_file(params);

    auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            fail(ErrorCode::Parse, "bad integer \"" + s + "\" in graph spec");
        }
        if (pos != s.size()) fail(ErrorCode::Parse, "bad integer \"" + s + "\" in graph spec");
        return v;
    };

    if (kind == "kbip") {
        const auto comma = params.find(',');
        if (comma == std::string::npos) fail(ErrorCode::Parse, "kbip needs two parts: kbip:P,Q");
        return Graph::complete_bipartite(parse_int(params.substr(0, comma)),
                                         parse_int(params.substr(comma + 1)));
    }
    const int n = parse_int(params);
    if (kind == "path") return Graph::path(n);
    if (kind == "cycle") return Graph::cycle(n);
    if (kind == "complete") return Graph::complete(n);
    fail(ErrorCode::Parse, "unknown graph family \"" + kind + "\"");
}

} // namespace resjoin
