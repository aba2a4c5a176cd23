#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace resjoin {

using Edge = std::pair<int, int>;

/// Simple undirected graph: vertex count plus a canonical edge list (i < j,
/// sorted lexicographically, no loops, no duplicates). Immutable after
/// construction; all matrix views are derived on demand.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int p, int q);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int k) const;

    bool has_edge(int i, int j) const;
    int degree(int v) const;
    const std::vector<int>& degrees() const { return degrees_; }
    std::vector<std::vector<int>> adjacency_lists() const;

    bool is_connected() const;
    /// Common degree when all degrees coincide, otherwise empty.
    std::optional<int> regular_degree() const;

    SymMatrix adjacency() const;
    SymMatrix laplacian() const;
    /// 0/1 vertex-by-edge matrix Q with Q Q^T = A + D; column k marks the
    /// endpoints of edge k.
    Matrix incidence() const;

private:
    Graph(int n, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

enum class VertexClass { Plain, G1Vertex, EdgeVertex, G2Vertex };

struct VertexLabel {
    VertexClass cls = VertexClass::Plain;
    int source = -1; // vertex index for G1/G2, edge index for EdgeVertex
};

enum class JoinKind { Plain, Central, Cvj, Cej };

/// A constructed graph together with per-vertex provenance. Vertex order is
/// fixed: G1 vertices in source order, then one subdivision vertex per G1
/// edge in canonical edge order, then G2 vertices. The resistance engines
/// rely on this layout.
struct LabeledJoinGraph {
    Graph graph;
    JoinKind kind = JoinKind::Plain;
    std::vector<VertexLabel> labels;
    Graph source1;
    std::optional<Graph> source2;

    int n1() const { return source1.order(); }
    int m1() const { return source1.size(); }
    int n2() const { return source2 ? source2->order() : 0; }
};

/// Subdivide every edge of g once and join all vertex pairs non-adjacent in g.
LabeledJoinGraph central(const Graph& g);
/// central(g1) with every original vertex of g1 joined to every vertex of g2.
LabeledJoinGraph central_vertex_join(const Graph& g1, const Graph& g2);
/// central(g1) with every subdivision vertex joined to every vertex of g2.
LabeledJoinGraph central_edge_join(const Graph& g1, const Graph& g2);

/// Wraps a plain graph so engine dispatch can treat everything uniformly.
LabeledJoinGraph as_plain(const Graph& g);

// Edge-list text format: first line "n m", then m lines "i j" (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

/// Generator mini-grammar: path:N, cycle:N, complete:N, kbip:P,Q, file:PATH.
Graph parse_graph_spec(const std::string& spec);

} // namespace resjoin
