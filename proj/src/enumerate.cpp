#include "enumerate.hpp"

#include <cstdint>

#include "error.hpp"

namespace resjoin {

namespace {

struct PairTable {
    std::vector<Edge> pairs;
    explicit PairTable(int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
};

// Connectivity on adjacency bitmasks; avoids building a Graph for the many
// disconnected subsets.
bool mask_connected(int n, const std::vector<std::uint32_t>& adj) {
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u; // enumeration caps n at 8
}

template <typename Filter>
void enumerate(int n, const std::function<void(const Graph&)>& fn, Filter&& keep) {
    if (n < 1 || n > 8) fail(ErrorCode::BadParams, "enumeration supports 1 <= n <= 8");
    const PairTable table(n);
    const std::uint64_t count = 1ull << table.pairs.size();
    std::vector<std::uint32_t> adj(n);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int v = 0; v < n; ++v) adj[v] = 0;
        edges.clear();
        for (std::size_t k = 0; k < table.pairs.size(); ++k) {
            if (mask >> k & 1ull) {
                const auto [i, j] = table.pairs[k];
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
                edges.push_back(table.pairs[k]);
            }
        }
        if (!keep(adj, edges)) continue;
        fn(Graph::from_edge_list(n, edges));
    }
}

} // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    enumerate(n, fn, [](const auto&, const auto&) { return true; });
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    enumerate(n, fn,
              [n](const std::vector<std::uint32_t>& adj, const auto&) {
                  return mask_connected(n, adj);
              });
}

void for_each_connected_regular_graph(int n, const std::function<void(const Graph&)>& fn) {
    enumerate(n, fn, [n](const std::vector<std::uint32_t>& adj, const std::vector<Edge>& edges) {
        if (!mask_connected(n, adj)) return false;
        if (edges.size() * 2 % n != 0) return false;
        std::vector<int> deg(n, 0);
        for (const auto& [i, j] : edges) {
            ++deg[i];
            ++deg[j];
        }
        for (int v = 1; v < n; ++v)
            if (deg[v] != deg[0]) return false;
        return true;
    });
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (g.is_connected()) return g;
    }
    fail(ErrorCode::Internal, "failed to sample a connected graph");
}

} // namespace resjoin
