#pragma once

#include <functional>
#include <random>

#include "graph.hpp"

namespace resjoin {

/// All labeled graphs on n vertices (2^(n choose 2) edge subsets). Keep n
/// small; n = 7 is about two million graphs.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// Labeled connected graphs only; connectivity is decided on bitmasks before
/// any Graph is built.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

/// Labeled connected regular graphs.
void for_each_connected_regular_graph(int n, const std::function<void(const Graph&)>& fn);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937& rng);

/// Erdos-Renyi conditioned on connectivity (resamples until connected).
Graph random_connected_graph(int n, double p, std::mt19937& rng);

} // namespace resjoin
