#pragma once

#include <random>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace testutil {

// Erdos-Renyi sample, independent of the library's own PRNG.
inline chibound::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return chibound::Graph::from_edges(n, edges);
}

inline chibound::Graph klique(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return chibound::Graph::from_edges(n, edges);
}

} // namespace testutil
