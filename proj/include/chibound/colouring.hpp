#pragma once

#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

// Total proper colouring candidate: colour[v] in 1..colours_used, every
// colour in that range used at least once. validate_colouring enforces this.
struct Colouring {
    std::vector<int> colour;
    int colours_used = 0;
};

inline void validate_colouring(const Graph& g, const Colouring& c) {
    if (int(c.colour.size()) != g.order())
        throw input_error("colouring is not total over V(G)");
    std::vector<bool> seen(c.colours_used + 1, false);
    int max_seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        int col = c.colour[v];
        if (col < 1 || col > c.colours_used)
            throw input_error("colour out of range at vertex " + std::to_string(v));
        seen[col] = true;
        if (col > max_seen) max_seen = col;
    }
    if (g.order() > 0) {
        if (max_seen != c.colours_used)
            throw input_error("colours_used does not equal the maximum assigned colour");
        for (int col = 1; col <= c.colours_used; ++col)
            if (!seen[col]) throw input_error("colour " + std::to_string(col) + " unused");
    } else if (c.colours_used != 0) {
        throw input_error("empty graph must use 0 colours");
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.neighbours(u).next(u); v >= 0; v = g.neighbours(u).next(v))
            if (c.colour[u] == c.colour[v])
                throw input_error("monochromatic edge (" + std::to_string(u) + ","
                                  + std::to_string(v) + ")");
}

} // namespace chibound
