#pragma once

#include <utility>
#include <vector>

#include "chibound/bitset.hpp"
#include "chibound/errors.hpp"

namespace chibound {

// Vertex sets are interpreted against a specific graph's universe 0..n-1.
using VertexSet = Bitset;

// Immutable simple undirected graph over dense vertices 0..n-1. Adjacency
// rows are bit-indexed sets; symmetry and irreflexivity hold by construction.
// All algorithms take read-only views, so values are safe to share across
// threads.
class Graph {
public:
    Graph() : n_(0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range 0.." + std::to_string(n - 1)
                                  + ": (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
            g.adj_[u].set(v);
            g.adj_[v].set(u);
        }
        return g;
    }

    // Adopts prebuilt adjacency rows; validates the Graph invariants.
    static Graph from_adjacency(std::vector<Bitset> adj) {
        int n = int(adj.size());
        for (int v = 0; v < n; ++v) {
            if (adj[v].universe() != n) throw input_error("adjacency row has wrong universe");
            if (adj[v].test(v)) throw input_error("self-loop at vertex " + std::to_string(v));
            for (int u = adj[v].first(); u >= 0; u = adj[v].next(u))
                if (!adj[u].test(v)) throw input_error("asymmetric adjacency");
        }
        Graph g(n);
        g.adj_ = std::move(adj);
        return g;
    }

    int order() const { return n_; }

    long edge_count() const {
        long m = 0;
        for (const auto& row : adj_) m += row.count();
        return m / 2;
    }

    const Bitset& neighbours(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }

    int degree(int v) const { return adj_[v].count(); }

    Bitset closed_neighbourhood(int v) const {
        Bitset b = adj_[v];
        b.set(v);
        return b;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                e.emplace_back(u, v);
        return e;
    }

    // Induced subgraph on S. Vertices are renumbered in ascending order of
    // their old indices; old_of_new (if given) receives the reverse map.
    Graph induced(const VertexSet& s, std::vector<int>* old_of_new = nullptr) const {
        if (s.universe() != n_) throw input_error("vertex set universe mismatch");
        std::vector<int> old_ids = s.to_vector();
        int m = int(old_ids.size());
        Graph g(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (adjacent(old_ids[i], old_ids[j])) {
                    g.adj_[i].set(j);
                    g.adj_[j].set(i);
                }
        if (old_of_new) *old_of_new = std::move(old_ids);
        return g;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) {
                    g.adj_[u].set(v);
                    g.adj_[v].set(u);
                }
        return g;
    }

    // Vertices of `other` are shifted by this graph's order; no cross edges.
    Graph disjoint_union(const Graph& other) const {
        Graph g(n_ + other.n_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) {
                g.adj_[u].set(v);
                g.adj_[v].set(u);
            }
        for (int u = 0; u < other.n_; ++u)
            for (int v = other.adj_[u].next(u); v >= 0; v = other.adj_[u].next(v)) {
                g.adj_[u + n_].set(v + n_);
                g.adj_[v + n_].set(u + n_);
            }
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int n_;
    std::vector<Bitset> adj_;

    friend class GraphBuilder;
};

// Mutable scratch structure for generators; freeze() hands back an immutable
// Graph. Not thread safe.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n), adj_(n, Bitset(n)) {}

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbours(int v) const { return adj_[v]; }

    void add_edge(int u, int v) {
        assert(u != v);
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    Graph freeze() const {
        Graph g(n_);
        g.adj_ = adj_;
        return g;
    }

private:
    int n_;
    std::vector<Bitset> adj_;
};

inline void require_in_range(const Graph& g, const VertexSet& s, const char* name) {
    if (s.universe() != g.order())
        throw input_error(std::string(name) + ": vertex set universe mismatch");
}

// True iff every x in X is adjacent to every y in Y (vacuously true when
// either side is empty). X and Y must be disjoint.
inline bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    require_in_range(g, x, "is_complete_between");
    require_in_range(g, y, "is_complete_between");
    if (x.intersects(y)) throw input_error("is_complete_between: sets overlap");
    for (int u = x.first(); u >= 0; u = x.next(u))
        if (!y.is_subset_of(g.neighbours(u))) return false;
    return true;
}

// True iff no edges run between X and Y.
inline bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    require_in_range(g, x, "is_anticomplete_between");
    require_in_range(g, y, "is_anticomplete_between");
    if (x.intersects(y)) throw input_error("is_anticomplete_between: sets overlap");
    for (int u = x.first(); u >= 0; u = x.next(u))
        if (y.intersects(g.neighbours(u))) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        Bitset rest = s;
        rest.reset(u);
        if (!rest.is_subset_of(g.neighbours(u))) return false;
    }
    return true;
}

inline bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u))
        if (s.intersects(g.neighbours(u))) return false;
    return true;
}

} // namespace chibound
