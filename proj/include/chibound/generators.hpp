#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// Marsaglia xorshift64* — small and fully specified, so fixtures reproduce
// bit-for-bit anywhere.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // uniform in [0, bound)
    uint64_t next_below(uint64_t bound) { return bound ? next() % bound : 0; }

    // uniform in [0, 1)
    double next_unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Stable per-instance seed stream for fuzz batches.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Standard Mycielski construction: shadow vertex u+n copies u's adjacency to
// the originals, and a hub 2n is complete to the shadows. Order 2n+1,
// triangle count preserved at zero, chromatic number raised by one.
inline Graph mycielskian(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<std::pair<int, int>> out = edges;
    for (auto [u, v] : edges) {
        out.emplace_back(u + n, v);
        out.emplace_back(v + n, u);
    }
    for (int u = 0; u < n; ++u) out.emplace_back(u + n, 2 * n);
    return Graph::from_edges(2 * n + 1, out);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

// The 11-vertex Mycielskian of C5.
inline Graph grotzsch() { return mycielskian(cycle(5)); }

// K_n sharing the edge {0,1} with a five-cycle 0,n,n+1,n+2,1.
inline Graph h_n(int n) {
    if (n < 4) throw input_error("h_n requires n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    edges.emplace_back(0, n);
    edges.emplace_back(n, n + 1);
    edges.emplace_back(n + 1, n + 2);
    edges.emplace_back(n + 2, 1);
    return Graph::from_edges(n + 3, edges);
}

// Intersection graph of the 27 lines on a cubic surface in double-six
// labelling: a_1..a_6, b_1..b_6, c_ij (i<j). Two lines are adjacent iff they
// meet. Strongly regular with parameters (27,10,1,5).
inline Graph schlafli_complement() {
    // vertex ids: a_i -> i-1, b_i -> 5+i, c_ij -> 12 + rank(ij)
    auto cid = [](int i, int j) { // 1 <= i < j <= 6
        int rank = 0;
        for (int p = 1; p <= 6; ++p)
            for (int q = p + 1; q <= 6; ++q) {
                if (p == i && q == j) return 12 + rank;
                ++rank;
            }
        return -1;
    };
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) {
                int u = i - 1, v = 5 + j;
                if (u < v) edges.emplace_back(u, v); // a_i meets b_j iff i != j
            }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            edges.emplace_back(i - 1, cid(i, j)); // a_i meets c_ij
            edges.emplace_back(j - 1, cid(i, j));
            edges.emplace_back(5 + i, cid(i, j)); // b_i meets c_ij
            edges.emplace_back(5 + j, cid(i, j));
        }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                for (int l = k + 1; l <= 6; ++l) {
                    if (cid(i, j) >= cid(k, l)) continue;
                    if (i != k && i != l && j != k && j != l)
                        edges.emplace_back(cid(i, j), cid(k, l)); // disjoint index pairs meet
                }
    return Graph::from_edges(27, edges);
}

namespace detail {

// After adding the edge (u,v) to a graph that was diamond-free, any new
// induced diamond must contain both endpoints.
inline bool diamond_touching(const GraphBuilder& b, int u, int v) {
    int n = b.order();
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        for (int x = w + 1; x < n; ++x) {
            if (x == u || x == v) continue;
            int e = 1 + int(b.adjacent(u, w)) + int(b.adjacent(u, x)) + int(b.adjacent(v, w))
                    + int(b.adjacent(v, x)) + int(b.adjacent(w, x));
            if (e == 5) return true;
        }
    }
    return false;
}

// Is there an edge of b anticomplete to the closed neighbourhood of the path?
inline bool p2_partner_exists(const GraphBuilder& b, int p1, int p2, int p3, int p4) {
    int n = b.order();
    Bitset blocked(n);
    for (int p : {p1, p2, p3, p4}) {
        blocked |= b.neighbours(p);
        blocked.set(p);
    }
    Bitset free = Bitset::full(n);
    free -= blocked;
    for (int a = free.first(); a >= 0; a = free.next(a))
        if ((b.neighbours(a) & free).next(a) >= 0) return true;
    return false;
}

// Any new P2 u P4 after adding (u,v) uses that edge, either as the P2 or as a
// consecutive pair inside the P4.
inline bool p2p4_touching(const GraphBuilder& b, int u, int v) {
    int n = b.order();
    // (u,v) as the P2: look for an induced P4 avoiding N[u] u N[v]
    {
        Bitset free = Bitset::full(n);
        free -= b.neighbours(u);
        free -= b.neighbours(v);
        free.reset(u);
        free.reset(v);
        // direct scan for an induced P4 within `free`
        for (int p1 = free.first(); p1 >= 0; p1 = free.next(p1)) {
            Bitset n1 = b.neighbours(p1) & free;
            for (int p2 = n1.first(); p2 >= 0; p2 = n1.next(p2)) {
                Bitset c3 = (b.neighbours(p2) & free) - b.neighbours(p1);
                for (int p3 = c3.first(); p3 >= 0; p3 = c3.next(p3)) {
                    if (p3 == p1) continue;
                    Bitset c4 = (b.neighbours(p3) & free) - b.neighbours(p1);
                    c4 -= b.neighbours(p2);
                    if (c4.next(p1) >= 0) {
                        int p4 = c4.next(p1);
                        if (p4 == p2) p4 = c4.next(p4);
                        if (p4 >= 0) return true;
                    }
                }
            }
        }
    }
    // (u,v) as the middle edge of the P4: w-u-v-x
    {
        Bitset ws = b.neighbours(u) - b.neighbours(v);
        ws.reset(v);
        Bitset xs = b.neighbours(v) - b.neighbours(u);
        xs.reset(u);
        for (int w = ws.first(); w >= 0; w = ws.next(w))
            for (int x = xs.first(); x >= 0; x = xs.next(x))
                if (w != x && !b.adjacent(w, x) && p2_partner_exists(b, w, u, v, x))
                    return true;
    }
    // (u,v) as an end edge, the path continuing past either endpoint:
    // far-near-w-x
    for (int pass = 0; pass < 2; ++pass) {
        int far = pass ? v : u, near = pass ? u : v;
        Bitset ws = b.neighbours(near) - b.neighbours(far);
        ws.reset(far);
        for (int w = ws.first(); w >= 0; w = ws.next(w)) {
            Bitset xs = b.neighbours(w) - b.neighbours(near);
            xs -= b.neighbours(far);
            xs.reset(near);
            xs.reset(far);
            for (int x = xs.first(); x >= 0; x = xs.next(x))
                if (p2_partner_exists(b, far, near, w, x)) return true;
        }
    }
    return false;
}

} // namespace detail

// Seeded sampler over the class. One or two cliques are planted first (their
// sizes scale with p), then every remaining candidate edge is visited in a
// shuffled order and kept with probability p unless it completes a forbidden
// induced subgraph; such additions are reverted on the spot. The planted
// cliques are in-class and every kept addition preserves membership, so the
// result is always in-class, and the construction is a pure function of
// (n, p, seed). p = 0 yields the edgeless graph.
inline Graph random_in_class(int n, double p, uint64_t seed) {
    if (n < 0) throw input_error("random_in_class: n must be non-negative");
    if (p < 0.0 || p > 1.0) throw input_error("random_in_class: p must lie in [0,1]");
    GraphBuilder b(n);
    Xorshift64Star rng(seed);
    if (p > 0.0 && n >= 2) {
        int cap = std::min<int>(n, 1 + int(std::ceil(8.0 * p)));
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        rng.shuffle(ids);
        int m1 = 1 + int(rng.next_below(uint64_t(cap)));
        for (int i = 0; i < m1; ++i)
            for (int j = i + 1; j < m1; ++j) b.add_edge(ids[i], ids[j]);
        // sometimes plant a second, disjoint clique to reach richer shapes
        if (rng.next_below(2) == 0 && n - m1 >= 3 && cap >= 3) {
            int m2 = 3 + int(rng.next_below(uint64_t(std::min(cap, n - m1) - 2)));
            for (int i = m1; i < m1 + m2; ++i)
                for (int j = i + 1; j < m1 + m2; ++j) b.add_edge(ids[i], ids[j]);
        }
    }
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    rng.shuffle(candidates);
    for (auto [u, v] : candidates) {
        if (b.adjacent(u, v)) continue;
        if (rng.next_unit() >= p) continue;
        b.add_edge(u, v);
        if (detail::diamond_touching(b, u, v) || detail::p2p4_touching(b, u, v))
            b.remove_edge(u, v);
    }
    return b.freeze();
}

// Random cotree evaluated to a graph; P4-free by construction.
inline Graph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw input_error("random_cograph: n must be positive");
    Xorshift64Star rng(seed);
    GraphBuilder b(n);
    // recursively split [lo, hi) into blocks, alternating union/join
    struct Frame {
        int lo, hi;
        bool join;
    };
    std::vector<Frame> stack{{0, n, rng.next_below(2) == 0}};
    while (!stack.empty()) {
        auto [lo, hi, join] = stack.back();
        stack.pop_back();
        int size = hi - lo;
        if (size <= 1) continue;
        int parts = 2 + int(rng.next_below(uint64_t(std::max(1, size - 1))));
        parts = std::min(parts, size);
        // cut points
        std::vector<int> cuts{lo};
        std::vector<int> pool;
        for (int i = lo + 1; i < hi; ++i) pool.push_back(i);
        rng.shuffle(pool);
        for (int i = 0; i < parts - 1; ++i) cuts.push_back(pool[i]);
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(hi);
        if (join)
            for (size_t a = 0; a + 1 < cuts.size(); ++a)
                for (size_t c = a + 1; c + 1 < cuts.size(); ++c)
                    for (int x = cuts[a]; x < cuts[a + 1]; ++x)
                        for (int y = cuts[c]; y < cuts[c + 1]; ++y) b.add_edge(x, y);
        for (size_t a = 0; a + 1 < cuts.size(); ++a)
            stack.push_back({cuts[a], cuts[a + 1], !join});
    }
    return b.freeze();
}

} // namespace chibound
