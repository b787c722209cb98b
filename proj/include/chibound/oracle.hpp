#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <vector>

#include "chibound/colouring.hpp"
#include "chibound/graph.hpp"
#include "chibound/witness.hpp"

// Exact brute-force ground truth. Deliberately shares nothing with the
// recognition/engine modules beyond graph-core, so agreement between the two
// paths is meaningful evidence.

namespace chibound::oracle {

struct ColouringCheck {
    bool proper;
    std::pair<int, int> offending_edge{-1, -1};
};

inline ColouringCheck verify_colouring(const Graph& g, const Colouring& c) {
    if (int(c.colour.size()) != g.order())
        throw input_error("verify_colouring: colouring is not total over V(G)");
    for (int v = 0; v < g.order(); ++v)
        if (c.colour[v] < 1) throw input_error("verify_colouring: uncoloured vertex "
                                               + std::to_string(v));
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.neighbours(u).next(u); v >= 0; v = g.neighbours(u).next(v))
            if (c.colour[u] == c.colour[v]) return {false, {u, v}};
    return {true, {-1, -1}};
}

inline int default_vertex_limit() {
    if (const char* env = std::getenv("CHIBOUND_ORACLE_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 32;
}

namespace detail {

// Exact chromatic number by branch and bound. Branches per vertex over the
// colours already in use plus one fresh colour, so colour classes appear in
// creation order and symmetric relabelings are never explored. Vertex
// selection is by saturation, ties by degree then index.
class ChiSearch {
public:
    ChiSearch(const Graph& g, const std::atomic<bool>* cancel)
        : g_(g), n_(g.order()), cancel_(cancel), colour_(n_, 0) {}

    int run() {
        if (n_ == 0) return 0;
        int lb = clique_heuristic();
        Colouring greedy = greedy_colouring();
        best_ = greedy.colours_used;
        if (best_ == lb) return best_;
        lb_ = lb;
        branch(0, 0);
        return best_;
    }

private:
    int clique_heuristic() const {
        int best = 0;
        std::vector<int> by_degree(n_);
        for (int i = 0; i < n_; ++i) by_degree[i] = i;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        for (int start : by_degree) {
            Bitset clique(n_);
            clique.set(start);
            Bitset cand = g_.neighbours(start);
            for (int v : by_degree)
                if (cand.test(v)) {
                    clique.set(v);
                    cand &= g_.neighbours(v);
                }
            best = std::max(best, clique.count());
        }
        return best;
    }

    Colouring greedy_colouring() const {
        // DSATUR greedy
        std::vector<int> colour(n_, 0);
        std::vector<Bitset> saturation(n_, Bitset(0));
        for (int v = 0; v < n_; ++v) saturation[v] = Bitset(n_ + 1);
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < n_; ++v) {
                if (colour[v]) continue;
                int sat = saturation[v].count();
                int deg = g_.degree(v);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            int c = 1;
            while (saturation[pick].test(c)) ++c;
            colour[pick] = c;
            used = std::max(used, c);
            for (int u = g_.neighbours(pick).first(); u >= 0; u = g_.neighbours(pick).next(u))
                saturation[u].set(c);
        }
        return {colour, used};
    }

    void branch(int coloured, int used) {
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) throw cancelled_error();
        if (best_ == lb_) return;
        if (used >= best_) return;
        if (coloured == n_) {
            best_ = used;
            return;
        }
        // saturation-maximal uncoloured vertex; ties by degree, then index
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v]) continue;
            int sat = distinct_neighbour_colours(v);
            int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<char> forbidden(size_t(n_) + 2, 0);
        for (int u = g_.neighbours(pick).first(); u >= 0; u = g_.neighbours(pick).next(u))
            if (colour_[u]) forbidden[colour_[u]] = true;
        int top = std::min(used + 1, best_ - 1);
        for (int c = 1; c <= top; ++c) {
            if (c <= used && forbidden[c]) continue;
            colour_[pick] = c;
            branch(coloured + 1, std::max(used, c));
            colour_[pick] = 0;
            if (best_ == lb_) return;
        }
    }

    int distinct_neighbour_colours(int v) const {
        std::vector<char> seen(size_t(n_) + 2, 0);
        int count = 0;
        for (int u = g_.neighbours(v).first(); u >= 0; u = g_.neighbours(v).next(u)) {
            int c = colour_[u];
            if (c && !seen[c]) {
                seen[c] = true;
                ++count;
            }
        }
        return count;
    }

    const Graph& g_;
    int n_;
    const std::atomic<bool>* cancel_;
    std::vector<int> colour_;
    int best_ = 0;
    int lb_ = 0;
};

} // namespace detail

inline int chromatic_number_exact(const Graph& g, int limit = -1,
                                  const std::atomic<bool>* cancel = nullptr) {
    if (limit < 0) limit = default_vertex_limit();
    if (g.order() > limit)
        throw size_error("chromatic_number_exact: " + std::to_string(g.order())
                         + " vertices exceeds limit " + std::to_string(limit));
    detail::ChiSearch search(g, cancel);
    return search.run();
}

// Exact clique number by enumerating all vertex subsets.
inline int max_clique_bruteforce(const Graph& g) {
    int n = g.order();
    if (n > 16) throw size_error("max_clique_bruteforce: limit is 16 vertices");
    std::vector<uint32_t> adj_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = g.neighbours(v).first(); u >= 0; u = g.neighbours(v).next(u))
            adj_mask[v] |= uint32_t(1) << u;
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool clique = true;
        for (uint32_t rest = s; clique && rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if ((s & ~(uint32_t(1) << v)) & ~adj_mask[v]) clique = false;
        }
        if (clique) best = size;
    }
    return best;
}

enum class Pattern { Diamond, P2UnionP4, Triangle };

// Exhaustive induced-pattern search over all subsets of the right size.
// Returns the lexicographically first witness subset, ordered per the
// Witness conventions.
inline std::optional<Witness> find_forbidden_by_enumeration(const Graph& g, Pattern pattern) {
    int n = g.order();
    if (n > 12) throw size_error("find_forbidden_by_enumeration: limit is 12 vertices");
    int want = pattern == Pattern::Triangle ? 3 : pattern == Pattern::Diamond ? 4 : 6;
    if (n < want) return std::nullopt;

    std::vector<int> idx(want);
    for (int i = 0; i < want; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
        int i = want - 1;
        while (i >= 0 && idx[i] == n - want + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };

    do {
        int edges = 0;
        for (int i = 0; i < want; ++i)
            for (int j = i + 1; j < want; ++j)
                if (g.adjacent(idx[i], idx[j])) ++edges;
        switch (pattern) {
        case Pattern::Triangle:
            if (edges == 3) return Witness{WitnessKind::Triangle, idx};
            break;
        case Pattern::Diamond:
            if (edges == 5) {
                int lo = -1, hi = -1;
                for (int i = 0; i < 4 && hi < 0; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (!g.adjacent(idx[i], idx[j])) {
                            lo = idx[i];
                            hi = idx[j];
                            break;
                        }
                std::vector<int> mids;
                for (int v : idx)
                    if (v != lo && v != hi) mids.push_back(v);
                return Witness{WitnessKind::Diamond,
                               {lo, std::min(mids[0], mids[1]), hi, std::max(mids[0], mids[1])}};
            }
            break;
        case Pattern::P2UnionP4: {
            if (edges != 4) break;
            // components must be an edge and a 4-path
            std::vector<int> deg(want, 0);
            for (int i = 0; i < want; ++i)
                for (int j = 0; j < want; ++j)
                    if (i != j && g.adjacent(idx[i], idx[j])) ++deg[i];
            std::vector<int> ends, mids;
            bool ok = true;
            for (int i = 0; i < want; ++i) {
                if (deg[i] == 1) ends.push_back(i);
                else if (deg[i] == 2) mids.push_back(i);
                else ok = false;
            }
            if (!ok || ends.size() != 4 || mids.size() != 2) break;
            if (!g.adjacent(idx[mids[0]], idx[mids[1]])) break; // P3+P3 shares the degree profile
            // locate the edge component: the degree-1 pair adjacent to each other
            int ea = -1, eb = -1;
            for (size_t i = 0; i < ends.size() && ea < 0; ++i)
                for (size_t j = i + 1; j < ends.size(); ++j)
                    if (g.adjacent(idx[ends[i]], idx[ends[j]])) {
                        ea = ends[i];
                        eb = ends[j];
                        break;
                    }
            if (ea < 0) break;
            std::vector<int> path_ends;
            for (int e : ends)
                if (e != ea && e != eb) path_ends.push_back(e);
            int p1 = idx[path_ends[0]], p4 = idx[path_ends[1]];
            if (p1 > p4) std::swap(p1, p4);
            int m0 = idx[mids[0]], m1 = idx[mids[1]];
            int p2 = g.adjacent(p1, m0) ? m0 : m1;
            int p3 = (p2 == m0) ? m1 : m0;
            if (!g.adjacent(p1, p2) || !g.adjacent(p3, p4)) break;
            return Witness{WitnessKind::P2UnionP4, {idx[ea], idx[eb], p1, p2, p3, p4}};
        }
        }
    } while (advance());
    return std::nullopt;
}

} // namespace chibound::oracle
