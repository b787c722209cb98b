#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/witness.hpp"

namespace chibound {

// All detectors scan in ascending vertex order and return the
// lexicographically first witness, so outputs are reproducible fixtures.

inline std::optional<Witness> find_triangle(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbours(u).next(u); v >= 0; v = g.neighbours(u).next(v)) {
            Bitset common = g.neighbours(u) & g.neighbours(v);
            int w = common.next(v);
            if (w >= 0) return Witness{WitnessKind::Triangle, {u, v, w}};
        }
    return std::nullopt;
}

// First 4-subset (lexicographic) inducing exactly five edges, i.e. a K4 minus
// one edge. Tuple order: P3 endpoints and middle first, apex last.
inline std::optional<Witness> find_induced_diamond(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int e3 = int(g.adjacent(a, b)) + int(g.adjacent(a, c)) + int(g.adjacent(b, c));
                if (e3 < 2) continue;
                for (int d = c + 1; d < n; ++d) {
                    int e = e3 + int(g.adjacent(a, d)) + int(g.adjacent(b, d))
                            + int(g.adjacent(c, d));
                    if (e != 5) continue;
                    int quad[4] = {a, b, c, d};
                    // the two endpoints of the missing edge have degree 2 here
                    int lo = -1, hi = -1;
                    for (int i = 0; i < 4 && hi < 0; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (!g.adjacent(quad[i], quad[j])) {
                                lo = quad[i];
                                hi = quad[j];
                                break;
                            }
                    std::vector<int> deg3;
                    for (int q : quad)
                        if (q != lo && q != hi) deg3.push_back(q);
                    return Witness{WitnessKind::Diamond,
                                   {lo, std::min(deg3[0], deg3[1]), hi,
                                    std::max(deg3[0], deg3[1])}};
                }
            }
    return std::nullopt;
}

// Enumerates induced P4s p1-p2-p3-p4 with p1 < p4 in ascending nested order.
// Calls f(p1,p2,p3,p4); stops early when f returns true.
template <typename F>
inline void for_each_induced_p4(const Graph& g, F&& f) {
    int n = g.order();
    for (int p1 = 0; p1 < n; ++p1) {
        const Bitset& n1 = g.neighbours(p1);
        for (int p2 = n1.first(); p2 >= 0; p2 = n1.next(p2)) {
            Bitset c3 = g.neighbours(p2);
            c3 -= n1;
            for (int p3 = c3.first(); p3 >= 0; p3 = c3.next(p3)) {
                if (p3 == p1) continue;
                Bitset c4 = g.neighbours(p3);
                c4 -= n1;
                c4 -= g.neighbours(p2);
                for (int p4 = c4.next(p1); p4 >= 0; p4 = c4.next(p4)) {
                    if (p4 == p2) continue;
                    if (f(p1, p2, p3, p4)) return;
                }
            }
        }
    }
}

inline std::optional<Witness> find_p4_free_violation(const Graph& g) {
    std::optional<Witness> out;
    for_each_induced_p4(g, [&](int a, int b, int c, int d) {
        out = Witness{WitnessKind::P4, {a, b, c, d}};
        return true;
    });
    return out;
}

// P4-first search: enumerate induced P4s, then look for an edge anticomplete
// to the P4's closed neighbourhood. The witness doubles as a diagnostic.
inline std::optional<Witness> find_induced_p2p4(const Graph& g) {
    std::optional<Witness> out;
    for_each_induced_p4(g, [&](int p1, int p2, int p3, int p4) {
        Bitset blocked = g.closed_neighbourhood(p1);
        blocked |= g.closed_neighbourhood(p2);
        blocked |= g.closed_neighbourhood(p3);
        blocked |= g.closed_neighbourhood(p4);
        Bitset free = Bitset::full(g.order());
        free -= blocked;
        for (int a = free.first(); a >= 0; a = free.next(a)) {
            Bitset partners = g.neighbours(a) & free;
            int b = partners.next(a);
            if (b >= 0) {
                out = Witness{WitnessKind::P2UnionP4, {a, b, p1, p2, p3, p4}};
                return true;
            }
        }
        return false;
    });
    return out;
}

inline MembershipVerdict class_membership(const Graph& g) {
    if (auto d = find_induced_diamond(g)) return {false, d};
    if (auto p = find_induced_p2p4(g)) return {false, p};
    return {true, std::nullopt};
}

namespace detail {

// Branch and bound on clique size with a greedy-colouring upper bound.
// Deterministic: candidates are processed in the order produced by the
// ascending-index greedy colouring.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    int size_within(const Bitset& candidates, int stop_at = -1) {
        best_ = 0;
        stop_at_ = stop_at;
        expand(0, candidates);
        return best_;
    }

private:
    void expand(int depth, const Bitset& p) {
        if (stop_at_ >= 0 && best_ >= stop_at_) return;
        if (p.none()) {
            if (depth > best_) best_ = depth;
            return;
        }
        // greedy colouring of p: bound for a vertex is its colour class index
        std::vector<int> order, bound;
        Bitset left = p;
        int colour = 0;
        while (left.any()) {
            ++colour;
            Bitset avail = left;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                bound.push_back(colour);
                left.reset(v);
                avail.reset(v);
                avail -= g_.neighbours(v);
            }
        }
        Bitset rest = p;
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[i] <= best_) return;
            int v = order[i];
            Bitset next = rest & g_.neighbours(v);
            expand(depth + 1, next);
            if (stop_at_ >= 0 && best_ >= stop_at_) return;
            rest.reset(v);
        }
    }

    const Graph& g_;
    int best_ = 0;
    int stop_at_ = -1;
};

} // namespace detail

inline int max_clique_size(const Graph& g) {
    detail::MaxCliqueSearch search(g);
    return search.size_within(Bitset::full(g.order()));
}

// Lexicographically-first maximum clique: commit ascending vertices greedily,
// keeping a vertex iff a maximum clique through the current prefix survives.
inline VertexSet max_clique(const Graph& g) {
    detail::MaxCliqueSearch search(g);
    int target = search.size_within(Bitset::full(g.order()));
    Bitset chosen(g.order());
    Bitset candidates = Bitset::full(g.order());
    int have = 0;
    for (int v = candidates.first(); v >= 0 && have < target; v = candidates.next(v)) {
        Bitset rest = candidates & g.neighbours(v);
        // keep only candidates after v so the clique is built in ascending order
        Bitset tail = rest;
        for (int u = tail.first(); u >= 0 && u <= v; u = tail.next(u)) tail.reset(u);
        int need = target - have - 1;
        if (need == 0 || search.size_within(tail, need) >= need) {
            chosen.set(v);
            ++have;
            candidates = tail;
            v = -1; // restart scan from the beginning of the pruned candidates
        }
    }
    return chosen;
}

// Constructive path-through-two-cliques finder. X and Y are disjoint cliques
// with min(|X|,|Y|)>=2, max(|X|,|Y|)>=3, and the edges between them form a
// nonempty matching. Returns an induced P4 inside G[X u Y] whose vertex set
// contains both x and y.
inline Witness find_p4_across_matched_cliques(const Graph& g, const VertexSet& x_set,
                                              const VertexSet& y_set, int x, int y) {
    require_in_range(g, x_set, "find_p4_across_matched_cliques");
    require_in_range(g, y_set, "find_p4_across_matched_cliques");
    if (x_set.intersects(y_set))
        throw input_error("find_p4_across_matched_cliques: cliques overlap");
    if (!is_clique(g, x_set)) throw input_error("find_p4_across_matched_cliques: X is not a clique");
    if (!is_clique(g, y_set)) throw input_error("find_p4_across_matched_cliques: Y is not a clique");
    int nx = x_set.count(), ny = y_set.count();
    if (std::min(nx, ny) < 2)
        throw input_error("find_p4_across_matched_cliques: min(|X|,|Y|) < 2");
    if (std::max(nx, ny) < 3)
        throw input_error("find_p4_across_matched_cliques: max(|X|,|Y|) < 3");
    if (!x_set.test(x)) throw input_error("find_p4_across_matched_cliques: x not in X");
    if (!y_set.test(y)) throw input_error("find_p4_across_matched_cliques: y not in Y");
    bool nonempty = false;
    for (int u = x_set.first(); u >= 0; u = x_set.next(u)) {
        Bitset hits = g.neighbours(u) & y_set;
        if (hits.count() > 1)
            throw input_error("find_p4_across_matched_cliques: [X,Y] is not a matching");
        if (hits.any()) nonempty = true;
    }
    for (int v = y_set.first(); v >= 0; v = y_set.next(v))
        if ((g.neighbours(v) & x_set).count() > 1)
            throw input_error("find_p4_across_matched_cliques: [X,Y] is not a matching");
    if (!nonempty)
        throw input_error("find_p4_across_matched_cliques: matching is empty");

    // work with the side of size >= 3 as X
    const VertexSet* X = &x_set;
    const VertexSet* Y = &y_set;
    int qx = x, qy = y;
    if (nx < 3) {
        std::swap(X, Y);
        std::swap(qx, qy);
    }

    auto witness = [&](int a, int b, int c, int d) {
        return Witness{WitnessKind::P4, {a, b, c, d}};
    };

    Bitset x_hits = g.neighbours(qx) & *Y;
    if (x_hits.none()) {
        Bitset y_hits = g.neighbours(qy) & *X;
        if (y_hits.none()) {
            // both query vertices unmatched: route through any matching edge
            for (int u = X->first(); u >= 0; u = X->next(u)) {
                Bitset m = g.neighbours(u) & *Y;
                if (m.any()) return witness(qx, u, m.first(), qy);
            }
        } else {
            // x unmatched, y matched to some u in X
            int u = y_hits.first();
            Bitset other = *Y;
            other.reset(qy);
            return witness(qx, u, qy, other.first());
        }
    } else if (x_hits.test(qy)) {
        // x ~ y: find a nonadjacent pair off the matched edge
        for (int u = X->first(); u >= 0; u = X->next(u)) {
            if (u == qx) continue;
            Bitset misses = *Y;
            misses.reset(qy);
            misses -= g.neighbours(u);
            if (misses.any()) return witness(u, qx, qy, misses.first());
        }
    } else {
        // x matched to some y' != y; pick x' in X nonadjacent to y
        int yp = x_hits.first();
        for (int u = X->first(); u >= 0; u = X->next(u)) {
            if (u == qx || g.adjacent(u, qy)) continue;
            return witness(u, qx, yp, qy);
        }
    }
    // the case analysis is exhaustive under the preconditions
    throw theory_violation("find_p4_across_matched_cliques: no P4 found under valid preconditions");
}

} // namespace chibound
