#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/recognition.hpp"
#include "chibound/witness.hpp"

namespace chibound {

// Two-level partition of G around a maximum clique A and a maximum clique B
// of H = G - A. Cell membership is a pure function of the neighbourhood
// signature (N_A(v), N_B(v)).

struct PrimaryPartition {
    std::vector<int> a;      // ordered clique: a[i] plays a_{i+1}
    Bitset a_set;
    Bitset h_set;            // V(H) = V(G) \ A
    std::vector<Bitset> c;   // c[0] = C_0, c[i] = C_i for i in 1..omega

    int omega() const { return int(a.size()); }
};

namespace detail {

inline Witness diamond_or_clique_witness(const Graph& g, int v, const Bitset& clique_hits,
                                         const Bitset& clique_all) {
    Bitset missed = clique_all - clique_hits;
    if (missed.none()) {
        // v extends the clique: the clique was not maximum
        std::vector<int> vs = clique_all.to_vector();
        vs.push_back(v);
        return Witness{WitnessKind::Clique, vs};
    }
    int ai = clique_hits.first();
    int aj = clique_hits.next(ai);
    int al = missed.first();
    (void)g;
    return Witness{WitnessKind::Diamond, {v, std::min(ai, aj), al, std::max(ai, aj)}};
}

inline std::string tuple_str(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

} // namespace detail

// Splits V(H) by A-neighbourhood. Every v in H must see at most one vertex
// of A; a second hit means a diamond or a clique extension exists, which is
// reported as a theory violation with the witness.
inline PrimaryPartition primary_partition(const Graph& g, const std::vector<int>& a_order) {
    int omega = int(a_order.size());
    if (omega < 2) throw input_error("primary_partition: omega must be at least 2");
    Bitset a_set = Bitset::of(g.order(), a_order);
    if (a_set.count() != omega) throw input_error("primary_partition: repeated clique vertex");
    if (!is_clique(g, a_set)) throw input_error("primary_partition: A is not a clique");

    PrimaryPartition p;
    p.a = a_order;
    p.a_set = a_set;
    p.h_set = Bitset::full(g.order()) - a_set;
    p.c.assign(omega + 1, Bitset(g.order()));
    for (int v = p.h_set.first(); v >= 0; v = p.h_set.next(v)) {
        Bitset hits = g.neighbours(v) & a_set;
        int deg = hits.count();
        if (deg == 0) {
            p.c[0].set(v);
        } else if (deg == 1) {
            int a = hits.first();
            int idx = int(std::find(a_order.begin(), a_order.end(), a) - a_order.begin());
            p.c[idx + 1].set(v);
        } else {
            Witness w = detail::diamond_or_clique_witness(g, v, hits, a_set);
            throw theory_violation(std::string("vertex ") + std::to_string(v)
                                   + " has " + std::to_string(deg) + " neighbours in A: "
                                   + witness_kind_name(w.kind) + " witness "
                                   + detail::tuple_str(w.vertices));
        }
    }
    return p;
}

struct SecondaryPartition {
    std::vector<int> b;                 // ordered clique: b[j] plays b_{j+1}
    Bitset b_set;
    std::vector<Bitset> r;              // r[j]: N_A empty, N_B = {b_j}
    std::vector<std::vector<Bitset>> s; // s[i][j]: N_A = {a_i}, N_B = {b_j}
    std::vector<Bitset> t;              // t[i]: N_A = {a_i}, N_B empty
    Bitset z;                           // both empty

    int k() const { return int(b.size()); }
};

// Splits V(H) \ B by (N_A, N_B) signature. Requires |N_B(v)| <= 1 throughout
// (forced by diamond-freeness when k >= 3). Cells S_i^j with a_i and b_j
// nonadjacent must be stable: an edge inside one yields a diamond witness.
// Matched cells (a_i ~ b_j) are exempt; their clique number is still at most
// omega - 2 and the engine colours them as P4-free pieces.
inline SecondaryPartition secondary_partition(const Graph& g, const PrimaryPartition& p,
                                              const std::vector<int>& b_order) {
    int omega = p.omega();
    int k = int(b_order.size());
    if (k < 3) throw input_error("secondary_partition: k must be at least 3");
    Bitset b_set = Bitset::of(g.order(), b_order);
    if (b_set.count() != k) throw input_error("secondary_partition: repeated clique vertex");
    if (!b_set.is_subset_of(p.h_set)) throw input_error("secondary_partition: B not inside H");
    if (!is_clique(g, b_set)) throw input_error("secondary_partition: B is not a clique");

    SecondaryPartition sp;
    sp.b = b_order;
    sp.b_set = b_set;
    sp.r.assign(k, Bitset(g.order()));
    sp.s.assign(omega, std::vector<Bitset>(k, Bitset(g.order())));
    sp.t.assign(omega, Bitset(g.order()));
    sp.z = Bitset(g.order());

    Bitset rest = p.h_set - b_set;
    for (int v = rest.first(); v >= 0; v = rest.next(v)) {
        Bitset bh = g.neighbours(v) & b_set;
        int bdeg = bh.count();
        if (bdeg > 1) {
            Witness w = detail::diamond_or_clique_witness(g, v, bh, b_set);
            throw theory_violation(std::string("vertex ") + std::to_string(v) + " has "
                                   + std::to_string(bdeg) + " neighbours in B: "
                                   + witness_kind_name(w.kind) + " witness "
                                   + detail::tuple_str(w.vertices));
        }
        int arow = -1; // 0-based row, -1 when N_A(v) empty
        for (int i = 0; i < omega; ++i)
            if (p.c[i + 1].test(v)) {
                arow = i;
                break;
            }
        if (bdeg == 0) {
            if (arow < 0) sp.z.set(v);
            else sp.t[arow].set(v);
        } else {
            int b = bh.first();
            int bcol = int(std::find(b_order.begin(), b_order.end(), b) - b_order.begin());
            if (arow < 0) sp.r[bcol].set(v);
            else sp.s[arow][bcol].set(v);
        }
    }

    for (int i = 0; i < omega; ++i)
        for (int j = 0; j < k; ++j) {
            if (sp.s[i][j].none()) continue;
            if (g.adjacent(p.a[i], b_order[j])) continue; // matched cell, may be non-stable
            for (int u = sp.s[i][j].first(); u >= 0; u = sp.s[i][j].next(u)) {
                Bitset inner = g.neighbours(u) & sp.s[i][j];
                int w = inner.next(u);
                if (w >= 0)
                    throw theory_violation(
                        "S cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                        + ") is not stable: Diamond witness "
                        + detail::tuple_str({u, p.a[i], w, b_order[j]}));
            }
        }
    return sp;
}

struct StarCheck {
    bool holds;
    int offending = -1; // a vertex of A u B with two cross neighbours
};

// Condition (*): the edges between A and B form a matching.
inline StarCheck check_condition_star(const Graph& g, const Bitset& a_set, const Bitset& b_set) {
    for (int a = a_set.first(); a >= 0; a = a_set.next(a))
        if ((g.neighbours(a) & b_set).count() > 1) return {false, a};
    for (int b = b_set.first(); b >= 0; b = b_set.next(b))
        if ((g.neighbours(b) & a_set).count() > 1) return {false, b};
    return {true, -1};
}

// Condition (**) probe: a k-clique of H anticomplete to A, which can only
// live among the vertices with no A-neighbours. Returns the
// lexicographically-first such clique if one exists.
inline std::optional<VertexSet> find_kk_anticomplete_to_A(const Graph& g,
                                                          const PrimaryPartition& p, int k) {
    std::vector<int> old_of_new;
    Graph c0 = g.induced(p.c[0], &old_of_new);
    if (c0.order() < k) return std::nullopt;
    VertexSet best = max_clique(c0);
    if (best.count() < k) return std::nullopt;
    // trim to exactly k vertices, keeping the lexicographically first ones:
    // any subset of a clique is a clique
    Bitset out(g.order());
    int taken = 0;
    for (int v = best.first(); v >= 0 && taken < k; v = best.next(v), ++taken)
        out.set(old_of_new[v]);
    return out;
}

// Structured view of G[S] handed to the engine: connected components with
// their per-cell parts.
struct SComponent {
    struct Part {
        int row;       // 0-based i
        int col;       // 0-based j
        Bitset members;
    };
    std::vector<Part> parts;
};

struct SPropertiesReport {
    std::vector<SComponent> components; // populated when omega == 4
};

namespace detail {

inline void require_anticomplete(const Graph& g, const Bitset& x, const Bitset& y,
                                 const char* property) {
    for (int u = x.first(); u >= 0; u = x.next(u)) {
        Bitset hits = g.neighbours(u) & y;
        if (hits.any())
            throw theory_violation(std::string(property) + " violated by edge ("
                                   + std::to_string(u) + "," + std::to_string(hits.first())
                                   + ")");
    }
}

} // namespace detail

// Anticompleteness properties of the R/S/T/Z cells. P1-P4 are checked
// unconditionally, P7 when omega >= 5; for omega == 4 the component
// structure of G[S] is checked (parts in distinct rows and columns, at most
// four per component) and returned for the engine's palette matching.
inline SPropertiesReport verify_s_properties(const Graph& g, const PrimaryPartition& p,
                                             const SecondaryPartition& sp) {
    int omega = p.omega();
    int k = sp.k();
    Bitset r_all(g.order()), t_all(g.order()), s_all(g.order());
    for (const auto& cell : sp.r) r_all |= cell;
    for (const auto& cell : sp.t) t_all |= cell;
    for (const auto& row : sp.s)
        for (const auto& cell : row) s_all |= cell;

    // P1: Z against R u S u T
    detail::require_anticomplete(g, sp.z, r_all | s_all | t_all, "P1");
    // P2: R against S u T u Z, and R_i against R_j
    detail::require_anticomplete(g, r_all, s_all | t_all | sp.z, "P2");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            detail::require_anticomplete(g, sp.r[i], sp.r[j], "P2");
    // P3: T against R u S u Z, and T_i against T_j
    detail::require_anticomplete(g, t_all, r_all | s_all | sp.z, "P3");
    for (int i = 0; i < omega; ++i)
        for (int j = i + 1; j < omega; ++j)
            detail::require_anticomplete(g, sp.t[i], sp.t[j], "P3");
    // P4: same-row and same-column S cells
    for (int i = 0; i < omega; ++i)
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                detail::require_anticomplete(g, sp.s[i][u], sp.s[i][v], "P4");
    for (int j = 0; j < k; ++j)
        for (int u = 0; u < omega; ++u)
            for (int v = u + 1; v < omega; ++v)
                detail::require_anticomplete(g, sp.s[u][j], sp.s[v][j], "P4");
    if (omega >= 5) {
        // P7: distinct rows and columns
        for (int i = 0; i < omega; ++i)
            for (int j = 0; j < k; ++j)
                for (int i2 = 0; i2 < omega; ++i2)
                    for (int j2 = 0; j2 < k; ++j2)
                        if (i != i2 && j != j2 && (i < i2 || (i == i2 && j < j2)))
                            detail::require_anticomplete(g, sp.s[i][j], sp.s[i2][j2], "P7");
    }

    SPropertiesReport report;
    if (omega == 4) {
        // components of G[S], each mapped onto its cells
        Bitset todo = s_all;
        while (todo.any()) {
            Bitset comp(g.order());
            std::vector<int> stack{todo.first()};
            comp.set(stack[0]);
            todo.reset(stack[0]);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                Bitset reach = g.neighbours(v) & todo;
                for (int u = reach.first(); u >= 0; u = reach.next(u)) {
                    comp.set(u);
                    todo.reset(u);
                    stack.push_back(u);
                }
            }
            SComponent c;
            for (int i = 0; i < omega; ++i)
                for (int j = 0; j < k; ++j) {
                    Bitset part = sp.s[i][j] & comp;
                    if (part.any()) c.parts.push_back({i, j, part});
                }
            if (int(c.parts.size()) > omega)
                throw theory_violation("P6 violated: component of G[S] spans "
                                       + std::to_string(c.parts.size()) + " cells");
            for (size_t x = 0; x < c.parts.size(); ++x)
                for (size_t y = x + 1; y < c.parts.size(); ++y)
                    if (c.parts[x].row == c.parts[y].row || c.parts[x].col == c.parts[y].col)
                        throw theory_violation(
                            "P5 violated: component cells share a row or column");
            report.components.push_back(std::move(c));
        }
    }
    return report;
}

} // namespace chibound
