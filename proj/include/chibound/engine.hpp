#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chibound/cograph.hpp"
#include "chibound/colouring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

enum class Strategy { Trivial, LP2P4, LD21, LD2, CD1, C2, L31, L32, L33, L41 };

inline const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Trivial: return "TRIVIAL";
    case Strategy::LP2P4: return "LP2P4";
    case Strategy::LD21: return "LD21";
    case Strategy::LD2: return "LD2";
    case Strategy::CD1: return "CD1";
    case Strategy::C2: return "C2";
    case Strategy::L31: return "L31";
    case Strategy::L32: return "L32";
    case Strategy::L33: return "L33";
    case Strategy::L41: return "L41";
    }
    return "?";
}

inline std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::Trivial, Strategy::LP2P4, Strategy::LD21, Strategy::LD2,
                       Strategy::CD1, Strategy::C2, Strategy::L31, Strategy::L32, Strategy::L33,
                       Strategy::L41})
        if (name == strategy_name(s)) return s;
    return std::nullopt;
}

// The target of the whole engine: 4 colours at clique number 2, 6 at clique
// number 3, and exactly omega above that.
inline int theorem_bound(int omega) {
    if (omega <= 1) return omega;
    if (omega == 2) return 4;
    if (omega == 3) return 6;
    return omega;
}

struct StrategyOutcome {
    Strategy strategy = Strategy::Trivial;
    int omega = 0;
    int k = 0;
    int bound = 0;
    Colouring colouring;
    // named cells of the decomposition actually used, vertex lists ascending
    std::vector<std::pair<std::string, std::vector<int>>> partition;
    // relabeled clique orders: a_order[i] received colour i+1
    std::vector<int> a_order;
    std::vector<int> b_order;
};

struct out_of_class_error : input_error {
    Witness witness;
    explicit out_of_class_error(Witness w)
        : input_error(std::string("graph is not (P2 u P4, diamond)-free: "
                                  + std::string(witness_kind_name(w.kind)) + " found")),
          witness(std::move(w)) {}
};

// Hall matching between palette lists and a colour universe, by augmenting
// paths. On failure the returned violator is a set of left indices S with
// |N(S)| < |S|.
struct MatchResult {
    std::optional<std::vector<int>> assignment; // left index -> colour value
    std::vector<int> hall_violator;
};

inline MatchResult bipartite_match(const std::vector<std::vector<int>>& palettes,
                                   const std::vector<int>& universe) {
    int nl = int(palettes.size()), nr = int(universe.size());
    std::map<int, int> right_index;
    for (int j = 0; j < nr; ++j) right_index[universe[j]] = j;
    std::vector<std::vector<int>> allowed(nl);
    for (int i = 0; i < nl; ++i)
        for (int c : palettes[i]) {
            auto it = right_index.find(c);
            if (it != right_index.end()) allowed[i].push_back(it->second);
        }
    std::vector<int> match_left(nl, -1), match_right(nr, -1);
    std::vector<char> seen(nr, 0);
    auto augment = [&](auto&& self, int i) -> bool {
        for (int j : allowed[i]) {
            if (seen[j]) continue;
            seen[j] = 1;
            if (match_right[j] < 0 || self(self, match_right[j])) {
                match_left[i] = j;
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < nl; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(augment, i)) {
            // lefts reachable from i by alternating paths form a Hall violator
            std::vector<int> violator;
            std::vector<char> seen_left(nl, 0), seen_right(nr, 0);
            std::vector<int> stack{i};
            seen_left[i] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                violator.push_back(u);
                for (int j : allowed[u])
                    if (!seen_right[j]) {
                        seen_right[j] = 1;
                        int w = match_right[j];
                        if (w >= 0 && !seen_left[w]) {
                            seen_left[w] = 1;
                            stack.push_back(w);
                        }
                    }
            }
            std::sort(violator.begin(), violator.end());
            return {std::nullopt, violator};
        }
    }
    std::vector<int> assignment(nl);
    for (int i = 0; i < nl; ++i) assignment[i] = universe[match_left[i]];
    return {assignment, {}};
}

namespace detail {

inline std::vector<int> range_palette(int from, int to) { // inclusive
    std::vector<int> p;
    for (int c = from; c <= to; ++c) p.push_back(c);
    return p;
}

inline std::vector<int> palette_without(int omega, std::vector<int> banned) {
    std::vector<int> p;
    for (int c = 1; c <= omega; ++c)
        if (std::find(banned.begin(), banned.end(), c) == banned.end()) p.push_back(c);
    return p;
}

inline void colour_piece(const Graph& g, const Bitset& cell, const std::vector<int>& palette,
                         std::vector<int>& colour, const std::string& piece) {
    if (cell.none()) return;
    std::vector<int> old_of_new;
    Graph sub = g.induced(cell, &old_of_new);
    Colouring c;
    try {
        c = colour_cograph_with_palette(sub, palette);
    } catch (const capacity_error& e) {
        throw theory_violation(piece + ": " + e.what());
    } catch (const not_a_cograph&) {
        throw theory_violation(piece + " is not P4-free");
    }
    for (int v = 0; v < sub.order(); ++v) colour[old_of_new[v]] = c.colour[v];
}

inline void add_cell(std::vector<std::pair<std::string, std::vector<int>>>& out,
                     const std::string& name, const Bitset& members) {
    out.emplace_back(name, members.to_vector());
}

inline void snapshot_primary(std::vector<std::pair<std::string, std::vector<int>>>& out,
                             const PrimaryPartition& p) {
    add_cell(out, "A", p.a_set);
    for (size_t i = 0; i < p.c.size(); ++i) add_cell(out, "C_" + std::to_string(i), p.c[i]);
}

inline void snapshot_secondary(std::vector<std::pair<std::string, std::vector<int>>>& out,
                               const SecondaryPartition& sp) {
    add_cell(out, "B", sp.b_set);
    for (size_t j = 0; j < sp.r.size(); ++j)
        if (sp.r[j].any()) add_cell(out, "R_" + std::to_string(j + 1), sp.r[j]);
    for (size_t i = 0; i < sp.s.size(); ++i)
        for (size_t j = 0; j < sp.s[i].size(); ++j)
            if (sp.s[i][j].any())
                add_cell(out, "S_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                         sp.s[i][j]);
    for (size_t i = 0; i < sp.t.size(); ++i)
        if (sp.t[i].any()) add_cell(out, "T_" + std::to_string(i + 1), sp.t[i]);
    add_cell(out, "Z", sp.z);
}

// Final gate for every strategy: totality, properness (via the oracle's
// verifier), palette compaction to 1..t, and the theorem bound.
inline StrategyOutcome finish(const Graph& g, Strategy strategy, int omega, int k,
                              std::vector<int> colour,
                              std::vector<std::pair<std::string, std::vector<int>>> partition,
                              std::vector<int> a_order, std::vector<int> b_order) {
    StrategyOutcome out;
    out.strategy = strategy;
    out.omega = omega;
    out.k = k;
    out.bound = theorem_bound(omega);
    for (int v = 0; v < g.order(); ++v)
        if (colour[v] < 1)
            throw theory_violation("vertex " + std::to_string(v) + " left uncoloured by "
                                   + strategy_name(strategy));
    Colouring c{std::move(colour), 0};
    auto check = oracle::verify_colouring(g, c);
    if (!check.proper)
        throw theory_violation(std::string(strategy_name(strategy))
                               + " produced a monochromatic edge ("
                               + std::to_string(check.offending_edge.first) + ","
                               + std::to_string(check.offending_edge.second) + ")");
    // compact the palette to 1..t preserving colour order
    std::vector<int> used = c.colour;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<int, int> remap;
    for (size_t i = 0; i < used.size(); ++i) remap[used[i]] = int(i) + 1;
    for (int& col : c.colour) col = remap[col];
    c.colours_used = int(used.size());
    if (c.colours_used > out.bound)
        throw theory_violation(std::string(strategy_name(strategy)) + " used "
                               + std::to_string(c.colours_used) + " colours, bound is "
                               + std::to_string(out.bound));
    validate_colouring(g, c);
    out.colouring = std::move(c);
    out.partition = std::move(partition);
    out.a_order = std::move(a_order);
    out.b_order = std::move(b_order);
    return out;
}

inline void require_stable(const Graph& g, const Bitset& cell, const std::string& name) {
    for (int u = cell.first(); u >= 0; u = cell.next(u)) {
        Bitset inner = g.neighbours(u) & cell;
        int w = inner.next(u);
        if (w >= 0)
            throw theory_violation(name + " is not stable: edge (" + std::to_string(u) + ","
                                   + std::to_string(w) + ")");
    }
}

} // namespace detail

// omega = 2: a_1,a_2 get 1,2; the stable shells swap them; everything else
// fits in two spare colours.
inline StrategyOutcome colour_omega2(const Graph& g, const PrimaryPartition& p, int k = -1) {
    if (p.omega() != 2) throw input_error("colour_omega2 requires omega == 2");
    if (k < 0) {
        Graph h = g.induced(p.h_set);
        k = h.order() == 0 ? 0 : max_clique_size(h);
    }
    std::vector<int> colour(g.order(), 0);
    colour[p.a[0]] = 1;
    colour[p.a[1]] = 2;
    detail::require_stable(g, p.c[1], "C_1");
    detail::require_stable(g, p.c[2], "C_2");
    for (int v = p.c[1].first(); v >= 0; v = p.c[1].next(v)) colour[v] = 2;
    for (int v = p.c[2].first(); v >= 0; v = p.c[2].next(v)) colour[v] = 1;
    detail::colour_piece(g, p.c[0], {3, 4}, colour, "C_0");
    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p);
    return detail::finish(g, Strategy::LP2P4, 2, k, std::move(colour), std::move(part), p.a, {});
}

// omega = 3, k <= 2: three perfect pieces on disjoint palettes.
inline StrategyOutcome colour_ld21(const Graph& g, const PrimaryPartition& p, int k) {
    if (p.omega() != 3) throw input_error("colour_ld21 requires omega == 3");
    if (k > 2) throw input_error("colour_ld21 requires k <= 2");
    std::vector<int> colour(g.order(), 0);
    for (int i = 0; i < 3; ++i) colour[p.a[i]] = i + 1;
    detail::colour_piece(g, p.c[0] | p.c[1], {2, 3}, colour, "C_0 u C_1");
    detail::colour_piece(g, p.c[2], {1, 4}, colour, "C_2");
    detail::colour_piece(g, p.c[3], {5, 6}, colour, "C_3");
    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p);
    return detail::finish(g, Strategy::LD21, 3, k, std::move(colour), std::move(part), p.a, {});
}

// omega >= 4 with 2k <= omega: split the C-classes in two halves, colour each
// as one perfect piece with k colours.
inline StrategyOutcome colour_ld2(const Graph& g, const PrimaryPartition& p, int k) {
    int omega = p.omega();
    if (omega < 4) throw input_error("colour_ld2 requires omega >= 4");
    if (2 * k > omega) throw input_error("colour_ld2 requires 2k <= omega");
    int half = omega / 2;
    std::vector<int> colour(g.order(), 0);
    for (int i = 0; i < omega; ++i) colour[p.a[i]] = i + 1;
    Bitset x = p.c[0], y(g.order());
    for (int i = 1; i <= half; ++i) x |= p.c[i];
    for (int i = half + 1; i <= omega; ++i) y |= p.c[i];
    detail::colour_piece(g, x, detail::range_palette(half + 1, half + k), colour, "X");
    detail::colour_piece(g, y, detail::range_palette(1, half), colour, "Y");
    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p);
    return detail::finish(g, Strategy::LD2, omega, k, std::move(colour), std::move(part), p.a,
                          {});
}

// Some vertex of A is complete to B: pin it as a_1, push the S cells onto the
// shifted diagonal, colour with exactly omega colours.
inline StrategyOutcome colour_cd1(const Graph& g, const PrimaryPartition& p_in,
                                  const std::vector<int>& b_init) {
    int omega = p_in.omega();
    int k = int(b_init.size());
    if (omega == 3)
        throw input_error("colour_cd1 is impossible at omega == 3: a vertex of A complete to a "
                          "K3 of H would close a K4");
    if (omega < 4) throw input_error("colour_cd1 requires omega >= 4");
    if (k < 3) throw input_error("colour_cd1 requires k >= 3");
    Bitset b_set = Bitset::of(g.order(), b_init);
    int pivot = -1;
    for (int a : p_in.a)
        if ((g.neighbours(a) & b_set).count() >= 2) {
            pivot = a;
            break;
        }
    if (pivot < 0)
        throw input_error("colour_cd1 requires a vertex of A with two neighbours in B");
    if (!b_set.is_subset_of(g.neighbours(pivot)))
        throw theory_violation("pivot " + std::to_string(pivot)
                               + " sees two vertices of B but is not complete to B: a diamond "
                                 "must exist");
    if (k > omega - 1)
        throw theory_violation("pivot plus B forms a clique larger than omega");

    // relabel A with the pivot first
    std::vector<int> a_order{pivot};
    for (int a : p_in.a)
        if (a != pivot) a_order.push_back(a);
    PrimaryPartition p = primary_partition(g, a_order);
    SecondaryPartition sp0 = secondary_partition(g, p, b_init);

    for (int j = 0; j < k; ++j)
        if (sp0.s[0][j].any())
            throw theory_violation("S_1^" + std::to_string(j + 1)
                                   + " must be empty when a_1 is complete to B");
    // at most one nonempty cell per row and per column
    std::vector<std::pair<int, int>> cells; // (row, col), row >= 1
    for (int i = 1; i < omega; ++i)
        for (int j = 0; j < k; ++j)
            if (sp0.s[i][j].any()) cells.emplace_back(i, j);
    for (size_t x = 0; x < cells.size(); ++x)
        for (size_t y = x + 1; y < cells.size(); ++y)
            if (cells[x].first == cells[y].first || cells[x].second == cells[y].second)
                throw theory_violation("two nonempty S cells share a row or a column");
    std::sort(cells.begin(), cells.end(),
              [](auto& l, auto& r) { return l.second < r.second; });

    // rows of the cells become a_2.. in order, columns become b_1.. in order
    std::vector<int> new_a{pivot}, new_b;
    std::vector<char> row_used(omega, 0), col_used(k, 0);
    row_used[0] = 1;
    for (auto [row, col] : cells) {
        new_a.push_back(p.a[row]);
        new_b.push_back(sp0.b[col]);
        row_used[row] = 1;
        col_used[col] = 1;
    }
    for (int i = 1; i < omega; ++i)
        if (!row_used[i]) new_a.push_back(p.a[i]);
    for (int j = 0; j < k; ++j)
        if (!col_used[j]) new_b.push_back(sp0.b[j]);

    PrimaryPartition p2 = primary_partition(g, new_a);
    SecondaryPartition sp = secondary_partition(g, p2, new_b);

    int s_cells = int(cells.size());
    for (int i = 0; i < omega; ++i)
        for (int j = 0; j < k; ++j)
            if (sp.s[i][j].any() && !(j < s_cells && i == j + 1))
                throw theory_violation("S cells failed to land on the shifted diagonal");

    // anticompleteness facts behind the palette scheme
    Bitset r_all(g.order()), s_all(g.order()), t_rest(g.order());
    for (const auto& cell : sp.r) r_all |= cell;
    for (const auto& row : sp.s)
        for (const auto& cell : row) s_all |= cell;
    for (int i = 1; i < omega; ++i) t_rest |= sp.t[i];
    Bitset zt1 = sp.z | sp.t[0];
    detail::require_anticomplete(g, zt1, r_all | s_all | t_rest, "CD1(3)");
    detail::require_anticomplete(g, r_all, s_all | t_rest, "CD1(4)");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            detail::require_anticomplete(g, sp.r[i], sp.r[j], "CD1(5)");
    detail::require_anticomplete(g, t_rest, s_all, "CD1(6)");
    for (int i = 1; i < omega; ++i)
        for (int j = i + 1; j < omega; ++j)
            detail::require_anticomplete(g, sp.t[i], sp.t[j], "CD1(7)");

    std::vector<int> colour(g.order(), 0);
    for (int i = 0; i < omega; ++i) colour[new_a[i]] = i + 1;
    for (int j = 0; j < k; ++j) colour[new_b[j]] = j + 2;
    for (int t = 0; t < s_cells; ++t)
        for (int v = sp.s[t + 1][t].first(); v >= 0; v = sp.s[t + 1][t].next(v))
            colour[v] = t + 1;
    detail::colour_piece(g, zt1, detail::range_palette(2, omega), colour, "Z u T_1");
    for (int j = 0; j < k; ++j)
        detail::colour_piece(g, sp.r[j], detail::palette_without(omega, {j + 2}), colour,
                             "R_" + std::to_string(j + 1));
    for (int i = 1; i < omega; ++i)
        detail::colour_piece(g, sp.t[i], detail::palette_without(omega, {i + 1}), colour,
                             "T_" + std::to_string(i + 1));

    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p2);
    detail::snapshot_secondary(part, sp);
    return detail::finish(g, Strategy::CD1, omega, k, std::move(colour), std::move(part), new_a,
                          new_b);
}

// H contains a K_k anticomplete to A: take it as B, push the S cells onto the
// diagonal, colour with exactly omega colours.
inline StrategyOutcome colour_c2(const Graph& g, const PrimaryPartition& p_in,
                                 const VertexSet& b_anti) {
    int omega = p_in.omega();
    int k = b_anti.count();
    if (k < 3) throw input_error("colour_c2 requires k >= 3");
    if (!is_clique(g, b_anti)) throw input_error("colour_c2: B is not a clique");
    if (!is_anticomplete_between(g, p_in.a_set, b_anti))
        throw input_error("colour_c2: B is not anticomplete to A");

    SecondaryPartition sp0 = secondary_partition(g, p_in, b_anti.to_vector());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < omega; ++i)
        for (int j = 0; j < k; ++j)
            if (sp0.s[i][j].any()) cells.emplace_back(i, j);
    for (size_t x = 0; x < cells.size(); ++x)
        for (size_t y = x + 1; y < cells.size(); ++y)
            if (cells[x].first == cells[y].first || cells[x].second == cells[y].second)
                throw theory_violation("two nonempty S cells share a row or a column");
    std::sort(cells.begin(), cells.end(),
              [](auto& l, auto& r) { return l.second < r.second; });

    std::vector<int> new_a, new_b;
    std::vector<char> row_used(omega, 0), col_used(k, 0);
    for (auto [row, col] : cells) {
        new_a.push_back(p_in.a[row]);
        new_b.push_back(sp0.b[col]);
        row_used[row] = 1;
        col_used[col] = 1;
    }
    for (int i = 0; i < omega; ++i)
        if (!row_used[i]) new_a.push_back(p_in.a[i]);
    for (int j = 0; j < k; ++j)
        if (!col_used[j]) new_b.push_back(sp0.b[j]);

    PrimaryPartition p = primary_partition(g, new_a);
    SecondaryPartition sp = secondary_partition(g, p, new_b);
    int s_cells = int(cells.size());
    for (int i = 0; i < omega; ++i)
        for (int j = 0; j < k; ++j)
            if (sp.s[i][j].any() && !(i == j && i < s_cells))
                throw theory_violation("S cells failed to land on the diagonal");

    Bitset r_all(g.order()), s_all(g.order()), t_all(g.order());
    for (const auto& cell : sp.r) r_all |= cell;
    for (const auto& row : sp.s)
        for (const auto& cell : row) s_all |= cell;
    for (const auto& cell : sp.t) t_all |= cell;
    detail::require_anticomplete(g, sp.z, r_all | s_all | t_all, "C2(2)");
    detail::require_anticomplete(g, r_all, s_all | t_all, "C2(3)");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            detail::require_anticomplete(g, sp.r[i], sp.r[j], "C2(4)");
    detail::require_anticomplete(g, t_all, s_all, "C2(5)");
    for (int i = 0; i < omega; ++i)
        for (int j = i + 1; j < omega; ++j)
            detail::require_anticomplete(g, sp.t[i], sp.t[j], "C2(6)");

    std::vector<int> colour(g.order(), 0);
    for (int i = 0; i < omega; ++i) colour[new_a[i]] = i + 1;
    for (int j = 0; j < k; ++j) colour[new_b[j]] = j + 1;
    for (int t = 0; t < s_cells; ++t) {
        int c = (k >= 2 && t == k - 1) ? 1 : t + 2;
        for (int v = sp.s[t][t].first(); v >= 0; v = sp.s[t][t].next(v)) colour[v] = c;
    }
    detail::colour_piece(g, sp.z, detail::range_palette(1, omega), colour, "Z");
    for (int j = 0; j < k; ++j)
        detail::colour_piece(g, sp.r[j], detail::palette_without(omega, {j + 1}), colour,
                             "R_" + std::to_string(j + 1));
    for (int i = 0; i < omega; ++i)
        detail::colour_piece(g, sp.t[i], detail::palette_without(omega, {i + 1}), colour,
                             "T_" + std::to_string(i + 1));

    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p);
    detail::snapshot_secondary(part, sp);
    return detail::finish(g, Strategy::C2, omega, k, std::move(colour), std::move(part), new_a,
                          new_b);
}

namespace detail {

// What a triangle discovered during a union scan means for the dispatcher.
enum class TriangleDisposition { Continue, RedispatchC2, RedispatchCD1 };

inline TriangleDisposition examine_triangle(const PrimaryPartition& p,
                                            const std::vector<int>& tri) {
    int in_c0 = 0;
    std::vector<int> row_count(p.omega(), 0);
    for (int v : tri) {
        if (p.c[0].test(v)) ++in_c0;
        for (int i = 0; i < p.omega(); ++i)
            if (p.c[i + 1].test(v)) ++row_count[i];
    }
    if (in_c0 == 3) return TriangleDisposition::RedispatchC2;
    for (int i = 0; i < p.omega(); ++i)
        if (row_count[i] >= 2) {
            if (p.omega() == 3)
                throw theory_violation(
                    "triangle with two vertices attached to a_" + std::to_string(i + 1)
                    + " implies a diamond or a K4 beyond omega == 3");
            return TriangleDisposition::RedispatchCD1;
        }
    return TriangleDisposition::Continue;
}

// Scans G[cells] for a triangle; returns vertices in G ids.
inline std::optional<std::vector<int>> triangle_within(const Graph& g, const Bitset& cells) {
    std::vector<int> old_of_new;
    Graph sub = g.induced(cells, &old_of_new);
    auto tri = find_triangle(sub);
    if (!tri) return std::nullopt;
    std::vector<int> out;
    for (int v : tri->vertices) out.push_back(old_of_new[v]);
    return out;
}

} // namespace detail

// k == 3 strategies. Each searches ascending index sets for a triangle-free
// union of C-classes; every triangle met on the way is either a reason to
// re-dispatch (a fresh B violating (*) or (**)) or evidence for the next
// candidate.
inline StrategyOutcome colour_l31(const Graph& g, const PrimaryPartition& p);
inline StrategyOutcome colour_l32(const Graph& g, const PrimaryPartition& p);
inline StrategyOutcome colour_l33(const Graph& g, const PrimaryPartition& p);

inline StrategyOutcome colour_l31(const Graph& g, const PrimaryPartition& p) {
    if (p.omega() != 3) throw input_error("colour_l31 requires omega == 3");
    for (int i = 1; i <= 3; ++i) {
        Bitset u = p.c[0] | p.c[i];
        auto tri = detail::triangle_within(g, u);
        if (!tri) {
            int q1 = -1, q2 = -1;
            for (int t = 1; t <= 3; ++t)
                if (t != i) (q1 < 0 ? q1 : q2) = t;
            std::vector<int> colour(g.order(), 0);
            for (int t = 0; t < 3; ++t) colour[p.a[t]] = t + 1;
            detail::colour_piece(g, u, {q1, q2}, colour, "C_0 u C_i");
            detail::colour_piece(g, p.c[q1], {i, 4}, colour, "C_p");
            detail::colour_piece(g, p.c[q2], {5, 6}, colour, "C_q");
            std::vector<std::pair<std::string, std::vector<int>>> part;
            detail::snapshot_primary(part, p);
            return detail::finish(g, Strategy::L31, 3, 3, std::move(colour), std::move(part),
                                  p.a, {});
        }
        switch (detail::examine_triangle(p, *tri)) {
        case detail::TriangleDisposition::RedispatchC2:
            return colour_c2(g, p, Bitset::of(g.order(), *tri));
        case detail::TriangleDisposition::RedispatchCD1:
            return colour_cd1(g, p, *tri);
        case detail::TriangleDisposition::Continue:
            break;
        }
    }
    throw theory_violation("omega == 3, k == 3: every C_0 u C_i contains a triangle");
}

inline StrategyOutcome colour_l32(const Graph& g, const PrimaryPartition& p) {
    if (p.omega() != 4) throw input_error("colour_l32 requires omega == 4");
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Bitset u = p.c[0] | p.c[i] | p.c[j];
            auto tri = detail::triangle_within(g, u);
            if (tri) {
                switch (detail::examine_triangle(p, *tri)) {
                case detail::TriangleDisposition::RedispatchC2:
                    return colour_c2(g, p, Bitset::of(g.order(), *tri));
                case detail::TriangleDisposition::RedispatchCD1:
                    return colour_cd1(g, p, *tri);
                case detail::TriangleDisposition::Continue:
                    continue;
                }
            }
            int pfirst = -1, q = -1;
            for (int t = 1; t <= 4; ++t)
                if (t != i && t != j) (pfirst < 0 ? pfirst : q) = t;
            Bitset v2 = p.c[pfirst] | p.c[q];
            auto tri2 = detail::triangle_within(g, v2);
            if (tri2) {
                // three vertices over two classes: some a has two neighbours
                if (detail::examine_triangle(p, *tri2)
                    == detail::TriangleDisposition::RedispatchCD1)
                    return colour_cd1(g, p, *tri2);
                throw theory_violation("triangle across two C-classes with no repeated class");
            }
            std::vector<int> colour(g.order(), 0);
            for (int t = 0; t < 4; ++t) colour[p.a[t]] = t + 1;
            detail::colour_piece(g, u, {pfirst, q}, colour, "C_0 u C_i u C_j");
            detail::colour_piece(g, v2, {i, j}, colour, "C_p u C_q");
            std::vector<std::pair<std::string, std::vector<int>>> part;
            detail::snapshot_primary(part, p);
            return detail::finish(g, Strategy::L32, 4, 3, std::move(colour), std::move(part),
                                  p.a, {});
        }
    throw theory_violation("omega == 4, k == 3: every C_0 u C_i u C_j contains a triangle");
}

inline StrategyOutcome colour_l33(const Graph& g, const PrimaryPartition& p) {
    if (p.omega() != 5) throw input_error("colour_l33 requires omega == 5");
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int l = j + 1; l <= 5; ++l) {
                Bitset u = p.c[i] | p.c[j] | p.c[l];
                auto tri = detail::triangle_within(g, u);
                if (tri) {
                    switch (detail::examine_triangle(p, *tri)) {
                    case detail::TriangleDisposition::RedispatchC2:
                        return colour_c2(g, p, Bitset::of(g.order(), *tri));
                    case detail::TriangleDisposition::RedispatchCD1:
                        return colour_cd1(g, p, *tri);
                    case detail::TriangleDisposition::Continue:
                        continue;
                    }
                }
                std::vector<int> rest;
                for (int t = 1; t <= 5; ++t)
                    if (t != i && t != j && t != l) rest.push_back(t);
                Bitset w = p.c[0] | p.c[rest[0]] | p.c[rest[1]];
                std::vector<int> colour(g.order(), 0);
                for (int t = 0; t < 5; ++t) colour[p.a[t]] = t + 1;
                detail::colour_piece(g, u, {rest[0], rest[1]}, colour, "C_i u C_j u C_l");
                detail::colour_piece(g, w, {i, j, l}, colour, "C_0 u C_p u C_q");
                std::vector<std::pair<std::string, std::vector<int>>> part;
                detail::snapshot_primary(part, p);
                return detail::finish(g, Strategy::L33, 5, 3, std::move(colour), std::move(part),
                                      p.a, {});
            }
    throw theory_violation("omega == 5, k == 3: every triple union contains a triangle");
}

// omega >= 4, k >= 4 under (*) and (**): relabel both cliques so the matching
// pairs a_i with b_i on a prefix, then colour everything with exactly omega
// colours. S cells are P4-free with clique number at most omega - 2 when
// matched (Q u {a_t, b_t} extends any clique Q in the cell) and stable
// otherwise, so the palette [omega] minus the two pinned colours always
// suffices; at omega == 4 the per-component assignment is a Hall matching
// over the cells' stable layers.
inline StrategyOutcome colour_l41(const Graph& g, const PrimaryPartition& p_in,
                                  const std::vector<int>& b_init) {
    int omega = p_in.omega();
    int k = int(b_init.size());
    if (omega < 4 || k < 4) throw input_error("colour_l41 requires omega >= 4 and k >= 4");
    Bitset b_set = Bitset::of(g.order(), b_init);
    auto star = check_condition_star(g, p_in.a_set, b_set);
    if (!star.holds)
        throw input_error("colour_l41 requires condition (*): offending vertex "
                          + std::to_string(star.offending));

    std::vector<std::pair<int, int>> matched;
    for (int a : p_in.a) {
        Bitset hits = g.neighbours(a) & b_set;
        if (hits.any()) matched.emplace_back(a, hits.first());
    }
    int m = int(matched.size());
    if (m == 0)
        throw theory_violation("[A,B] is empty: the anticomplete-K_k dispatch should have fired");

    std::vector<int> new_a, new_b;
    Bitset used_b(g.order());
    for (auto [a, b] : matched) {
        new_a.push_back(a);
        new_b.push_back(b);
        used_b.set(b);
    }
    for (int a : p_in.a)
        if (!(g.neighbours(a) & b_set).any()) new_a.push_back(a);
    for (int b : b_init)
        if (!used_b.test(b)) new_b.push_back(b);

    PrimaryPartition p = primary_partition(g, new_a);
    SecondaryPartition sp = secondary_partition(g, p, new_b);
    SPropertiesReport report = verify_s_properties(g, p, sp);

    std::vector<int> colour(g.order(), 0);
    for (int i = 0; i < omega; ++i) colour[new_a[i]] = i + 1;
    std::vector<int> bcolour(k, 0); // colour of b_{j+1}
    if (m == 1) {
        for (int j = 0; j < k - 1; ++j) bcolour[j] = j + 2;
        bcolour[k - 1] = 1;
    } else {
        for (int j = 0; j < m - 1; ++j) bcolour[j] = j + 2;
        bcolour[m - 1] = 1;
        for (int j = m; j < k; ++j) bcolour[j] = j + 1;
    }
    for (int j = 0; j < k; ++j) colour[new_b[j]] = bcolour[j];

    if (omega >= 5) {
        for (int i = 0; i < omega; ++i)
            for (int j = 0; j < k; ++j)
                if (sp.s[i][j].any())
                    detail::colour_piece(g, sp.s[i][j],
                                         detail::palette_without(omega, {i + 1, bcolour[j]}),
                                         colour,
                                         "S_" + std::to_string(i + 1) + "_"
                                             + std::to_string(j + 1));
    } else {
        for (const auto& comp : report.components) {
            std::vector<std::vector<int>> palettes;
            std::vector<std::pair<Bitset, int>> layers; // members, left index
            for (const auto& part : comp.parts) {
                std::vector<int> old_of_new;
                Graph sub = g.induced(part.members, &old_of_new);
                Colouring sub_col;
                try {
                    sub_col = colour_cograph(sub);
                } catch (const not_a_cograph&) {
                    throw theory_violation("S cell part is not P4-free");
                }
                auto allowed = detail::palette_without(omega, {part.row + 1, bcolour[part.col]});
                if (sub_col.colours_used > int(allowed.size()))
                    throw theory_violation("S cell part needs " + std::to_string(sub_col.colours_used)
                                           + " colours, palette has "
                                           + std::to_string(allowed.size()));
                for (int layer = 1; layer <= sub_col.colours_used; ++layer) {
                    Bitset members(g.order());
                    for (int v = 0; v < sub.order(); ++v)
                        if (sub_col.colour[v] == layer) members.set(old_of_new[v]);
                    layers.emplace_back(members, int(palettes.size()));
                    palettes.push_back(allowed);
                }
            }
            auto match = bipartite_match(palettes, detail::range_palette(1, omega));
            if (!match.assignment) {
                std::string cells;
                for (const auto& part : comp.parts)
                    cells += " S_" + std::to_string(part.row + 1) + "_"
                             + std::to_string(part.col + 1);
                throw theory_violation("no system of distinct colours for component over" + cells);
            }
            for (const auto& [members, left] : layers)
                for (int v = members.first(); v >= 0; v = members.next(v))
                    colour[v] = (*match.assignment)[left];
        }
    }

    detail::colour_piece(g, sp.z, detail::range_palette(1, omega), colour, "Z");
    for (int j = 0; j < k; ++j)
        detail::colour_piece(g, sp.r[j], detail::palette_without(omega, {bcolour[j]}), colour,
                             "R_" + std::to_string(j + 1));
    for (int i = 0; i < omega; ++i)
        detail::colour_piece(g, sp.t[i], detail::palette_without(omega, {i + 1}), colour,
                             "T_" + std::to_string(i + 1));

    std::vector<std::pair<std::string, std::vector<int>>> part;
    detail::snapshot_primary(part, p);
    detail::snapshot_secondary(part, sp);
    return detail::finish(g, Strategy::L41, omega, k, std::move(colour), std::move(part), new_a,
                          new_b);
}

// Theorem dispatcher. Rejects out-of-class graphs with a witness; otherwise
// routes to the matching strategy by (omega, k) and the structural probes.
inline StrategyOutcome colour(const Graph& g) {
    int n = g.order();
    if (n == 0)
        return detail::finish(g, Strategy::Trivial, 0, 0, {}, {}, {}, {});
    auto verdict = class_membership(g);
    if (!verdict.in_class) throw out_of_class_error(*verdict.witness);
    if (g.edge_count() == 0) {
        std::vector<int> colour(n, 1);
        std::vector<std::pair<std::string, std::vector<int>>> part;
        part.emplace_back("A", std::vector<int>{0});
        return detail::finish(g, Strategy::Trivial, 1, n > 1 ? 1 : 0, std::move(colour),
                              std::move(part), {0}, {});
    }
    VertexSet a_set = max_clique(g);
    std::vector<int> a_order = a_set.to_vector();
    int omega = int(a_order.size());

    Bitset h_set = Bitset::full(n) - a_set;
    std::vector<int> old_of_new;
    Graph h = g.induced(h_set, &old_of_new);
    int k = h.order() == 0 ? 0 : max_clique_size(h);

    if (omega == 2) {
        PrimaryPartition p = primary_partition(g, a_order);
        return colour_omega2(g, p, k);
    }

    if (h.order() == 0) {
        std::vector<int> colour(n, 0);
        for (int i = 0; i < omega; ++i) colour[a_order[i]] = i + 1;
        std::vector<std::pair<std::string, std::vector<int>>> part;
        detail::add_cell(part, "A", a_set);
        return detail::finish(g, Strategy::Trivial, omega, 0, std::move(colour), std::move(part),
                              a_order, {});
    }

    PrimaryPartition p = primary_partition(g, a_order);
    if (k <= 2) {
        if (omega == 3) return colour_ld21(g, p, k);
        return colour_ld2(g, p, k);
    }

    if (auto anti = find_kk_anticomplete_to_A(g, p, k)) return colour_c2(g, p, *anti);

    VertexSet b_local = max_clique(h);
    std::vector<int> b_order;
    for (int v = b_local.first(); v >= 0; v = b_local.next(v)) b_order.push_back(old_of_new[v]);
    Bitset b_set = Bitset::of(n, b_order);

    if (!check_condition_star(g, a_set, b_set).holds) return colour_cd1(g, p, b_order);

    if (k == 3) {
        if (omega == 3) return colour_l31(g, p);
        if (omega == 4) return colour_l32(g, p);
        if (omega == 5) return colour_l33(g, p);
        return colour_ld2(g, p, k);
    }
    return colour_l41(g, p, b_order);
}

} // namespace chibound
