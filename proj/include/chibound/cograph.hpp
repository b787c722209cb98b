#pragma once

#include <algorithm>
#include <vector>

#include "chibound/colouring.hpp"
#include "chibound/graph.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// Thrown when a supposedly P4-free piece turns out not to be; carries the
// offending path so callers can surface it.
struct not_a_cograph : input_error {
    Witness p4;
    explicit not_a_cograph(Witness w)
        : input_error("graph contains an induced P4"), p4(std::move(w)) {}
};

// Rooted decomposition tree of a P4-free graph. Internal nodes alternate
// between Union (disjoint union of children) and Join (complete join);
// leaves are graph vertices. Evaluating the tree reproduces the graph.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind;
        int vertex = -1;              // leaves only
        std::vector<int> children;    // internal nodes only
    };
    std::vector<Node> nodes;
    int root = -1;

    int order() const {
        int n = 0;
        for (const auto& node : nodes)
            if (node.kind == Kind::Leaf) ++n;
        return n;
    }
};

namespace detail {

// Connected components in ascending order of their smallest vertex, as
// bitsets over the parent graph's ids restricted to `scope`.
inline std::vector<Bitset> components_within(const Graph& g, const Bitset& scope,
                                             bool in_complement) {
    std::vector<Bitset> comps;
    Bitset todo = scope;
    while (todo.any()) {
        int start = todo.first();
        Bitset comp(scope.universe());
        std::vector<int> stack{start};
        comp.set(start);
        todo.reset(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset reach = in_complement ? (todo - g.neighbours(v)) : (todo & g.neighbours(v));
            for (int u = reach.first(); u >= 0; u = reach.next(u)) {
                comp.set(u);
                todo.reset(u);
                stack.push_back(u);
            }
        }
        comps.push_back(comp);
    }
    return comps;
}

inline int build_cotree_rec(const Graph& g, const Bitset& scope, Cotree& tree) {
    int size = scope.count();
    if (size == 1) {
        tree.nodes.push_back({Cotree::Kind::Leaf, scope.first(), {}});
        return int(tree.nodes.size()) - 1;
    }
    auto comps = components_within(g, scope, false);
    if (comps.size() > 1) {
        std::vector<int> children;
        for (const auto& c : comps) children.push_back(build_cotree_rec(g, c, tree));
        tree.nodes.push_back({Cotree::Kind::Union, -1, std::move(children)});
        return int(tree.nodes.size()) - 1;
    }
    auto cocomps = components_within(g, scope, true);
    if (cocomps.size() > 1) {
        std::vector<int> children;
        for (const auto& c : cocomps) children.push_back(build_cotree_rec(g, c, tree));
        tree.nodes.push_back({Cotree::Kind::Join, -1, std::move(children)});
        return int(tree.nodes.size()) - 1;
    }
    // neither split applies on >=2 vertices: there is a P4 in here
    std::vector<int> old_of_new;
    Graph sub = g.induced(scope, &old_of_new);
    auto p4 = find_p4_free_violation(sub);
    if (!p4) throw theory_violation("prime subgraph without an induced P4");
    for (int& v : p4->vertices) v = old_of_new[v];
    throw not_a_cograph(std::move(*p4));
}

} // namespace detail

// Recursive complement-connectivity split. Quadratic, which is fine at desk
// scale, and the failure path doubles as a P4 finder.
inline Cotree build_cotree(const Graph& g) {
    Cotree tree;
    if (g.order() == 0) return tree;
    tree.root = detail::build_cotree_rec(g, Bitset::full(g.order()), tree);
    // canonical form holds structurally: a component is connected, so its
    // child can only be a Join or a leaf, and a co-component is co-connected,
    // so its child can only be a Union or a leaf.
    return tree;
}

// Evaluates a cotree back to a Graph over the same vertex ids.
inline Graph evaluate_cotree(const Cotree& tree, int n) {
    GraphBuilder b(n);
    // post-order: collect leaf sets; Join nodes connect children pairwise
    std::vector<Bitset> leaves(tree.nodes.size(), Bitset(n));
    std::vector<int> order;
    std::vector<int> stack;
    if (tree.root >= 0) stack.push_back(tree.root);
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        order.push_back(i);
        for (int c : tree.nodes[i].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    for (int i : order) {
        const auto& node = tree.nodes[i];
        if (node.kind == Cotree::Kind::Leaf) {
            leaves[i].set(node.vertex);
            continue;
        }
        for (int c : node.children) leaves[i] |= leaves[c];
        if (node.kind == Cotree::Kind::Join)
            for (size_t a = 0; a < node.children.size(); ++a)
                for (size_t bidx = a + 1; bidx < node.children.size(); ++bidx) {
                    const Bitset& xa = leaves[node.children[a]];
                    const Bitset& xb = leaves[node.children[bidx]];
                    for (int u = xa.first(); u >= 0; u = xa.next(u))
                        for (int v = xb.first(); v >= 0; v = xb.next(v)) b.add_edge(u, v);
                }
    }
    return b.freeze();
}

namespace detail {

struct ColouredPiece {
    std::vector<std::pair<int, int>> assignment; // (vertex, colour 1..t)
    int colours = 0;                             // == clique number of the piece
};

inline ColouredPiece colour_cotree(const Graph& g, const Cotree& tree, int node) {
    const auto& nd = tree.nodes[node];
    if (nd.kind == Cotree::Kind::Leaf) return {{{nd.vertex, 1}}, 1};
    std::vector<ColouredPiece> kids;
    kids.reserve(nd.children.size());
    for (int c : nd.children) kids.push_back(colour_cotree(g, tree, c));
    ColouredPiece out;
    if (nd.kind == Cotree::Kind::Union) {
        // colour sets are reused across children
        for (auto& k : kids) {
            out.colours = std::max(out.colours, k.colours);
            for (auto& a : k.assignment) out.assignment.push_back(a);
        }
    } else {
        // children take disjoint colour blocks, widest child first so the
        // low colours go to the largest clique demand
        std::vector<int> idx(kids.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return kids[a].colours > kids[b].colours; });
        int offset = 0;
        for (int i : idx) {
            for (auto& [v, c] : kids[i].assignment) out.assignment.emplace_back(v, c + offset);
            offset += kids[i].colours;
        }
        out.colours = offset;
    }
    return out;
}

} // namespace detail

// Optimal colouring of a P4-free graph: exactly omega colours, computed
// bottom-up over the cotree.
inline Colouring colour_cograph(const Graph& g) {
    if (g.order() == 0) return {{}, 0};
    Cotree tree = build_cotree(g);
    auto piece = detail::colour_cotree(g, tree, tree.root);
    Colouring out{std::vector<int>(g.order(), 0), piece.colours};
    for (auto [v, c] : piece.assignment) out.colour[v] = c;
    return out;
}

// Same, but the t internal colours are remapped through the first t entries
// of `palette`. Throws capacity_error when the palette cannot cover the
// piece's clique number.
inline Colouring colour_cograph_with_palette(const Graph& g, const std::vector<int>& palette) {
    for (size_t i = 0; i < palette.size(); ++i) {
        if (palette[i] < 1) throw input_error("palette colours must be positive");
        for (size_t j = i + 1; j < palette.size(); ++j)
            if (palette[i] == palette[j]) throw input_error("palette colours must be distinct");
    }
    Colouring base = colour_cograph(g);
    if (base.colours_used > int(palette.size()))
        throw capacity_error("piece", base.colours_used, int(palette.size()));
    int max_colour = 0;
    for (int& c : base.colour) {
        c = palette[c - 1];
        max_colour = std::max(max_colour, c);
    }
    base.colours_used = max_colour;
    return base;
}

} // namespace chibound
