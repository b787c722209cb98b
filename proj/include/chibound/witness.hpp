#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

enum class WitnessKind { Diamond, P2UnionP4, Triangle, P4, Clique };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::Diamond: return "Diamond";
    case WitnessKind::P2UnionP4: return "P2UnionP4";
    case WitnessKind::Triangle: return "Triangle";
    case WitnessKind::P4: return "P4";
    case WitnessKind::Clique: return "Clique";
    }
    return "?";
}

// Vertex tuple exhibiting an induced structure. Order matters:
//   Triangle   -- any order (mutually adjacent)
//   P4         -- path order v1-v2-v3-v4
//   Diamond    -- first three are a P3 in path order, last is the apex
//                 adjacent to all three
//   P2UnionP4  -- first two are the edge, last four the path in path order,
//                 with no edges between the two parts
//   Clique     -- any order (mutually adjacent)
struct Witness {
    WitnessKind kind;
    std::vector<int> vertices;
};

// Re-checks the Witness invariant against the graph.
inline bool check_witness(const Graph& g, const Witness& w) {
    const auto& t = w.vertices;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= g.order()) return false;
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) return false;
    }
    auto adj = [&](int i, int j) { return g.adjacent(t[i], t[j]); };
    auto path4 = [&](int a, int b, int c, int d) {
        return adj(a, b) && adj(b, c) && adj(c, d) && !adj(a, c) && !adj(a, d) && !adj(b, d);
    };
    switch (w.kind) {
    case WitnessKind::Triangle:
        return t.size() == 3 && adj(0, 1) && adj(0, 2) && adj(1, 2);
    case WitnessKind::P4:
        return t.size() == 4 && path4(0, 1, 2, 3);
    case WitnessKind::Diamond:
        return t.size() == 4 && adj(0, 1) && adj(1, 2) && !adj(0, 2)
               && adj(3, 0) && adj(3, 1) && adj(3, 2);
    case WitnessKind::P2UnionP4: {
        if (t.size() != 6 || !adj(0, 1) || !path4(2, 3, 4, 5)) return false;
        for (int i : {0, 1})
            for (int j : {2, 3, 4, 5})
                if (adj(i, j)) return false;
        return true;
    }
    case WitnessKind::Clique:
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j)
                if (!adj(int(i), int(j))) return false;
        return true;
    }
    return false;
}

// Verdict of the class test. `witness` is present iff the graph is excluded,
// and is then a Diamond or a P2UnionP4.
struct MembershipVerdict {
    bool in_class;
    std::optional<Witness> witness;
};

} // namespace chibound
