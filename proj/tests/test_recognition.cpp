#include <catch_amalgamated.hpp>

#include <random>

#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"
#include "test_util.hpp"

using namespace chibound;

TEST_CASE("triangle detector") {
    auto tri = find_triangle(testutil::klique(3));
    REQUIRE(tri);
    CHECK(tri->vertices == std::vector<int>{0, 1, 2});
    CHECK(check_witness(testutil::klique(3), *tri));

    CHECK_FALSE(find_triangle(cycle(5)));
    CHECK_FALSE(find_triangle(grotzsch()));
}

TEST_CASE("diamond detector") {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto w = find_induced_diamond(diamond);
    REQUIRE(w);
    CHECK(check_witness(diamond, *w));

    CHECK_FALSE(find_induced_diamond(testutil::klique(5)));
    CHECK_FALSE(find_induced_diamond(h_n(5)));
}

TEST_CASE("P2 u P4 detector") {
    Graph forbidden = path_graph(2).disjoint_union(path_graph(4));
    auto w = find_induced_p2p4(forbidden);
    REQUIRE(w);
    CHECK(check_witness(forbidden, *w));

    CHECK_FALSE(find_induced_p2p4(testutil::klique(6)));
    CHECK_FALSE(find_induced_p2p4(schlafli_complement()));
}

TEST_CASE("class membership verdicts") {
    CHECK(class_membership(grotzsch()).in_class);

    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto v1 = class_membership(diamond);
    REQUIRE_FALSE(v1.in_class);
    CHECK(v1.witness->kind == WitnessKind::Diamond);

    Graph c5k2 = cycle(5).disjoint_union(testutil::klique(2));
    auto v2 = class_membership(c5k2);
    REQUIRE_FALSE(v2.in_class);
    CHECK(v2.witness->kind == WitnessKind::P2UnionP4);
    CHECK(check_witness(c5k2, *v2.witness));
}

TEST_CASE("maximum clique is exact and lexicographically first") {
    CHECK(max_clique(testutil::klique(5)).count() == 5);
    CHECK(max_clique(grotzsch()).count() == 2);
    CHECK(max_clique(schlafli_complement()).count() == 3);

    std::mt19937 rng(41);
    for (int round = 0; round < 120; ++round) {
        int n = 5 + int(rng() % 8);
        Graph g = testutil::random_graph(n, 0.5, rng);
        VertexSet clique = max_clique(g);
        CHECK(is_clique(g, clique));
        CHECK(clique.count() == oracle::max_clique_bruteforce(g));

        // lexicographic minimality among all maximum cliques, by enumeration
        int target = clique.count();
        std::vector<int> best;
        for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
            if (__builtin_popcount(s) != target) continue;
            Bitset cand(n);
            for (int v = 0; v < n; ++v)
                if (s & (uint32_t(1) << v)) cand.set(v);
            if (!is_clique(g, cand)) continue;
            auto vec = cand.to_vector();
            if (best.empty() || vec < best) best = vec;
        }
        CHECK(clique.to_vector() == best);
    }
}

TEST_CASE("P4 detector") {
    auto w = find_p4_free_violation(path_graph(4));
    REQUIRE(w);
    CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(find_p4_free_violation(testutil::klique(4)));
    auto c5w = find_p4_free_violation(cycle(5));
    REQUIRE(c5w);
    CHECK(check_witness(cycle(5), *c5w));
}

TEST_CASE("detectors agree with the enumeration oracle on random graphs") {
    std::mt19937 rng(97);
    for (int round = 0; round < 300; ++round) {
        int n = 6 + int(rng() % 5);
        Graph g = testutil::random_graph(n, 0.2 + 0.1 * double(rng() % 6), rng);
        auto fast_d = find_induced_diamond(g);
        auto slow_d = oracle::find_forbidden_by_enumeration(g, oracle::Pattern::Diamond);
        CHECK(bool(fast_d) == bool(slow_d));
        if (fast_d) CHECK(check_witness(g, *fast_d));
        auto fast_p = find_induced_p2p4(g);
        auto slow_p = oracle::find_forbidden_by_enumeration(g, oracle::Pattern::P2UnionP4);
        CHECK(bool(fast_p) == bool(slow_p));
        if (fast_p) CHECK(check_witness(g, *fast_p));
        auto fast_t = find_triangle(g);
        auto slow_t = oracle::find_forbidden_by_enumeration(g, oracle::Pattern::Triangle);
        CHECK(bool(fast_t) == bool(slow_t));
    }
}

namespace {

// Brute-force oracle: is there an induced P4 in G[X u Y] through x and y?
bool p4_through_exists(const Graph& g, const Bitset& scope, int x, int y) {
    std::vector<int> verts = scope.to_vector();
    int m = int(verts.size());
    std::vector<int> idx(4);
    bool found = false;
    std::function<void(int, int)> rec = [&](int depth, int start) {
        if (found) return;
        if (depth == 4) {
            // does some ordering of idx induce a path containing x and y?
            std::vector<int> t = idx;
            std::sort(t.begin(), t.end());
            if (std::find(t.begin(), t.end(), x) == t.end()) return;
            if (std::find(t.begin(), t.end(), y) == t.end()) return;
            do {
                if (g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[2], t[3])
                    && !g.adjacent(t[0], t[2]) && !g.adjacent(t[0], t[3])
                    && !g.adjacent(t[1], t[3])) {
                    found = true;
                    return;
                }
            } while (std::next_permutation(t.begin(), t.end()));
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[depth] = verts[i];
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return found;
}

} // namespace

TEST_CASE("cross-clique P4 finder: worked examples") {
    // X = K3 {0,1,2}, Y = K2 {3,4}, matching edge (0,3)
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {0, 3}});
    auto w = find_p4_across_matched_cliques(g, Bitset::of(5, {0, 1, 2}), Bitset::of(5, {3, 4}),
                                            1, 4);
    CHECK(check_witness(g, w));
    CHECK(std::find(w.vertices.begin(), w.vertices.end(), 1) != w.vertices.end());
    CHECK(std::find(w.vertices.begin(), w.vertices.end(), 4) != w.vertices.end());

    // X = K3, Y = K3, single matching edge, querying the matched endpoints
    Graph g2 = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
    auto w2 = find_p4_across_matched_cliques(g2, Bitset::of(6, {0, 1, 2}),
                                             Bitset::of(6, {3, 4, 5}), 0, 3);
    CHECK(check_witness(g2, w2));

    // empty matching violates the precondition
    Graph g3 = testutil::klique(3).disjoint_union(testutil::klique(3));
    CHECK_THROWS_AS(find_p4_across_matched_cliques(g3, Bitset::of(6, {0, 1, 2}),
                                                   Bitset::of(6, {3, 4, 5}), 0, 3),
                    input_error);
    // overlapping or non-clique inputs are rejected with named clauses
    Graph g4 = testutil::klique(5);
    CHECK_THROWS_AS(find_p4_across_matched_cliques(g4, Bitset::of(5, {0, 1, 2}),
                                                   Bitset::of(5, {2, 3}), 0, 3),
                    input_error);
}

TEST_CASE("cross-clique P4 finder matches the brute-force oracle on small configs") {
    // all clique sizes 2..3 here; the acceptance suite runs the full <=4 sweep
    for (int nx = 2; nx <= 3; ++nx)
        for (int ny = 2; ny <= 3; ++ny) {
            if (std::max(nx, ny) < 3) continue;
            int n = nx + ny;
            int pairs = nx * ny;
            for (uint32_t mask = 1; mask < (uint32_t(1) << pairs); ++mask) {
                // mask encodes which (x, y) pairs are matched; keep matchings only
                std::vector<std::pair<int, int>> cross;
                bool matching = true;
                std::vector<int> degx(nx, 0), degy(ny, 0);
                for (int i = 0; i < nx && matching; ++i)
                    for (int j = 0; j < ny; ++j)
                        if (mask & (uint32_t(1) << (i * ny + j))) {
                            if (++degx[i] > 1 || ++degy[j] > 1) {
                                matching = false;
                                break;
                            }
                            cross.emplace_back(i, nx + j);
                        }
                if (!matching) continue;
                std::vector<std::pair<int, int>> edges = cross;
                for (int i = 0; i < nx; ++i)
                    for (int j = i + 1; j < nx; ++j) edges.emplace_back(i, j);
                for (int i = 0; i < ny; ++i)
                    for (int j = i + 1; j < ny; ++j) edges.emplace_back(nx + i, nx + j);
                Graph g = Graph::from_edges(n, edges);
                Bitset xs = Bitset::full(n), ys(n);
                for (int j = 0; j < ny; ++j) {
                    xs.reset(nx + j);
                    ys.set(nx + j);
                }
                for (int x = 0; x < nx; ++x)
                    for (int y = nx; y < n; ++y) {
                        auto w = find_p4_across_matched_cliques(g, xs, ys, x, y);
                        REQUIRE(check_witness(g, w));
                        CHECK(std::find(w.vertices.begin(), w.vertices.end(), x)
                              != w.vertices.end());
                        CHECK(std::find(w.vertices.begin(), w.vertices.end(), y)
                              != w.vertices.end());
                        CHECK(p4_through_exists(g, Bitset::full(n), x, y));
                    }
            }
        }
}
