#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "test_util.hpp"

using namespace chibound;

TEST_CASE("verify_colouring") {
    Graph k2 = testutil::klique(2);
    CHECK(oracle::verify_colouring(k2, {{1, 2}, 2}).proper);
    auto bad = oracle::verify_colouring(k2, {{1, 1}, 1});
    CHECK_FALSE(bad.proper);
    CHECK(bad.offending_edge == std::pair<int, int>{0, 1});
    CHECK_THROWS_AS(oracle::verify_colouring(k2, {{1}, 1}), input_error);
    CHECK_THROWS_AS(oracle::verify_colouring(k2, {{1, 0}, 1}), input_error);
}

TEST_CASE("exact chromatic number on knowns") {
    CHECK(oracle::chromatic_number_exact(cycle(5)) == 3);
    CHECK(oracle::chromatic_number_exact(grotzsch()) == 4);
    CHECK(oracle::chromatic_number_exact(testutil::klique(5)) == 5);
    CHECK(oracle::chromatic_number_exact(cycle(6)) == 2);
    CHECK(oracle::chromatic_number_exact(Graph::from_edges(0, {})) == 0);
    CHECK(oracle::chromatic_number_exact(Graph::from_edges(3, {})) == 1);
}

TEST_CASE("exact chi respects the vertex limit and its env override") {
    Graph big = Graph::from_edges(33, {});
    CHECK_THROWS_AS(oracle::chromatic_number_exact(big), size_error);
    CHECK(oracle::chromatic_number_exact(big, 40) == 1);
    setenv("CHIBOUND_ORACLE_LIMIT", "40", 1);
    CHECK(oracle::chromatic_number_exact(big) == 1);
    unsetenv("CHIBOUND_ORACLE_LIMIT");
}

TEST_CASE("brute force clique number") {
    CHECK(oracle::max_clique_bruteforce(testutil::klique(5)) == 5);
    CHECK(oracle::max_clique_bruteforce(cycle(5)) == 2);
    CHECK(oracle::max_clique_bruteforce(h_n(5)) == 5);
    CHECK_THROWS_AS(oracle::max_clique_bruteforce(Graph::from_edges(17, {})), size_error);
}

TEST_CASE("forbidden-pattern enumeration") {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto d = oracle::find_forbidden_by_enumeration(diamond, oracle::Pattern::Diamond);
    REQUIRE(d);
    CHECK(check_witness(diamond, *d));

    Graph c5k2 = cycle(5).disjoint_union(testutil::klique(2));
    auto p = oracle::find_forbidden_by_enumeration(c5k2, oracle::Pattern::P2UnionP4);
    REQUIRE(p);
    CHECK(check_witness(c5k2, *p));

    Graph k6 = testutil::klique(6);
    CHECK_FALSE(oracle::find_forbidden_by_enumeration(k6, oracle::Pattern::Diamond));
    CHECK_FALSE(oracle::find_forbidden_by_enumeration(k6, oracle::Pattern::P2UnionP4));

    // P3 u P3 shares the degree profile of P2 u P4 but is not a hit
    Graph p3p3 = path_graph(3).disjoint_union(path_graph(3));
    CHECK_FALSE(oracle::find_forbidden_by_enumeration(p3p3, oracle::Pattern::P2UnionP4));

    CHECK_THROWS_AS(oracle::find_forbidden_by_enumeration(Graph::from_edges(13, {}),
                                                          oracle::Pattern::Diamond),
                    size_error);
}

TEST_CASE("chi is at least the clique number on random graphs") {
    std::mt19937 rng(5);
    for (int round = 0; round < 60; ++round) {
        Graph g = testutil::random_graph(9 + int(rng() % 4), 0.45, rng);
        int chi = oracle::chromatic_number_exact(g);
        int w = oracle::max_clique_bruteforce(g);
        CHECK(chi >= w);
        CHECK(chi <= g.order());
    }
}
