#include <catch_amalgamated.hpp>

#include "chibound/cograph.hpp"
#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "test_util.hpp"

using namespace chibound;

TEST_CASE("cotree construction on the base shapes") {
    Cotree join = build_cotree(testutil::klique(3));
    CHECK(join.nodes[join.root].kind == Cotree::Kind::Join);
    CHECK(join.nodes[join.root].children.size() == 3);

    Cotree uni = build_cotree(Graph::from_edges(3, {}));
    CHECK(uni.nodes[uni.root].kind == Cotree::Kind::Union);
    CHECK(uni.nodes[uni.root].children.size() == 3);

    try {
        build_cotree(path_graph(4));
        FAIL("P4 must be rejected");
    } catch (const not_a_cograph& e) {
        CHECK(e.p4.kind == WitnessKind::P4);
        CHECK(check_witness(path_graph(4), e.p4));
    }
}

TEST_CASE("cotree evaluation reproduces the graph") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = random_cograph(1 + int(seed % 13), seed);
        Cotree t = build_cotree(g);
        CHECK(evaluate_cotree(t, g.order()) == g);
        // canonical form: no two adjacent internal nodes share a kind
        for (const auto& node : t.nodes)
            for (int c : node.children)
                if (t.nodes[c].kind != Cotree::Kind::Leaf)
                    CHECK(t.nodes[c].kind != node.kind);
    }
}

TEST_CASE("cograph colouring is exact") {
    CHECK(colour_cograph(testutil::klique(4)).colours_used == 4);
    CHECK(colour_cograph(cycle(4)).colours_used == 2);

    for (uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = random_cograph(1 + int(seed % 14), seed * 77);
        Colouring c = colour_cograph(g);
        validate_colouring(g, c);
        CHECK(c.colours_used == oracle::chromatic_number_exact(g));
    }
}

TEST_CASE("palette colouring remaps through the palette") {
    Colouring c = colour_cograph_with_palette(testutil::klique(2), {5, 6});
    CHECK(((c.colour[0] == 5 && c.colour[1] == 6) || (c.colour[0] == 6 && c.colour[1] == 5)));

    Colouring flat = colour_cograph_with_palette(Graph::from_edges(4, {}), {3});
    for (int v = 0; v < 4; ++v) CHECK(flat.colour[v] == 3);

    CHECK_THROWS_AS(colour_cograph_with_palette(testutil::klique(3), {1, 2}), capacity_error);
    CHECK_THROWS_AS(colour_cograph_with_palette(testutil::klique(2), {1, 1}), input_error);
    CHECK_THROWS_AS(colour_cograph_with_palette(path_graph(4), {1, 2}), not_a_cograph);
}
