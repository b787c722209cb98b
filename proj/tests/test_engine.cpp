#include <catch_amalgamated.hpp>

#include "chibound/engine.hpp"
#include "chibound/fuzz.hpp"
#include "chibound/generators.hpp"
#include "chibound/io.hpp"
#include "chibound/oracle.hpp"
#include "fixture_graphs.hpp"
#include "test_util.hpp"

using namespace chibound;

namespace {

StrategyOutcome expect(const Graph& g, Strategy strategy, int colours) {
    StrategyOutcome out = colour(g);
    INFO("strategy " << strategy_name(out.strategy) << ", colours "
                     << out.colouring.colours_used);
    CHECK(out.strategy == strategy);
    CHECK(out.colouring.colours_used == colours);
    CHECK(oracle::verify_colouring(g, out.colouring).proper);
    CHECK(out.colouring.colours_used <= out.bound);
    return out;
}

} // namespace

TEST_CASE("bipartite palette matching") {
    auto r1 = bipartite_match({{2, 3}, {2}}, {1, 2, 3, 4});
    REQUIRE(r1.assignment);
    CHECK((*r1.assignment)[0] == 3);
    CHECK((*r1.assignment)[1] == 2);

    auto r2 = bipartite_match({{2}, {2}}, {1, 2, 3, 4});
    CHECK_FALSE(r2.assignment);
    CHECK(r2.hall_violator == std::vector<int>{0, 1});

    auto r3 = bipartite_match({{1}, {2}, {3}}, {1, 2, 3});
    REQUIRE(r3.assignment);
    CHECK(*r3.assignment == std::vector<int>{1, 2, 3});
}

TEST_CASE("trivial dispatches") {
    StrategyOutcome empty = colour(Graph::from_edges(0, {}));
    CHECK(empty.strategy == Strategy::Trivial);
    CHECK(empty.colouring.colours_used == 0);

    StrategyOutcome edgeless = colour(Graph::from_edges(4, {}));
    CHECK(edgeless.strategy == Strategy::Trivial);
    CHECK(edgeless.colouring.colours_used == 1);

    StrategyOutcome clique = colour(testutil::klique(4)); // H empty
    CHECK(clique.strategy == Strategy::Trivial);
    CHECK(clique.colouring.colours_used == 4);
}

TEST_CASE("out-of-class inputs are rejected with a witness") {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    try {
        colour(diamond);
        FAIL("expected rejection");
    } catch (const out_of_class_error& e) {
        CHECK(e.witness.kind == WitnessKind::Diamond);
        CHECK(check_witness(diamond, e.witness));
    }
}

TEST_CASE("omega = 2 strategy") {
    expect(cycle(5), Strategy::LP2P4, 3);
    expect(testutil::klique(2), Strategy::LP2P4, 2);
    StrategyOutcome grz = expect(grotzsch(), Strategy::LP2P4, 4);
    CHECK(grz.omega == 2);
    CHECK(grz.bound == 4);
}

TEST_CASE("omega = 3, k <= 2 strategy") {
    // triangle with one pendant: H is a single vertex
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}});
    StrategyOutcome out = expect(g, Strategy::LD21, 3);
    CHECK(out.omega == 3);
    CHECK(out.bound == 6);
    CHECK(oracle::chromatic_number_exact(g) == 3);

    // direct call works for an empty H as well
    PrimaryPartition p = primary_partition(testutil::klique(3), {0, 1, 2});
    StrategyOutcome direct = colour_ld21(testutil::klique(3), p, 0);
    CHECK(direct.colouring.colours_used == 3);
}

TEST_CASE("two-block split strategy (omega >= 4, 2k <= omega)") {
    Graph k5k2 = fixtures::disjoint_cliques(5, 2);
    expect(k5k2, Strategy::LD2, 5);

    StrategyOutcome h6 = expect(h_n(6), Strategy::LD2, 6);
    CHECK(h6.omega == 6);
    CHECK(h6.k == 2);

    StrategyOutcome h7 = colour(h_n(7));
    CHECK(h7.colouring.colours_used == 7);

    PrimaryPartition p = primary_partition(h_n(6), {0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(colour_ld2(h_n(6), p, 4), input_error); // 2k > omega off contract
}

TEST_CASE("complete-to-B strategy") {
    Graph w5 = fixtures::cd1_fixture(5);
    StrategyOutcome out5 = expect(w5, Strategy::CD1, 5);
    CHECK(out5.omega == 5);
    CHECK(out5.k == 3);
    CHECK(oracle::chromatic_number_exact(w5) == 5);

    Graph w4 = fixtures::cd1_fixture(4);
    expect(w4, Strategy::CD1, 4);
    CHECK(oracle::chromatic_number_exact(w4) == 4);

    // omega == 3 makes the premise impossible
    Graph two_triangles = fixtures::disjoint_cliques(3, 3);
    PrimaryPartition p = primary_partition(two_triangles, {0, 1, 2});
    CHECK_THROWS_AS(colour_cd1(two_triangles, p, {3, 4, 5}), input_error);
}

TEST_CASE("anticomplete-K_k strategy") {
    StrategyOutcome a = expect(fixtures::disjoint_cliques(5, 4), Strategy::C2, 5);
    CHECK(a.k == 4);

    Graph trip = fixtures::disjoint_cliques(4, 4).disjoint_union(testutil::klique(3));
    expect(trip, Strategy::C2, 4);

    Graph pend = fixtures::c2_pendant_fixture();
    StrategyOutcome out = expect(pend, Strategy::C2, 4);
    CHECK(oracle::chromatic_number_exact(pend) == 4);
    // the pendant 7 sits in R_1 and must avoid b_1's colour
    CHECK(out.colouring.colour[7] != out.colouring.colour[4]);

    // dispatcher ordering: anticomplete K_k wins before the k >= 4 branch
    StrategyOutcome order = colour(fixtures::disjoint_cliques(5, 4));
    CHECK(order.strategy == Strategy::C2);
}

TEST_CASE("k = 3 searches") {
    Graph l31 = fixtures::bridge_cliques(3, 3);
    StrategyOutcome o31 = expect(l31, Strategy::L31, 3);
    CHECK(o31.bound == 6);
    CHECK(oracle::chromatic_number_exact(l31) == 3);

    // two far triangles dispatch to C2 instead
    StrategyOutcome c2 = colour(fixtures::disjoint_cliques(3, 3));
    CHECK(c2.strategy == Strategy::C2);
    CHECK(c2.colouring.colours_used == 3);

    Graph l32 = fixtures::l32_fixture();
    StrategyOutcome o32 = expect(l32, Strategy::L32, 4);
    CHECK(o32.omega == 4);
    CHECK(oracle::chromatic_number_exact(l32) == 4);

    Graph l33 = fixtures::bridge_cliques(5, 3);
    StrategyOutcome o33 = expect(l33, Strategy::L33, 5);
    CHECK(oracle::chromatic_number_exact(l33) == 5);
}

TEST_CASE("matched-prefix strategy (omega >= 4, k >= 4)") {
    Graph bridge = fixtures::bridge_cliques(5, 4);
    StrategyOutcome out = expect(bridge, Strategy::L41, 5);
    CHECK(out.omega == 5);
    CHECK(out.k == 4);
    CHECK(oracle::chromatic_number_exact(bridge) == 5);

    Graph two = fixtures::l41_two_matched_fixture();
    REQUIRE(class_membership(two).in_class);
    StrategyOutcome o2 = expect(two, Strategy::L41, 6);
    CHECK(o2.omega == 6);
}

TEST_CASE("matched S cell with an internal edge is handled") {
    Graph g = fixtures::l41_matched_cell_fixture();
    // in-class per the exhaustive oracle (n = 10)
    CHECK_FALSE(oracle::find_forbidden_by_enumeration(g, oracle::Pattern::Diamond));
    CHECK_FALSE(oracle::find_forbidden_by_enumeration(g, oracle::Pattern::P2UnionP4));
    REQUIRE(class_membership(g).in_class);

    StrategyOutcome out = expect(g, Strategy::L41, 4);
    CHECK(out.omega == 4);
    CHECK(out.k == 4);
    CHECK(oracle::chromatic_number_exact(g) == 4);
    // the S_1^1 pair {8, 9} is an edge and must receive two distinct colours
    CHECK(out.colouring.colour[8] != out.colouring.colour[9]);
}

TEST_CASE("identical inputs produce identical certificates") {
    Graph g = grotzsch();
    auto c1 = io::write_certificate(io::make_certificate(g, colour(g)));
    auto c2 = io::write_certificate(io::make_certificate(g, colour(g)));
    CHECK(c1 == c2);
}

TEST_CASE("fuzz smoke: 300 pipeline instances") {
    FuzzOptions opt;
    opt.max_n = 12;
    opt.count = 300;
    opt.seed = 99;
    opt.jobs = 2;
    FuzzReport report = run_fuzz(opt);
    CHECK(report.instances == 300);
    CHECK(report.theory_violations == 0);
    for (const auto& v : report.violations) {
        INFO(v.index << ": " << v.message);
        CHECK(false);
    }
    CHECK(report.strategy_counts.size() >= 3);
}
