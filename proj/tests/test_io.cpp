#include <catch_amalgamated.hpp>

#include <random>

#include "chibound/engine.hpp"
#include "chibound/generators.hpp"
#include "chibound/io.hpp"
#include "test_util.hpp"

using namespace chibound;

TEST_CASE("graph6 hand-encoded records") {
    Graph k1 = io::parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(io::write_graph6(k1) == "@");

    Graph k2 = io::parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(io::write_graph6(k2) == "A_");

    CHECK(io::parse_graph6(">>graph6<<A_").order() == 2);
    CHECK(io::parse_graph6("A_\n").adjacent(0, 1));
}

TEST_CASE("graph6 round-trips arbitrary graphs") {
    std::mt19937 rng(23);
    for (int n : {0, 1, 5, 13, 40, 70}) {
        for (int round = 0; round < 5; ++round) {
            Graph g = testutil::random_graph(n, 0.4, rng);
            CHECK(io::parse_graph6(io::write_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(io::parse_graph6(""), parse_error);
    CHECK_THROWS_AS(io::parse_graph6("A"), parse_error);    // missing data byte
    CHECK_THROWS_AS(io::parse_graph6("A__"), parse_error);  // extra data byte
    CHECK_THROWS_AS(io::parse_graph6("A\x20"), parse_error); // byte below 63
    CHECK_THROWS_AS(io::parse_graph6("A\x7f"), parse_error); // byte above 126
    // n = 2 uses one payload bit; any nonzero padding bit must be rejected
    std::string bad = "A";
    bad.push_back(char(63 + 33)); // topmost bit set plus one padding bit
    CHECK_THROWS_AS(io::parse_graph6(bad), parse_error);
    try {
        io::parse_graph6(bad);
    } catch (const parse_error& e) {
        CHECK(e.where == 1);
    }
}

TEST_CASE("graph6 rejects every first-byte mutation of a valid record") {
    std::string record = io::write_graph6(cycle(5)); // n=5: header byte + 2 data bytes
    for (int value = 63; value <= 126; ++value) {
        if (char(value) == record[0]) continue;
        std::string mutated = record;
        mutated[0] = char(value);
        // every other order promises a different payload length
        CHECK_THROWS_AS(io::parse_graph6(mutated), parse_error);
    }
}

TEST_CASE("dimacs parse and write") {
    Graph k3 = io::parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph e2 = io::parse_dimacs("p edge 2 0\n");
    CHECK(e2.order() == 2);
    CHECK(e2.edge_count() == 0);

    Graph grz = grotzsch();
    CHECK(io::parse_dimacs(io::write_dimacs(grz)) == grz);
}

TEST_CASE("dimacs parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            io::parse_dimacs(text);
        } catch (const parse_error& e) {
            return e.where;
        }
        return -1L;
    };
    CHECK(line_of("e 1 2\n") == 1);                        // edge before p
    CHECK(line_of("c x\nzzz\n") == 2);                     // unknown line
    CHECK(line_of("p edge 2 1\ne 1 3\n") == 2);            // endpoint out of range
    CHECK(line_of("p edge 2 1\ne 1 1\n") == 2);            // self-loop
    CHECK(line_of("p edge 2 2\ne 1 2\n") >= 2);            // m mismatch
    CHECK(line_of("p edge 2 0\np edge 2 0\n") == 2);       // duplicate p
    CHECK(line_of("c only comments\n") >= 1);              // missing p line
}

TEST_CASE("certificates round-trip and enforce their invariants") {
    Graph k1 = Graph::from_edges(1, {});
    auto outcome = colour(k1);
    auto doc = io::make_certificate(k1, outcome);
    std::string json = io::write_certificate(doc);
    auto back = io::parse_certificate(json);
    CHECK(back.strategy == "TRIVIAL");
    CHECK(back.n == 1);
    CHECK(back.colours_used == 1);
    CHECK(io::write_certificate(back) == json);

    // bound < colours_used must be rejected
    auto tampered = doc;
    tampered.bound = 0;
    CHECK_THROWS_AS(io::write_certificate(tampered), input_error);
    std::string bad_json = json;
    auto pos = bad_json.find("\"bound\": 1");
    REQUIRE(pos != std::string::npos);
    bad_json.replace(pos, 10, "\"bound\": 0");
    CHECK_THROWS_AS(io::parse_certificate(bad_json), parse_error);
}

TEST_CASE("certificate of an h_5 run records the strategy and omega") {
    Graph h5 = h_n(5);
    auto outcome = colour(h5);
    auto doc = io::make_certificate(h5, outcome);
    CHECK(doc.omega == 5);
    CHECK(doc.strategy == strategy_name(outcome.strategy));
    CHECK(doc.colours_used == 5);
    auto back = io::parse_certificate(io::write_certificate(doc));
    CHECK(back.omega == 5);
    CHECK(back.strategy == doc.strategy);
}
