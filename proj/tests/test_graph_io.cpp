#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "powerdom/graph_io.hpp"
#include "powerdom/trees.hpp"

using namespace powerdom;

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# a comment\nn 5\n0 1\n1 2\n\n2 3 # trailing\n");
    CHECK(g.order() == 5);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(3, 4));  // isolated vertex survives via the header
    // Without a header the order is one past the largest index mentioned.
    CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
    CHECK(parse_edge_list("").order() == 0);
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracle::random_graph(rng, 1 + int(rng() % 12), 0.4);
        Graph back = parse_edge_list(format_edge_list(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 zebra\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n -3\n"), ParseError);
}

TEST_CASE("graph6 known value") {
    // K_{1,4} with the hub last encodes as D?{: the first six upper-triangle
    // bits are empty and the final column is all ones.
    Graph star(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(write_graph6(star) == "D?{");
    Graph back = parse_graph6("D?{");
    CHECK(back.order() == 5);
    CHECK(back.size() == 4);
    CHECK(back.degree(4) == 4);
}

TEST_CASE("graph6 writer agrees with an independent encoder") {
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(rng, 1 + int(rng() % 30), 0.3);
        CHECK(write_graph6(g) == oracle::naive_graph6(g));
    }
    for (const Graph& t : enumerate_trees(8)) CHECK(write_graph6(t) == oracle::naive_graph6(t));
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(rng, 1 + int(rng() % 40), 0.25);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("graph6 rejects garbage") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);        // truncated bit block
    CHECK_THROWS_AS(parse_graph6("D?{extra"), ParseError);  // overlong
    CHECK_THROWS_AS(parse_graph6("\x01zz"), ParseError);    // byte below the printable range
    CHECK_THROWS_AS(parse_graph6("D?|"), ParseError);       // nonzero padding bits
    CHECK_NOTHROW(parse_graph6(">>graph6<<D?{"));           // optional prefix accepted
}

TEST_CASE("file dispatch by extension") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string base = "/tmp/powerdom_io_test";
    for (const char* ext : {"el", "g6", "json"}) {
        std::string path = base + "." + ext;
        write_graph_file(g, path);
        Graph back = read_graph_file(path);
        CHECK(back.order() == 4);
        CHECK(back.edges() == g.edges());
        std::remove(path.c_str());
    }
    CHECK_THROWS_AS(read_graph_file("/tmp/powerdom_io_test.xyz"), ParseError);
    CHECK_THROWS_AS(read_graph_file("/tmp/nonexistent_powerdom.el"), ParseError);
}

TEST_CASE("explicit format overrides the extension") {
    Graph g(3, {{0, 1}, {1, 2}});
    std::string path = "/tmp/powerdom_io_test.dat";
    write_graph_file(g, path, "g6");
    Graph back = read_graph_file(path, "g6");
    CHECK(back.edges() == g.edges());
    std::remove(path.c_str());
}
