#include "subdom/graph6.hpp"

#include "fixtures.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using namespace subdom;
using subdom::testing::family;

TEST_CASE("graph6 single-record vectors")
{
    SUBCASE("K1")
    {
        auto g = parse_graph6_record("@");
        CHECK(g.order() == 1);
        CHECK(g.size() == 0);
        CHECK(write_graph6_record(Graph(1)) == "@");
    }
    SUBCASE("K2: one edge bit, 63 + 0b100000")
    {
        auto g = parse_graph6_record("A_");
        CHECK(g.order() == 2);
        CHECK(g.adjacent(0, 1));
        CHECK(write_graph6_record(family(Family::complete, {2})) == "A_");
    }
    SUBCASE("P4: bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101001 -> 'h'")
    {
        auto p4 = family(Family::path, {4});
        CHECK(write_graph6_record(p4) == "Ch");
        CHECK(parse_graph6_record("Ch") == p4);
    }
    SUBCASE("named graphs")
    {
        CHECK(write_graph6_record(family(Family::star, {5})) == "Ds_");
        CHECK(write_graph6_record(family(Family::cycle, {6})) == "EhEG");
        CHECK(write_graph6_record(testing::petersen()) == "IheA@GUAo");
    }
    SUBCASE("empty graph")
    {
        CHECK(write_graph6_record(Graph(0)) == "?");
        CHECK(parse_graph6_record("?").order() == 0);
    }
    SUBCASE("header prefix is accepted")
    {
        CHECK(parse_graph6_record(">>graph6<<A_") == family(Family::complete, {2}));
    }
    SUBCASE("four-byte size field from n = 63")
    {
        auto g = Graph::from_edges(63, std::vector<Edge>{{0, 62}});
        auto s = write_graph6_record(g);
        CHECK(s.size() == 4 + 326);
        CHECK(s.substr(0, 4) == "~??~");
        // Edge (0,62) is bit 61*62/2 = 1891: byte 315, position 1 -> 63 + 16.
        CHECK(s[4 + 315] == 'O');
        CHECK(parse_graph6_record(s) == g);
    }
}

TEST_CASE("graph6 errors")
{
    auto offset_of = [](std::string_view line) -> std::size_t {
        try {
            parse_graph6_record(line);
        }
        catch (const ParseError & e) {
            return e.offset();
        }
        FAIL("expected a ParseError");
        return 0;
    };

    CHECK_THROWS_AS(parse_graph6_record(""), ParseError);
    CHECK(offset_of("C ") == 1);
    CHECK(offset_of("C h") == 2);
    CHECK(offset_of("C\x7f") == 1);
    CHECK_THROWS_WITH_AS(parse_graph6_record("D?"), doctest::Contains("truncated"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record("A_?"), doctest::Contains("trailing"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record("~?"), doctest::Contains("size field"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record("~~??????"), doctest::Contains("8-byte"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record(":Fa@x^"), doctest::Contains("sparse6"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record(">>sparse6<<:Fa@x^"), doctest::Contains("sparse6"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_record("&C?"), doctest::Contains("digraph6"), ParseError);

    SUBCASE("nonzero padding is strict by default")
    {
        // n = 2 uses one bit; 'A' + 0b100001 sets a padding bit.
        CHECK_THROWS_WITH_AS(parse_graph6_record("A`"), doctest::Contains("padding"), ParseError);
        std::string warning;
        auto g = parse_graph6_record("A`", {.strict = false}, &warning);
        CHECK(g == family(Family::complete, {2}));
        CHECK(warning.find("padding") != std::string::npos);
    }
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> order(0, 16);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto g = testing::random_graph(order(rng), density(rng), rng);
        auto encoded = write_graph6_record(g);
        CHECK(parse_graph6_record(encoded) == g);
        CHECK(write_graph6_record(parse_graph6_record(encoded)) == encoded);
    }
    for (std::size_t n : {61U, 62U, 63U, 64U, 65U, 130U}) {
        auto g = testing::random_graph(n, 0.3, rng);
        CHECK(parse_graph6_record(write_graph6_record(g)) == g);
    }
}

TEST_CASE("edge list")
{
    SUBCASE("path")
    {
        CHECK(parse_edge_list("n 4\n0 1\n1 2\n2 3\n") == family(Family::path, {4}));
    }
    SUBCASE("no edges")
    {
        auto g = parse_edge_list("n 2");
        CHECK(g.order() == 2);
        CHECK(g.size() == 0);
    }
    SUBCASE("duplicate edges collapse")
    {
        auto g = parse_edge_list("n 3\n0 1\n0 1\n1 0\n");
        CHECK(g.size() == 1);
    }
    SUBCASE("comments, blank lines and CRLF")
    {
        auto g = parse_edge_list("# a path\r\n\r\nn 4 # order\r\n0 1\r\n  1 2\r\n# skip\n2\t3\r\n");
        CHECK(g == family(Family::path, {4}));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 3\n"), doctest::Contains("out of range"), ParseError);
        CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n1 1\n"), doctest::Contains("self-loop"), ParseError);
        CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n"), doctest::Contains("header"), ParseError);
        CHECK_THROWS_WITH_AS(parse_edge_list("# nothing\n"), doctest::Contains("header"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n 3\n0 x\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n 3\nn 4\n"), ParseError);
        try {
            parse_edge_list("n 3\n0 1\n2 2\n");
            FAIL("expected a ParseError");
        }
        catch (const ParseError & e) {
            CHECK(e.offset() == 8);
        }
    }
    SUBCASE("edge list and graph6 agree under identical labelling")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            auto g = testing::random_graph(1 + trial % 20, 0.4, rng);
            CHECK(parse_edge_list(write_edge_list(g)) == parse_graph6_record(write_graph6_record(g)));
        }
    }
}

TEST_CASE("graph6 stream")
{
    SUBCASE("yields records in order with raw bytes")
    {
        std::istringstream in("Ds_\nEhEG\r\n\nIheA@GUAo");
        GraphStream stream(in, Format::graph6);
        auto a = stream.next();
        REQUIRE(a);
        CHECK(a->index == 1);
        CHECK(a->raw == "Ds_");
        CHECK(a->offset == 0);
        auto b = stream.next();
        REQUIRE(b);
        CHECK(b->raw == "EhEG");
        CHECK(b->offset == 4);
        auto c = stream.next();
        REQUIRE(c);
        CHECK(c->index == 3);
        CHECK(c->graph == testing::petersen());
        CHECK_FALSE(stream.next());
        CHECK_FALSE(stream.next());
        CHECK(stream.position() == 3);
    }
    SUBCASE("a decode failure names the record and the stream offset, then resumes")
    {
        std::istringstream in("A_\nCh\nD?\nA_\n");
        GraphStream stream(in, Format::graph6);
        CHECK(stream.next());
        CHECK(stream.next());
        try {
            stream.next();
            FAIL("expected a ParseError");
        }
        catch (const ParseError & e) {
            CHECK(e.record() == 3);
            CHECK(e.offset() == 8);
            CHECK(std::string(e.what()).find("record 3") != std::string::npos);
        }
        auto after = stream.next();
        REQUIRE(after);
        CHECK(after->index == 4);
    }
    SUBCASE("lenient mode collects padding warnings")
    {
        std::istringstream in("A`\n");
        GraphStream stream(in, Format::graph6, {.strict = false});
        CHECK(stream.next());
        CHECK(stream.warnings().size() == 1);
    }
    SUBCASE("k records yield k graphs")
    {
        std::mt19937_64 rng(3);
        std::string text;
        std::vector<Graph> graphs;
        for (int i = 0; i < 250; ++i) {
            graphs.push_back(testing::random_graph(i % 14, 0.5, rng));
            text += write_graph6_record(graphs.back()) + "\n";
        }
        std::istringstream in(text);
        GraphStream stream(in, Format::graph6);
        std::size_t count = 0;
        while (auto r = stream.next())
            CHECK(r->graph == graphs[count++]);
        CHECK(count == graphs.size());
    }
}

TEST_CASE("edge-list stream splits on headers")
{
    std::istringstream in("# corpus\nn 2\n0 1\n\nn 4 # P4\n0 1\n1 2\n2 3\nn 1\n");
    GraphStream stream(in, Format::edge_list);
    auto a = stream.next();
    REQUIRE(a);
    CHECK(a->graph == family(Family::complete, {2}));
    CHECK(a->raw == "n 2\n0 1");
    auto b = stream.next();
    REQUIRE(b);
    CHECK(b->graph == family(Family::path, {4}));
    CHECK(b->raw == "n 4 # P4\n0 1\n1 2\n2 3");
    auto c = stream.next();
    REQUIRE(c);
    CHECK(c->graph.order() == 1);
    CHECK_FALSE(stream.next());

    std::istringstream bad("n 2\n0 5\nn 2\n0 1\n");
    GraphStream failing(bad, Format::edge_list);
    try {
        failing.next();
        FAIL("expected a ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.record() == 1);
        CHECK(e.offset() == 4);
    }
    CHECK(failing.next());

    std::istringstream headless("0 1\n");
    GraphStream missing(headless, Format::edge_list);
    CHECK_THROWS_AS(missing.next(), ParseError);
}

TEST_CASE("format names")
{
    CHECK(format_from_name("graph6") == Format::graph6);
    CHECK(format_from_name("edgelist") == Format::edge_list);
    CHECK_THROWS_AS(format_from_name("sparse6"), std::invalid_argument);
}
