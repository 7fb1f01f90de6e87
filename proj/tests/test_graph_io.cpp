#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "signed_spectra/family.hpp"
#include "signed_spectra/graph_io.hpp"

using namespace signed_spectra;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("sg1 writes the documented layout") {
    const auto g = build(3, {{0, 1, -1}, {1, 2, 1}});
    CHECK(to_sg1(g) == "sg1 3 2\n0 1 -\n1 2 +\n");
    CHECK(to_sg1(build(2, {})) == "sg1 2 0\n");
}

TEST_CASE("sg1 round trip on random graphs") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = oracles::random_signed_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4, 0.5);
        REQUIRE(parse_sg1(to_sg1(g)) == g);
    }
}

TEST_CASE("sg1 golden file for Γ6") {
    const auto text = slurp(std::string(GOLDEN_DIR) + "/gamma6.sg1");
    CHECK(to_sg1(build_family({6, 0})) == text);
    CHECK(parse_sg1(text) == build_family({6, 0}));
}

TEST_CASE("sg1 parse errors carry line numbers") {
    try {
        parse_sg1("sg1 3 2\n0 1 +\n1 2 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("'0'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_sg1(""), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 2\n0 1 +\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 1\n0 3 +\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 1\n1 0 +\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 2\n1 2 +\n0 1 +\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 1\n0 x +\n"), ParseError);
    CHECK_THROWS_AS(parse_sg1("sg1 3 1\n0 1\n"), ParseError);
}

TEST_CASE("graph6 known strings") {
    SimpleGraph k4(4);
    for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    }
    CHECK(to_graph6(k4) == "C~");
    CHECK(parse_graph6("C~") == k4);
    SimpleGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    // x = (01,02,12) = 1,0,1 -> 101000 = 40 -> 'g'
    CHECK(to_graph6(p3) == "Bg");
    CHECK(to_graph6(SimpleGraph(1)) == "@");
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
}

TEST_CASE("graph6 round trip and signature attachment") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = oracles::random_signed_graph(rng, 1 + static_cast<int>(rng() % 20), 0.4, 0.5);
        const auto u = underlying(g);
        REQUIRE(parse_graph6(to_graph6(u)) == u);
        std::string sig;
        for (const auto& e : g.edges()) sig.push_back(e.sign < 0 ? '-' : '+');
        CHECK(from_graph6(to_graph6(u), sig) == g);
        for (auto& c : sig) c = c == '-' ? '1' : '0';
        CHECK(from_graph6(to_graph6(u), sig) == g);
    }
    CHECK_THROWS_AS(from_graph6("C~", "+++"), ParseError);
    CHECK_THROWS_AS(from_graph6("C~", "+++++x"), ParseError);
}

TEST_CASE("graph6 line reader") {
    std::istringstream in(">>graph6<<C~\n\nBg\r\n");
    const auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].size() == 6);
    CHECK(graphs[1].size() == 2);
    std::istringstream bad("C~\nC\n");
    try {
        read_graph6_lines(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}
