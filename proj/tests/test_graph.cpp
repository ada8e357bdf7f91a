#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tr2dom/enumerate.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/graph.hpp"
#include "tr2dom/graph_io.hpp"
#include "tr2dom/profile.hpp"

using namespace tr2dom;

TEST_CASE("graph: construction and adjacency") {
    Graph g(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 3));
    auto nb = g.neighbors(1);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("graph: edge list parsing") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph k2 = parse_edge_list("2 1\n0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    try {
        parse_edge_list("2 1\n0 0");
        FAIL("expected self-loop error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\nx y"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 7"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);

    Graph g = parse_edge_list(format_edge_list(p3));
    CHECK(g.edges() == p3.edges());
}

TEST_CASE("graph6: known encodings") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK(encode_graph6(k2) == "A_");
    CHECK(encode_graph6(p3) == "Bg");
    CHECK(parse_graph6(">>graph6<<A_").order() == 2);

    CHECK_THROWS_AS(parse_graph6("A"), ParseError);    // truncated body
    CHECK_THROWS_AS(parse_graph6("A_ \x07"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

namespace {

// Independent graph6 encoder used as the oracle: builds the bit string
// explicitly and packs it afterwards.
std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out;
    out.push_back(static_cast<char>(g.order() + 63));
    for (std::size_t at = 0; at < bits.size(); at += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[at + b] - '0');
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6: matches a reference encoder and round-trips") {
    for (int n = 2; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            std::string mine = encode_graph6(g);
            CHECK(mine == reference_graph6(g));
            Graph back = parse_graph6(mine);
            CHECK(back.order() == g.order());
            CHECK(back.edges() == g.edges());
        });
    }
    // Round-trip through a corpus stream.
    std::ostringstream corpus;
    for_each_connected_graph(4, [&](const Graph& g) { corpus << encode_graph6(g) << '\n'; });
    std::istringstream in(corpus.str());
    auto graphs = read_graph6_stream(in);
    CHECK(graphs.size() == 38);
    std::ostringstream again;
    for (const auto& g : graphs) again << encode_graph6(g) << '\n';
    CHECK(again.str() == corpus.str());
}

TEST_CASE("graph6: wide order header") {
    // 63 vertices exercises the 3-char size header.
    Graph big = generate(FamilySpec::path(63));
    Graph back = parse_graph6(encode_graph6(big));
    CHECK(back.order() == 63);
    CHECK(back.edges() == big.edges());
}

TEST_CASE("graph6: random round-trips up to n = 12") {
    std::mt19937 rng(42);
    for (int n = 2; n <= 12; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0) edges.emplace_back(i, j);
            Graph g(n, edges);
            Graph back = parse_graph6(encode_graph6(g));
            CHECK(back.edges() == g.edges());
        }
    }
}

TEST_CASE("families: canonical generation") {
    Graph c3 = generate(FamilySpec::cycle(3));
    CHECK(c3.order() == 3);
    CHECK(c3.max_degree() == 2);
    CHECK(c3.min_degree() == 2);

    Graph ds = generate(FamilySpec::double_star(3, 3));
    CHECK(ds.order() == 8);
    CHECK(ds.adjacent(0, 1));
    CHECK(ds.degree(0) == 4);
    CHECK(ds.degree(1) == 4);

    Graph cp2 = generate(FamilySpec::corona(FamilySpec::path(2)));
    CHECK(cp2.order() == 4);
    CHECK(is_tree(cp2));
    CHECK(profile(cp2).diameter == 3);  // the path P4

    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::pendant_path_tree(3)), std::invalid_argument);
}

TEST_CASE("families: label parsing round-trip") {
    for (const char* text :
         {"path(7)", "cycle(9)", "doublestar(3,4)", "corona(path(2))",
          "join(complete(2),empty(5))", "twostarbridge(4,4)", "pendantpathtree(6)"}) {
        FamilySpec spec = parse_family(text);
        CHECK(spec.label() == text);
        CHECK(generate(spec).order() >= 1);
    }
    CHECK_THROWS_AS(parse_family("nosuch(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path(2) junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("corona(3)"), std::invalid_argument);
}

TEST_CASE("profile: named examples") {
    auto c5 = profile(generate(FamilySpec::cycle(5)));
    CHECK(c5.girth == 5);
    CHECK(c5.diameter == 2);
    CHECK(c5.leaf_count == 0);

    auto star5 = profile(generate(FamilySpec::star(5)));  // K_{1,4}
    CHECK(star5.max_degree == 4);
    CHECK(star5.min_degree == 1);
    CHECK(!star5.girth.has_value());
    CHECK(star5.leaf_count == 4);
    CHECK(star5.support_count == 1);
    CHECK(star5.strong_supports == std::vector<int>{0});

    auto cp3 = profile(generate(FamilySpec::corona(FamilySpec::path(3))));
    CHECK(cp3.leaf_count == 3);
    CHECK(cp3.support_count == 3);
    CHECK(cp3.weak_supports.size() == 3);
}

TEST_CASE("profile: family closed forms") {
    for (int n = 2; n <= 9; ++n) {
        auto p = profile(generate(FamilySpec::path(n)));
        CHECK(p.leaf_count == 2);
        CHECK(p.diameter == n - 1);
        CHECK(!p.girth.has_value());
    }
    for (int n = 3; n <= 9; ++n) CHECK(profile(generate(FamilySpec::cycle(n))).girth == n);
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            CHECK(profile(generate(FamilySpec::double_star(p, q))).diameter == 3);
    for (int n = 2; n <= 5; ++n) {
        auto pr = profile(generate(FamilySpec::corona(FamilySpec::star(n))));
        CHECK(pr.leaf_count == n);
        CHECK(pr.support_count == n);
    }
}

TEST_CASE("profile: girth is infinite exactly on forests") {
    for (int n = 2; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            CHECK(profile(g).girth.has_value() == !is_forest(g));
        });
    }
}

TEST_CASE("components and tree tests") {
    Graph p5 = generate(FamilySpec::path(5));
    CHECK(connected_components(p5).size() == 1);
    CHECK(is_tree(p5));

    Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK(connected_components(two_k2).size() == 2);
    CHECK(!is_connected(two_k2));
    CHECK(is_forest(two_k2));

    Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(is_connected(c4));
    CHECK(!is_tree(c4));
    CHECK(!is_forest(c4));
}
