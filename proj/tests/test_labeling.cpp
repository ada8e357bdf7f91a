#include <random>

#include "doctest.h"
#include "tr2dom/enumerate.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/labeling.hpp"

using namespace tr2dom;

namespace {

Labeling lab(std::initializer_list<int> vals) {
    std::vector<std::uint8_t> v;
    for (int x : vals) v.push_back(static_cast<std::uint8_t>(x));
    return Labeling(std::move(v));
}

}  // namespace

TEST_CASE("labeling: weight") {
    CHECK(weight(Labeling::zeros(3)) == 0);
    CHECK(weight(Labeling::ones(4)) == 4);
    CHECK(weight(lab({2, 1, 0, 0})) == 3);
}

TEST_CASE("labeling: check_r2f") {
    Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(check_r2f(c4, lab({1, 0, 1, 0})).empty());

    Graph p3 = generate(FamilySpec::path(3));
    auto v = check_r2f(p3, lab({1, 0, 0}));
    REQUIRE(v.size() == 2);
    CHECK(v[0].vertex == 1);
    CHECK(v[1].vertex == 2);
    CHECK(v[0].kind == Violation::Kind::UncoveredZero);

    Graph star4 = generate(FamilySpec::star(4));  // K_{1,3}, center 0
    CHECK(check_r2f(star4, lab({2, 0, 0, 0})).empty());

    CHECK_THROWS_AS(check_r2f(p3, lab({1, 0})), std::invalid_argument);
}

TEST_CASE("labeling: check_tr2df") {
    Graph ds = generate(FamilySpec::double_star(3, 3));
    Labeling f = Labeling::zeros(8);
    f[0] = 2;
    f[1] = 2;
    CHECK(check_tr2df(ds, f).empty());
    CHECK(weight(f) == 4);

    Graph star4 = generate(FamilySpec::star(4));
    auto v = check_tr2df(star4, lab({2, 0, 0, 0}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::IsolatedPositive);
    CHECK(v[0].vertex == 0);

    Graph p5 = generate(FamilySpec::path(5));
    Labeling g = lab({1, 1, 0, 1, 1});
    CHECK(check_tr2df(p5, g).empty());
    CHECK(weight(g) == 4);
}

TEST_CASE("labeling: partition") {
    Graph c4 = generate(FamilySpec::cycle(4));
    Partition p = partition(c4, lab({1, 0, 1, 0}));
    CHECK(p.v1 == std::vector<int>{0, 2});
    CHECK(p.v01 == std::vector<int>{1, 3});
    CHECK(p.v02.empty());

    Graph star4 = generate(FamilySpec::star(4));
    Partition q = partition(star4, lab({2, 0, 0, 0}));
    CHECK(q.v02 == std::vector<int>{1, 2, 3});
    CHECK(q.v01.empty());

    Partition r = partition(c4, Labeling::ones(4));
    CHECK(r.v0.empty());
    CHECK(r.v01.empty());
    CHECK(r.v02.empty());
}

TEST_CASE("labeling: external private neighbors") {
    Graph p3 = generate(FamilySpec::path(3));
    CHECK(external_private_neighbors(p3, {1}, 1) == std::vector<int>{0, 2});

    Graph k3 = generate(FamilySpec::complete(3));
    CHECK(external_private_neighbors(k3, {0, 1}, 0).empty());

    Graph star5 = generate(FamilySpec::star(5));  // K_{1,4}
    CHECK(external_private_neighbors(star5, {0}, 0) == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(external_private_neighbors(p3, {1}, 0), std::invalid_argument);
}

TEST_CASE("labeling: domination set checks") {
    Graph p4 = generate(FamilySpec::path(4));
    CHECK(is_dominating_set(p4, {1, 2}));
    CHECK(is_total_dominating_set(p4, {1, 2}));
    CHECK(!is_double_dominating_set(p4, {1, 2}));

    Graph c6 = generate(FamilySpec::cycle(6));
    CHECK(is_double_dominating_set(c6, {0, 1, 3, 4}));

    for (const auto& spec : {FamilySpec::path(5), FamilySpec::cycle(4), FamilySpec::star(4)}) {
        Graph g = generate(spec);
        std::vector<int> all;
        for (int v = 0; v < g.order(); ++v) all.push_back(v);
        CHECK(is_dominating_set(g, all));
        CHECK(is_total_dominating_set(g, all));
        CHECK(is_double_dominating_set(g, all));
    }
}

TEST_CASE("labeling: text and io forms") {
    Labeling f = parse_labeling("1 1 0 1 1");
    CHECK(f.size() == 5);
    CHECK(weight(f) == 4);
    CHECK(format_labeling(f) == "1 1 0 1 1");
    CHECK_THROWS_AS(parse_labeling("1 3 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_labeling(""), std::invalid_argument);
}

TEST_CASE("labeling: properties on small graphs") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            // Random labelings: tr2df implies r2f; boolean fast paths agree
            // with the violation collectors.
            for (int trial = 0; trial < 8; ++trial) {
                Labeling f = Labeling::zeros(n);
                for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(rng() % 3);
                bool tr2 = check_tr2df(g, f).empty();
                bool r2 = check_r2f(g, f).empty();
                CHECK(is_tr2df(g, f) == tr2);
                CHECK(is_r2f(g, f) == r2);
                if (tr2) CHECK(r2);
                if (tr2) {
                    // Partition structure of a valid TR2DF.
                    Partition p = partition(g, f);
                    for (int v : p.v01) {
                        int ones = 0;
                        for (int w : g.neighbors(v))
                            if (f[w] == 1) ++ones;
                        CHECK(ones >= 2);
                    }
                    for (int v : p.v02) {
                        bool has2 = false;
                        for (int w : g.neighbors(v))
                            if (f[w] == 2) has2 = true;
                        CHECK(has2);
                    }
                }
            }
            // The all-ones labeling is a TR2DF iff delta >= 1 (always here).
            CHECK(is_tr2df(g, Labeling::ones(n)));
            // A double dominating set, used as a 0/1 labeling, is a TR2DF.
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<int> s;
                Labeling ind = Labeling::zeros(n);
                for (int v = 0; v < n; ++v)
                    if (rng() % 2) {
                        s.push_back(v);
                        ind[v] = 1;
                    }
                if (is_double_dominating_set(g, s)) CHECK(is_tr2df(g, ind));
            }
        });
    }
    // all-ones fails when an isolated vertex exists
    Graph lonely(3, {{0, 1}});
    CHECK(!is_tr2df(lonely, Labeling::ones(3)));
}
