#include "doctest.h"
#include "test_util.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/labeling.hpp"
#include "tr2dom/reduction.hpp"
#include "tr2dom/solvers.hpp"
#include "tr2dom/tree_dp.hpp"

using namespace tr2dom;

TEST_CASE("x3c: parsing and validation") {
    X3CInstance inst = parse_x3c("2 3\n0 1 2\n0 1 3\n3 4 5\n");
    CHECK(inst.q == 2);
    CHECK(inst.set_count() == 3);
    CHECK(inst.sets[1] == std::array<int, 3>{0, 1, 3});
    CHECK(parse_x3c(format_x3c(inst)).sets == inst.sets);

    CHECK_THROWS_AS(parse_x3c("0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_x3c("1 1\n0 1 9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_x3c("1 1\n0 0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_x3c("1 1\n0 1"), std::invalid_argument);
}

TEST_CASE("reduce: single-triple instance is a 38-vertex tree with k=20") {
    X3CInstance inst;
    inst.q = 1;
    inst.sets = {{0, 1, 2}};
    ReductionOutput red = reduce(inst, ReductionVariant::Bipartite);
    CHECK(red.graph.order() == 38);
    CHECK(red.graph.size() == 37);
    CHECK(is_tree(red.graph));
    CHECK(red.k == 20);
    CHECK(tree_gamma_tr2(red.graph).value == 20);

    // The chordal variant is identical when t = 1.
    ReductionOutput chordal = reduce(inst, ReductionVariant::Chordal);
    CHECK(chordal.graph.edges() == red.graph.edges());
}

TEST_CASE("reduce: empty collection leaves a forest of element gadgets") {
    X3CInstance inst;
    inst.q = 1;
    ReductionOutput red = reduce(inst, ReductionVariant::Bipartite);
    CHECK(red.graph.order() == 30);
    CHECK(red.k == 16);
    CHECK(connected_components(red.graph).size() == 3);
    CHECK(tree_gamma_tr2(red.graph).value == 18);  // 6 per gadget, above k
}

TEST_CASE("reduce: element gadget structure") {
    X3CInstance inst;
    inst.q = 1;
    inst.sets = {{0, 1, 2}};
    ReductionOutput red = reduce(inst, ReductionVariant::Bipartite);
    const auto& h = red.elements[0];
    CHECK(red.graph.adjacent(h.x, h.y));
    CHECK(red.graph.adjacent(h.y, h.a));
    CHECK(red.graph.adjacent(h.y, h.b));
    for (int leaf : h.a_leaves) CHECK(red.graph.adjacent(h.a, leaf));
    for (int leaf : h.b_leaves) CHECK(red.graph.adjacent(h.b, leaf));
    CHECK(brute_force_tr2(testutil::element_gadget(), {}, true).value == 6);

    const auto& s = red.set_gadgets[0];
    CHECK(red.graph.adjacent(s.u, s.v));
    CHECK(red.graph.adjacent(s.v, s.c));
    CHECK(red.graph.degree(s.u) == 4);
    CHECK(red.graph.degree(s.v) == 4);
    for (int i = 0; i < 3; ++i) CHECK(red.graph.adjacent(s.c, red.elements[i].x));
}

TEST_CASE("cover_to_labeling: the proof labeling has weight k and verifies") {
    X3CInstance one;
    one.q = 1;
    one.sets = {{0, 1, 2}};
    ReductionOutput red1 = reduce(one, ReductionVariant::Bipartite);
    Labeling f1 = cover_to_labeling(one, {0}, red1);
    CHECK(weight(f1) == 20);
    CHECK(check_tr2df(red1.graph, f1).empty());

    X3CInstance two;
    two.q = 2;
    two.sets = {{0, 1, 2}, {3, 4, 5}};
    ReductionOutput red2 = reduce(two, ReductionVariant::Bipartite);
    Labeling f2 = cover_to_labeling(two, {0, 1}, red2);
    CHECK(weight(f2) == 40);
    CHECK(check_tr2df(red2.graph, f2).empty());

    CHECK_THROWS_AS(cover_to_labeling(two, {0}, red2), std::invalid_argument);
    CHECK_THROWS_AS(cover_to_labeling(one, {}, red1), std::invalid_argument);
}

TEST_CASE("x3c_brute_force") {
    X3CInstance a;
    a.q = 1;
    a.sets = {{0, 1, 2}};
    CHECK(x3c_brute_force(a) == std::vector<int>{0});

    X3CInstance b;
    b.q = 1;
    CHECK(!x3c_brute_force(b).has_value());

    X3CInstance c;
    c.q = 2;
    c.sets = {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}};
    CHECK(x3c_brute_force(c) == std::vector<int>{0, 2});
}

TEST_CASE("is_chordal") {
    CHECK(is_chordal(generate(FamilySpec::path(6))));
    CHECK(is_chordal(generate(FamilySpec::star(5))));
    CHECK(is_chordal(generate(FamilySpec::complete(5))));
    CHECK(!is_chordal(generate(FamilySpec::cycle(4))));
    CHECK(!is_chordal(generate(FamilySpec::cycle(6))));
    CHECK(is_chordal(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})));  // C4 + chord

    X3CInstance inst;
    inst.q = 2;
    inst.sets = {{0, 1, 2}, {0, 1, 3}};
    CHECK(is_chordal(reduce(inst, ReductionVariant::Chordal).graph));
    CHECK(!bipartition(reduce(inst, ReductionVariant::Chordal).graph).has_value());
    CHECK(bipartition(reduce(inst, ReductionVariant::Bipartite).graph).has_value());
}

TEST_CASE("reduction: forest iff at desk scale") {
    // Instances whose reduction is a forest: t <= 1.
    for (auto& [q, sets] : std::vector<std::pair<int, std::vector<std::array<int, 3>>>>{
             {1, {}}, {1, {{0, 1, 2}}}, {2, {{0, 1, 2}}}, {2, {{1, 3, 5}}}}) {
        X3CInstance inst;
        inst.q = q;
        inst.sets = sets;
        ReductionOutput red = reduce(inst, ReductionVariant::Bipartite);
        REQUIRE(is_forest(red.graph));
        bool cover = x3c_brute_force(inst).has_value();
        CHECK((tree_gamma_tr2(red.graph).value <= red.k) == cover);
    }
}
