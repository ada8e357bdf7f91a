#include "doctest.h"
#include "tr2dom/bounds.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/solvers.hpp"

using namespace tr2dom;

namespace {

const BoundEntry& entry(const BoundReport& rep, const std::string& name) {
    for (const auto& e : rep.entries)
        if (e.name == name) return e;
    throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("bound_report: C6 hits the girth-order upper bound with equality") {
    Graph c6 = generate(FamilySpec::cycle(6));
    BoundReport rep = bound_report(c6);
    const auto& u1 = entry(rep, "girth_upper");
    CHECK(u1.applicable);
    CHECK(u1.rhs == 4);
    CHECK(u1.lhs == 4);
    CHECK(u1.holds);
    CHECK(u1.tight);
    CHECK(check_girth_upper_corollary(c6).holds);
    CHECK(check_girth_upper_corollary(generate(FamilySpec::cycle(7))).holds);
}

TEST_CASE("bound_report: C9 hits the degree lower bound with equality") {
    BoundReport rep = bound_report(generate(FamilySpec::cycle(9)));
    const auto& u2 = entry(rep, "degree_lower");
    CHECK(u2.applicable);
    CHECK(u2.rhs == 6);
    CHECK(u2.lhs == 6);
    CHECK(u2.tight);
}

TEST_CASE("bound_report: the star shows why girth_upper needs delta >= 2") {
    Graph star5 = generate(FamilySpec::star(5));  // K_{1,4}, n=5
    BoundReport rep = bound_report(star5);
    const auto& u1 = entry(rep, "girth_upper");
    CHECK(!u1.applicable);
    // The bound itself would fail here: gamma_tR2 = 3 > n+2-(Delta+delta) = 2.
    CHECK(rep.gamma_values.at("gamma_tr2") == 3);
    CHECK(5 + 2 - (4 + 1) == 2);
}

TEST_CASE("bound_report: tree bounds on the double star") {
    Graph ds = generate(FamilySpec::double_star(3, 3));
    BoundReport rep = bound_report(ds);
    const auto& tl = entry(rep, "tree_leaf_lower");
    CHECK(tl.applicable);
    CHECK(tl.rhs == 4);  // ceil(2(8-6+3)/3)
    CHECK(tl.lhs == 4);
    CHECK(tl.tight);
    const auto& tu = entry(rep, "tree_support_upper");
    CHECK(tu.applicable);
    CHECK(tu.lhs == 16);  // 4 * gamma_tR2
    CHECK(tu.rhs == 28);  // 3n + 2s
    CHECK(tu.holds);
    CHECK(!tu.tight);
}

TEST_CASE("bound_report: observation and 3gamma rows") {
    Graph tsb = generate(FamilySpec::two_star_bridge(4, 4));
    BoundReport rep = bound_report(tsb);
    CHECK(entry(rep, "total_lower").holds);
    CHECK(entry(rep, "total_upper").holds);
    const auto& p3g = entry(rep, "three_gamma");
    CHECK(p3g.lhs == 6);
    CHECK(p3g.rhs == 6);
    CHECK(p3g.tight);
    CHECK(entry(rep, "italian_lower").holds);
}

TEST_CASE("bound_report: errors") {
    CHECK_THROWS_AS(bound_report(Graph(4, {{0, 1}, {2, 3}})), DisconnectedError);
    CHECK_THROWS_AS(bound_report(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("check_girth_upper_corollary: not applicable when strict or hypotheses fail") {
    CHECK_THROWS_AS(check_girth_upper_corollary(generate(FamilySpec::cycle(9))), NotApplicableError);
    CHECK_THROWS_AS(check_girth_upper_corollary(generate(FamilySpec::star(5))), NotApplicableError);
}

TEST_CASE("check_degree_lower_equality") {
    CHECK(check_degree_lower_equality(generate(FamilySpec::cycle(6))));
    CHECK(check_degree_lower_equality(generate(FamilySpec::cycle(3))));
    CHECK_THROWS_AS(check_degree_lower_equality(generate(FamilySpec::path(4))), NotApplicableError);
}

TEST_CASE("bound_report: precomputed parameters are honored") {
    Graph c6 = generate(FamilySpec::cycle(6));
    ParamMap params{{"gamma_tr2", 4}, {"gamma", 2}, {"gamma_t", 4}, {"gamma_r2", 3}};
    BoundReport rep = bound_report(c6, &params);
    CHECK(rep.gamma_values.at("gamma") == 2);
    CHECK(entry(rep, "three_gamma").rhs == 6);
}
