#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "tr2dom/enumerate.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/graph_io.hpp"
#include "tr2dom/sweep.hpp"
#include "tr2dom/tree_dp.hpp"

using namespace tr2dom;

TEST_CASE("enumerate: labeled trees via Prufer sequences") {
    int count2 = 0;
    for_each_labeled_tree(2, [&](const Graph& g) {
        ++count2;
        CHECK(g.order() == 2);
        CHECK(g.size() == 1);
    });
    CHECK(count2 == 1);

    int count3 = 0;
    for_each_labeled_tree(3, [&](const Graph& g) {
        ++count3;
        CHECK(is_tree(g));
    });
    CHECK(count3 == 3);

    // n = 4 and 5: the Cayley counts, all distinct labeled trees.
    for (int n : {4, 5}) {
        std::set<std::vector<std::pair<int, int>>> seen;
        for_each_labeled_tree(n, [&](const Graph& g) {
            CHECK(is_tree(g));
            seen.insert(g.edges());
        });
        CHECK(seen.size() == labeled_tree_count(n));
    }

    CHECK(labeled_tree_count(9) == 4782969);
    CHECK_THROWS_AS(for_each_labeled_tree(1, [](const Graph&) {}), std::invalid_argument);
    CHECK_THROWS_AS(for_each_labeled_tree(11, [](const Graph&) {}), std::invalid_argument);
}

namespace {

// Independent oracle for the number of connected labeled graphs: the
// classical recurrence c(n) = 2^C(n,2) - sum_k C(n-1,k-1) c(k) 2^C(n-k,2).
long long connected_count_recurrence(int n) {
    std::vector<long long> c(n + 1, 0);
    auto g = [](int k) { return 1LL << (k * (k - 1) / 2); };
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    c[1] = 1;
    for (int m = 2; m <= n; ++m) {
        c[m] = g(m);
        for (int k = 1; k < m; ++k) c[m] -= binom(m - 1, k - 1) * c[k] * g(m - k);
    }
    return c[n];
}

}  // namespace

TEST_CASE("enumerate: connected labeled graphs") {
    for (int n = 2; n <= 6; ++n) {
        long long count = 0;
        for_each_connected_graph(n, [&](const Graph&) { ++count; });
        CHECK(count == connected_count_recurrence(n));
    }
    long long n4 = 0;
    for_each_connected_graph(4, [&](const Graph&) { ++n4; });
    CHECK(n4 == 38);
}

TEST_CASE("sweep: dp oracle on trees is clean") {
    SweepConfig cfg;
    cfg.corpus = SweepConfig::TreesUpTo{6};
    cfg.checks = {Check::DpOracle};
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.stats.at("dp_oracle").checked == 1 + 3 + 16 + 125 + 1296);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("sweep: theorem checks on small connected graphs are clean") {
    SweepConfig cfg;
    cfg.corpus = SweepConfig::ConnectedUpTo{5};
    cfg.checks = {Check::Bounds, Check::Characterizations, Check::PrivateNeighbors, Check::EmptyV2,
                  Check::DoubleEquiv, Check::SupportLabels};
    cfg.jobs = 2;
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.graphs_processed == 1 + 4 + 38 + 728);
    CHECK(rep.stats.at("bounds").checked == rep.graphs_processed);
}

TEST_CASE("sweep: families formulas and tight instances") {
    SweepConfig cfg;
    std::vector<FamilySpec> specs;
    for (int n = 2; n <= 14; ++n) specs.push_back(FamilySpec::path(n));
    for (int n = 3; n <= 14; ++n) specs.push_back(FamilySpec::cycle(n));
    specs.push_back(FamilySpec::double_star(3, 3));
    cfg.corpus = SweepConfig::Families{specs};
    cfg.checks = {Check::Formulas, Check::Bounds};
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.stats.at("formulas").checked == 13 + 12 + 1);

    auto& girth_upper_tight = rep.tight_instances["girth_upper"];
    CHECK(std::find(girth_upper_tight.begin(), girth_upper_tight.end(), "cycle(6)") != girth_upper_tight.end());
    CHECK(std::find(girth_upper_tight.begin(), girth_upper_tight.end(), "cycle(7)") != girth_upper_tight.end());
    auto& obs_upper_tight = rep.tight_instances["total_upper"];
    CHECK(std::find(obs_upper_tight.begin(), obs_upper_tight.end(), "doublestar(3,3)") !=
          obs_upper_tight.end());
}

TEST_CASE("sweep: reduction battery") {
    SweepConfig cfg;
    cfg.corpus = SweepConfig::Families{{}};
    cfg.checks = {Check::ReductionIff};
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.stats.at("reduction_iff").checked >= 16);
}

TEST_CASE("sweep: seeded DP fault is detected and replayable") {
    SweepConfig cfg;
    cfg.corpus = SweepConfig::TreesUpTo{6};
    cfg.checks = {Check::DpOracle};

    testhooks::set_dp_transition_fault(true);
    SweepReport broken = run_sweep(cfg);
    testhooks::set_dp_transition_fault(false);
    CHECK(!broken.ok());
    CHECK(broken.stats.at("dp_oracle").failed >= 1);
    REQUIRE(!broken.counterexamples.empty());

    // Determinism: the same faulty sweep yields the same counterexamples.
    testhooks::set_dp_transition_fault(true);
    SweepReport again = run_sweep(cfg);
    testhooks::set_dp_transition_fault(false);
    REQUIRE(again.counterexamples.size() == broken.counterexamples.size());
    for (std::size_t i = 0; i < again.counterexamples.size(); ++i) {
        CHECK(again.counterexamples[i].graph_id == broken.counterexamples[i].graph_id);
        CHECK(again.counterexamples[i].detail == broken.counterexamples[i].detail);
    }

    // Replayability: the recorded graph6 string reproduces the failure.
    std::string path = "replay_test.g6";
    {
        std::ofstream out(path);
        out << broken.counterexamples.front().graph_id << '\n';
    }
    SweepConfig replay;
    replay.corpus = SweepConfig::Graph6File{path};
    replay.checks = {Check::DpOracle};
    testhooks::set_dp_transition_fault(true);
    SweepReport rep = run_sweep(replay);
    testhooks::set_dp_transition_fault(false);
    CHECK(!rep.ok());

    // Without the fault the same graph passes.
    SweepReport clean = run_sweep(replay);
    CHECK(clean.ok());
    std::remove(path.c_str());
}

TEST_CASE("sweep: time budget flags exhaustion") {
    SweepConfig cfg;
    cfg.corpus = SweepConfig::TreesUpTo{8};
    cfg.checks = {Check::DpOracle};
    cfg.time_budget = std::chrono::milliseconds(1);
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.budget_exhausted);
}
