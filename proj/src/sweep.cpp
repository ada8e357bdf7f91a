#include "tr2dom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "tr2dom/bounds.hpp"
#include "tr2dom/closed_forms.hpp"
#include "tr2dom/enumerate.hpp"
#include "tr2dom/graph_io.hpp"
#include "tr2dom/labeling.hpp"
#include "tr2dom/profile.hpp"
#include "tr2dom/reduction.hpp"
#include "tr2dom/solvers.hpp"
#include "tr2dom/tree_dp.hpp"

#include <fstream>

namespace tr2dom {

const char* check_name(Check c) {
    switch (c) {
        case Check::Bounds: return "bounds";
        case Check::Characterizations: return "characterizations";
        case Check::PrivateNeighbors: return "private_neighbors";
        case Check::EmptyV2: return "empty_v2";
        case Check::DoubleEquiv: return "double_equiv";
        case Check::SupportLabels: return "support_labels";
        case Check::Formulas: return "formulas";
        case Check::ReductionIff: return "reduction_iff";
        case Check::DpOracle: return "dp_oracle";
    }
    return "?";
}

std::optional<Check> check_from_name(std::string_view name) {
    for (Check c : {Check::Bounds, Check::Characterizations, Check::PrivateNeighbors, Check::EmptyV2,
                    Check::DoubleEquiv, Check::SupportLabels, Check::Formulas, Check::ReductionIff,
                    Check::DpOracle})
        if (name == check_name(c)) return c;
    return std::nullopt;
}

bool SweepReport::ok() const { return total_failures() == 0; }

long long SweepReport::total_failures() const {
    long long f = 0;
    for (const auto& [name, s] : stats) f += s.failed;
    return f;
}

namespace {

constexpr std::uint64_t kSweepEnumCap = 2'000'000;  // optima enumeration guard
constexpr int kTightListCap = 1000;

struct ItemContext {
    const Graph& g;
    std::string id;            // graph6
    std::string display;       // family label when present, else graph6
    const FamilySpec* family;  // may be null
    ParamMap params;

    ItemContext(const Graph& graph, std::string graph_id, std::string display_name,
                const FamilySpec* fam)
        : g(graph), id(std::move(graph_id)), display(std::move(display_name)), family(fam) {}

    int param(const char* key) {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        int value = 0;
        std::string k = key;
        if (k == "gamma_tr2")
            value = gamma_tr2_exact(g).value;
        else if (k == "gamma")
            value = gamma(g).value;
        else if (k == "gamma_t")
            value = gamma_t(g).value;
        else if (k == "gamma_r2")
            value = gamma_r2(g).value;
        else if (k == "gamma_x2")
            value = gamma_x2(g).value;
        params[key] = value;
        return value;
    }

    // Optima are shared between the structural checks.
    bool optima_ready = false;
    std::vector<Labeling> optima;
    const std::vector<Labeling>* all_optima() {
        if (!optima_ready) {
            optima = all_optimal_tr2df(g, kSweepEnumCap);
            optima_ready = true;
        }
        return &optima;
    }
};

void fail(SweepReport& rep, const SweepConfig& cfg, ItemContext& item, Check check,
          const std::string& detail) {
    auto& s = rep.stats[check_name(check)];
    ++s.failed;
    if (static_cast<int>(rep.counterexamples.size()) < cfg.max_counterexamples * 16 &&
        s.failed <= cfg.max_counterexamples) {
        std::string d = detail;
        if (item.family) d += " [" + item.display + "]";
        rep.counterexamples.push_back({item.id, check_name(check), d});
    }
}

void record_tight(SweepReport& rep, const std::string& bound, const std::string& id) {
    ++rep.tight_counts[bound];
    auto& list = rep.tight_instances[bound];
    if (static_cast<int>(list.size()) < kTightListCap) list.push_back(id);
}

// ---- individual checks ----------------------------------------------------

void check_bounds(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || !is_connected(g)) return;
    ++rep.stats[check_name(Check::Bounds)].checked;

    item.param("gamma_tr2");
    item.param("gamma");
    item.param("gamma_t");
    item.param("gamma_r2");
    BoundReport br = bound_report(g, &item.params);
    item.params = br.gamma_values;

    for (const auto& e : br.entries) {
        if (!e.applicable) continue;
        if (!e.holds) {
            fail(rep, cfg, item, Check::Bounds,
                 e.name + " violated: lhs=" + std::to_string(e.lhs) +
                     " rhs=" + std::to_string(e.rhs));
            return;
        }
        if (e.tight) record_tight(rep, e.name, item.display);
    }

    // The girth-order upper bound at equality forces every neighbor of a
    // maximum-degree vertex down to minimum degree.
    for (const auto& e : br.entries) {
        if (e.name == "girth_upper" && e.applicable && e.tight) {
            auto cor = check_girth_upper_corollary(g, &item.params);
            if (!cor.holds) {
                fail(rep, cfg, item, Check::Bounds,
                     "girth_upper corollary violated: " + cor.detail);
                return;
            }
            record_tight(rep, "girth_upper_corollary", item.display);
        }
    }

    // The degree lower bound met without ceiling slack forces V2 empty in
    // every optimum.
    int gtr2 = item.param("gamma_tr2");
    if (gtr2 * (g.max_degree() + 1) == 2 * g.order()) {
        try {
            if (!check_degree_lower_equality(g, &item.params, kSweepEnumCap)) {
                fail(rep, cfg, item, Check::Bounds,
                     "degree_lower equality case violated: an optimum has V2 nonempty");
                return;
            }
        } catch (const EnumerationCapError&) {
            // too large to enumerate; the inequality itself was checked above
        }
    }

    // Tree upper bound equality holds exactly for coronas of trees.
    if (br.graph_profile.tree && g.order() >= 4) {
        bool tight = false;
        for (const auto& e : br.entries)
            if (e.name == "tree_support_upper" && e.applicable) tight = e.tight;
        bool corona = corona_base_tree(g).has_value();
        if (tight != corona) {
            fail(rep, cfg, item, Check::Bounds,
                 std::string("tree upper bound equality mismatch: tight=") +
                     (tight ? "yes" : "no") + " corona=" + (corona ? "yes" : "no"));
            return;
        }
    }
}

void check_characterizations(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || !is_connected(g)) return;
    ++rep.stats[check_name(Check::Characterizations)].checked;

    const int n = g.order();
    int value = item.param("gamma_tr2");
    Classification cls = classify(g);

    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) fail(rep, cfg, item, Check::Characterizations, what);
        return cond;
    };

    switch (cls.kind) {
        case ValueKind::ValueTwo:
            if (!expect(value == 2, "classified value_two but gamma_tR2=" + std::to_string(value)))
                return;
            break;
        case ValueKind::ValueThree:
            if (!expect(value == 3, "classified value_three but gamma_tR2=" + std::to_string(value)))
                return;
            break;
        case ValueKind::ValueN:
            if (!expect(value == n, "classified value_n but gamma_tR2=" + std::to_string(value)))
                return;
            break;
        case ValueKind::Other:
            break;
    }
    if (cls.also_value_n && !expect(value == n, "also_value_n flag but gamma_tR2 != n")) return;

    if (value == 2 &&
        !expect(cls.kind == ValueKind::ValueTwo, "gamma_tR2=2 but not classified value_two"))
        return;
    if (value == 3 && n >= 5 &&
        !expect(cls.kind == ValueKind::ValueThree, "gamma_tR2=3, n>=5, not classified value_three"))
        return;
    if (value == n &&
        !expect(cls.kind == ValueKind::ValueN || cls.also_value_n,
                "gamma_tR2=n but not classified value_n"))
        return;
}

void check_private_neighbors(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || g.min_degree() == 0) return;
    ++rep.stats[check_name(Check::PrivateNeighbors)].checked;

    const auto* optima = item.all_optima();
    std::size_t min_v2 = SIZE_MAX;
    for (const auto& f : *optima) {
        std::size_t v2 = 0;
        for (int v = 0; v < f.size(); ++v)
            if (f[v] == 2) ++v2;
        min_v2 = std::min(min_v2, v2);
    }
    for (const auto& f : *optima) {
        Partition part = partition(g, f);
        if (part.v2.size() != min_v2) continue;
        // (i) every v in V2 has two private neighbors in V0 w.r.t. V2
        for (int v : part.v2) {
            auto epn = external_private_neighbors(g, part.v2, v);
            int in_v0 = 0;
            for (int w : epn)
                if (f[w] == 0) ++in_v0;
            if (in_v0 < 2) {
                fail(rep, cfg, item, Check::PrivateNeighbors,
                     "vertex " + std::to_string(v) + " in V2 of a |V2|-minimal optimum has " +
                         std::to_string(in_v0) + " private neighbors in V0");
                return;
            }
        }
        // (ii) 2|V2| <= |V02|
        if (2 * part.v2.size() > part.v02.size()) {
            fail(rep, cfg, item, Check::PrivateNeighbors,
                 "2|V2| > |V02| in a |V2|-minimal optimum (" + std::to_string(part.v2.size()) +
                     " vs " + std::to_string(part.v02.size()) + ")");
            return;
        }
    }
}

void check_empty_v2(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || g.min_degree() == 0 || g.max_degree() > 2) return;
    ++rep.stats[check_name(Check::EmptyV2)].checked;

    for (const auto& f : *item.all_optima()) {
        bool v2_empty = true;
        for (int v = 0; v < f.size(); ++v)
            if (f[v] == 2) v2_empty = false;
        if (v2_empty) return;
    }
    fail(rep, cfg, item, Check::EmptyV2, "Delta<=2 graph where every optimum uses a 2");
}

void check_double_equiv(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || g.min_degree() == 0) return;
    ++rep.stats[check_name(Check::DoubleEquiv)].checked;

    bool some_v2_empty = false;
    for (const auto& f : *item.all_optima()) {
        bool v2_empty = true;
        for (int v = 0; v < f.size(); ++v)
            if (f[v] == 2) v2_empty = false;
        if (v2_empty) {
            some_v2_empty = true;
            break;
        }
    }
    if (!some_v2_empty) return;
    int x2 = item.param("gamma_x2");
    int tr2 = item.param("gamma_tr2");
    if (x2 != tr2)
        fail(rep, cfg, item, Check::DoubleEquiv,
             "optimum with empty V2 but gamma_x2=" + std::to_string(x2) +
                 " != gamma_tR2=" + std::to_string(tr2));
}

void check_support_labels(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (g.order() < 2 || g.min_degree() == 0) return;
    StructuralProfile pro = profile(g);
    if (pro.support_count == 0) return;
    ++rep.stats[check_name(Check::SupportLabels)].checked;

    std::vector<int> supports = pro.weak_supports;
    supports.insert(supports.end(), pro.strong_supports.begin(), pro.strong_supports.end());
    const auto* optima = item.all_optima();
    for (const auto& f : *optima)
        for (int v : supports)
            if (f[v] == 0) {
                fail(rep, cfg, item, Check::SupportLabels,
                     "support vertex " + std::to_string(v) + " labeled 0 in an optimum");
                return;
            }
    for (int v : pro.strong_supports) {
        bool seen2 = false;
        for (const auto& f : *optima)
            if (f[v] == 2) {
                seen2 = true;
                break;
            }
        if (!seen2) {
            fail(rep, cfg, item, Check::SupportLabels,
                 "strong support " + std::to_string(v) + " never labeled 2 in any optimum");
            return;
        }
    }
}

void check_formulas(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    if (!item.family) return;
    int expected;
    try {
        expected = formula_value(*item.family);
    } catch (const NoKnownFormulaError&) {
        return;
    }
    const Graph& g = item.g;
    ++rep.stats[check_name(Check::Formulas)].checked;

    // Compare against a search independent of the closed forms.
    SolveResult r;
    if (is_forest(g)) {
        r = tree_gamma_tr2(g);
    } else if (g.order() <= 24) {
        SolverConfig c;
        c.force_method = Method::BranchBound;
        r = gamma_tr2_exact(g, c);
    } else {
        return;  // too large for an independent search
    }
    if (r.value != expected)
        fail(rep, cfg, item, Check::Formulas,
             "formula says " + std::to_string(expected) + " but search found " +
                 std::to_string(r.value));
}

void check_dp_oracle(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    const Graph& g = item.g;
    if (!is_forest(g) || g.order() < 2 || g.min_degree() == 0) return;
    ++rep.stats[check_name(Check::DpOracle)].checked;

    int brute = brute_force_tr2(g, {}, /*value_only=*/true).value;
    int dp = tree_gamma_tr2(g).value;
    if (brute != dp)
        fail(rep, cfg, item, Check::DpOracle,
             "tree DP=" + std::to_string(dp) + " brute force=" + std::to_string(brute));
}

void run_item_checks(SweepReport& rep, const SweepConfig& cfg, ItemContext& item) {
    for (Check c : cfg.checks) {
        try {
            switch (c) {
                case Check::Bounds: check_bounds(rep, cfg, item); break;
                case Check::Characterizations: check_characterizations(rep, cfg, item); break;
                case Check::PrivateNeighbors: check_private_neighbors(rep, cfg, item); break;
                case Check::EmptyV2: check_empty_v2(rep, cfg, item); break;
                case Check::DoubleEquiv: check_double_equiv(rep, cfg, item); break;
                case Check::SupportLabels: check_support_labels(rep, cfg, item); break;
                case Check::Formulas: check_formulas(rep, cfg, item); break;
                case Check::DpOracle: check_dp_oracle(rep, cfg, item); break;
                case Check::ReductionIff: break;  // corpus independent, handled once
            }
        } catch (const std::exception& e) {
            fail(rep, cfg, item, c, std::string("exception: ") + e.what());
        }
    }
}

// ---- reduction battery ----------------------------------------------------

void reduction_sub(SweepReport& rep, const SweepConfig& cfg, const X3CInstance& inst,
                   ReductionVariant variant, const std::string& name) {
    auto& s = rep.stats[check_name(Check::ReductionIff)];
    ++s.checked;

    Graph placeholder(1, {});
    ItemContext item(placeholder, name, name, nullptr);

    ReductionOutput red = reduce(inst, variant);
    const Graph& g = red.graph;
    item.id = name;

    if (g.order() != 30 * inst.q + 8 * inst.set_count()) {
        fail(rep, cfg, item, Check::ReductionIff, "wrong gadget order");
        return;
    }
    if (red.k != 4 * inst.set_count() + 16 * inst.q) {
        fail(rep, cfg, item, Check::ReductionIff, "wrong k");
        return;
    }
    if (variant == ReductionVariant::Bipartite && !bipartition(g)) {
        fail(rep, cfg, item, Check::ReductionIff, "bipartite variant is not 2-colorable");
        return;
    }
    if (variant == ReductionVariant::Chordal && !is_chordal(g)) {
        fail(rep, cfg, item, Check::ReductionIff, "chordal variant fails the MCS test");
        return;
    }

    auto cover = x3c_brute_force(inst);
    if (cover) {
        Labeling f = cover_to_labeling(inst, *cover, red);
        if (!check_tr2df(g, f).empty() || weight(f) != red.k) {
            fail(rep, cfg, item, Check::ReductionIff,
                 "cover labeling is not a TR2DF of weight k");
            return;
        }
    }

    if (is_forest(g)) {
        int value = tree_gamma_tr2(g).value;
        bool le_k = value <= red.k;
        if (le_k != cover.has_value()) {
            fail(rep, cfg, item, Check::ReductionIff,
                 "forest instance: gamma_tR2=" + std::to_string(value) + " vs k=" +
                     std::to_string(red.k) + ", cover " + (cover ? "exists" : "missing"));
            return;
        }
    } else if (g.order() <= 64) {
        SolverConfig c;
        c.force_method = Method::BranchBound;
        c.node_budget = 3'000'000;
        SolveResult r = gamma_tr2_exact(g, c);
        if (r.optimal) {
            bool le_k = r.value <= red.k;
            if (le_k != cover.has_value()) {
                fail(rep, cfg, item, Check::ReductionIff,
                     "instance: gamma_tR2=" + std::to_string(r.value) + " vs k=" +
                         std::to_string(red.k) + ", cover " + (cover ? "exists" : "missing"));
                return;
            }
        }
    }
}

void run_reduction_battery(SweepReport& rep, const SweepConfig& cfg) {
    std::vector<std::pair<std::string, X3CInstance>> instances;
    auto add = [&](int q, std::vector<std::array<int, 3>> sets) {
        X3CInstance inst;
        inst.q = q;
        inst.sets = std::move(sets);
        instances.emplace_back("x3c(q=" + std::to_string(q) +
                                   ",t=" + std::to_string(inst.set_count()) + ")#" +
                                   std::to_string(instances.size()),
                               inst);
    };
    add(1, {});
    add(1, {{0, 1, 2}});
    add(1, {{0, 1, 2}, {0, 1, 2}});
    add(2, {{0, 1, 2}, {3, 4, 5}});
    add(2, {{0, 1, 2}, {0, 1, 3}});
    add(2, {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}});
    add(2, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}});
    add(2, {{0, 3, 4}, {1, 2, 5}, {0, 1, 2}});

    // Seeded random instances with planted covers.
    std::mt19937 rng(20240601);
    for (int i = 0; i < 4; ++i) {
        int q = 2 + static_cast<int>(rng() % 2);
        std::vector<int> perm(3 * q);
        for (int j = 0; j < 3 * q; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::array<int, 3>> sets;
        for (int j = 0; j < q; ++j) sets.push_back({perm[3 * j], perm[3 * j + 1], perm[3 * j + 2]});
        int extras = static_cast<int>(rng() % 2);
        for (int j = 0; j < extras; ++j) {
            std::array<int, 3> s{};
            do {
                s = {static_cast<int>(rng() % (3 * q)), static_cast<int>(rng() % (3 * q)),
                     static_cast<int>(rng() % (3 * q))};
            } while (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]);
            sets.push_back(s);
        }
        add(q, std::move(sets));
    }

    for (const auto& [name, inst] : instances) {
        reduction_sub(rep, cfg, inst, ReductionVariant::Bipartite, name + ":bipartite");
        reduction_sub(rep, cfg, inst, ReductionVariant::Chordal, name + ":chordal");
    }
}

// ---- corpus drivers --------------------------------------------------------

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;
    std::atomic<bool> hit{false};

    bool expired() {
        if (hit.load(std::memory_order_relaxed)) return true;
        if (at && std::chrono::steady_clock::now() > *at) {
            hit.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

void merge_into(SweepReport& total, const SweepReport& part, const SweepConfig& cfg) {
    for (const auto& [name, s] : part.stats) {
        total.stats[name].checked += s.checked;
        total.stats[name].failed += s.failed;
    }
    for (const auto& ce : part.counterexamples)
        if (static_cast<int>(total.counterexamples.size()) < cfg.max_counterexamples * 16)
            total.counterexamples.push_back(ce);
    for (const auto& [bound, count] : part.tight_counts) total.tight_counts[bound] += count;
    for (const auto& [bound, list] : part.tight_instances) {
        auto& dst = total.tight_instances[bound];
        for (const auto& id : list) {
            if (static_cast<int>(dst.size()) >= kTightListCap) break;
            dst.push_back(id);
        }
    }
    total.graphs_processed += part.graphs_processed;
    total.budget_exhausted = total.budget_exhausted || part.budget_exhausted;
}

void process_graph(SweepReport& rep, const SweepConfig& cfg, const Graph& g,
                   const FamilySpec* family) {
    ItemContext item(g, encode_graph6(g), family ? family->label() : encode_graph6(g), family);
    run_item_checks(rep, cfg, item);
    ++rep.graphs_processed;
}

// Runs `chunks` tasks across `jobs` threads; task i writes parts[i].
void run_tasks(std::vector<std::function<void(SweepReport&)>>& tasks, int jobs,
               std::vector<SweepReport>& parts) {
    parts.resize(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i](parts[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i](parts[i]);
        }
    };
    std::vector<std::thread> threads;
    int count = std::min<int>(jobs, static_cast<int>(tasks.size()));
    threads.reserve(count);
    for (int i = 0; i < count; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport total;
    Deadline deadline;
    if (cfg.time_budget) deadline.at = t0 + *cfg.time_budget;

    // Register stats rows for all selected checks up front.
    for (Check c : cfg.checks) total.stats[check_name(c)];

    bool want_reduction = false;
    for (Check c : cfg.checks)
        if (c == Check::ReductionIff) want_reduction = true;

    std::vector<std::function<void(SweepReport&)>> tasks;

    if (const auto* trees = std::get_if<SweepConfig::TreesUpTo>(&cfg.corpus)) {
        if (trees->max_n < 2 || trees->max_n > 10)
            throw std::invalid_argument("tree corpus supports 2 <= n <= 10");
        for (int n = 2; n <= trees->max_n; ++n) {
            std::uint64_t count = labeled_tree_count(n);
            std::uint64_t chunks = std::min<std::uint64_t>(std::max(cfg.jobs * 4, 1), count);
            for (std::uint64_t c = 0; c < chunks; ++c) {
                std::uint64_t b = count * c / chunks, e = count * (c + 1) / chunks;
                tasks.push_back([&, n, b, e](SweepReport& part) {
                    if (deadline.expired()) {
                        part.budget_exhausted = true;
                        return;
                    }
                    for_each_labeled_tree_range(n, b, e, [&](const Graph& g) {
                        if (part.budget_exhausted) return;
                        if (deadline.expired()) {
                            part.budget_exhausted = true;
                            return;
                        }
                        process_graph(part, cfg, g, nullptr);
                    });
                });
            }
        }
    } else if (const auto* conn = std::get_if<SweepConfig::ConnectedUpTo>(&cfg.corpus)) {
        if (conn->max_n < 2 || conn->max_n > 7)
            throw std::invalid_argument("connected corpus supports 2 <= n <= 7");
        for (int n = 2; n <= conn->max_n; ++n) {
            std::uint64_t count = edge_subset_count(n);
            std::uint64_t chunks = std::min<std::uint64_t>(std::max(cfg.jobs * 4, 1), count);
            for (std::uint64_t c = 0; c < chunks; ++c) {
                std::uint64_t b = count * c / chunks, e = count * (c + 1) / chunks;
                tasks.push_back([&, n, b, e](SweepReport& part) {
                    if (deadline.expired()) {
                        part.budget_exhausted = true;
                        return;
                    }
                    for_each_connected_graph_range(n, b, e, [&](const Graph& g) {
                        if (part.budget_exhausted) return;
                        if (deadline.expired()) {
                            part.budget_exhausted = true;
                            return;
                        }
                        process_graph(part, cfg, g, nullptr);
                    });
                });
            }
        }
    } else if (const auto* file = std::get_if<SweepConfig::Graph6File>(&cfg.corpus)) {
        std::ifstream in(file->path);
        if (!in) throw std::runtime_error("cannot open " + file->path);
        auto graphs = std::make_shared<std::vector<Graph>>(read_graph6_stream(in));
        std::size_t chunks = std::min<std::size_t>(std::max(cfg.jobs * 4, 1), graphs->size());
        for (std::size_t c = 0; c < chunks; ++c) {
            std::size_t b = graphs->size() * c / chunks, e = graphs->size() * (c + 1) / chunks;
            tasks.push_back([&, graphs, b, e](SweepReport& part) {
                for (std::size_t i = b; i < e; ++i) {
                    if (deadline.expired()) {
                        part.budget_exhausted = true;
                        return;
                    }
                    process_graph(part, cfg, (*graphs)[i], nullptr);
                }
            });
        }
    } else if (const auto* fams = std::get_if<SweepConfig::Families>(&cfg.corpus)) {
        auto specs = std::make_shared<std::vector<FamilySpec>>(fams->specs);
        std::size_t chunks = std::min<std::size_t>(std::max(cfg.jobs, 1), specs->size());
        for (std::size_t c = 0; c < chunks; ++c) {
            std::size_t b = specs->size() * c / chunks, e = specs->size() * (c + 1) / chunks;
            tasks.push_back([&, specs, b, e](SweepReport& part) {
                for (std::size_t i = b; i < e; ++i) {
                    if (deadline.expired()) {
                        part.budget_exhausted = true;
                        return;
                    }
                    Graph g = generate((*specs)[i]);
                    process_graph(part, cfg, g, &(*specs)[i]);
                }
            });
        }
    }

    std::vector<SweepReport> parts;
    run_tasks(tasks, cfg.jobs, parts);
    for (const auto& part : parts) merge_into(total, part, cfg);

    if (want_reduction) run_reduction_battery(total, cfg);

    // Counterexamples sorted for determinism regardless of scheduling.
    std::sort(total.counterexamples.begin(), total.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.check, a.graph_id, a.detail) <
                         std::tie(b.check, b.graph_id, b.detail);
              });

    total.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    return total;
}

}  // namespace tr2dom
