#include "tr2dom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

#include "tr2dom/closed_forms.hpp"
#include "tr2dom/tree_dp.hpp"

namespace tr2dom {

const char* method_name(Method m) {
    switch (m) {
        case Method::BruteForce: return "BruteForce";
        case Method::BranchBound: return "BranchBound";
        case Method::TreeDP: return "TreeDP";
        case Method::ClosedForm: return "ClosedForm";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

void require_search_size(const Graph& g) {
    if (g.order() > 64)
        throw std::invalid_argument("exact search supports at most 64 vertices");
}

void require_no_isolated(const Graph& g) {
    if (g.order() == 1 || g.min_degree() == 0)
        throw IsolatedVertexError("parameter undefined: graph has an isolated vertex");
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

struct Budget {
    std::optional<long long> node_budget;
    std::optional<Clock::time_point> deadline;
    long long nodes = 0;
    bool hit = false;

    explicit Budget(const SolverConfig& cfg) : node_budget(cfg.node_budget) {
        if (cfg.time_budget) deadline = Clock::now() + *cfg.time_budget;
    }

    // Returns true when the search must stop.
    bool tick() {
        ++nodes;
        if (node_budget && nodes > *node_budget) hit = true;
        if (deadline && (nodes & 8191) == 0 && Clock::now() > *deadline) hit = true;
        return hit;
    }
};

// Depth-first base-3 counter over labelings in lexicographic order, with
// early abandonment on weight. Shared by the gamma_tR2 and gamma_{R2}
// searches; `total` toggles the no-isolated-positive clause.
struct LabelingSearch {
    const Graph& g;
    int n;
    bool total;
    bool value_only;
    Budget budget;

    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    int best_weight;
    bool have_witness = false;
    int weight_cap;  // all-ones is always feasible, so never exceed n

    LabelingSearch(const Graph& graph, bool total_cond, bool value_only_mode,
                   const SolverConfig& cfg)
        : g(graph),
          n(graph.order()),
          total(total_cond),
          value_only(value_only_mode),
          budget(cfg),
          cur(n, 0),
          weight_cap(n) {
        if (value_only) {
            best.assign(n, 1);
            best_weight = n;
            have_witness = true;
        } else {
            best_weight = n + 1;
        }
    }

    bool leaf_valid(std::uint64_t m1, std::uint64_t m2) const {
        std::uint64_t pos = m1 | m2;
        for (int v = 0; v < n; ++v) {
            std::uint64_t nb = g.neighbor_mask(v);
            if (cur[v] == 0) {
                if (nb & m2) continue;
                if (std::popcount(nb & m1) < 2) return false;
            } else if (total) {
                if (!(nb & pos)) return false;
            }
        }
        return true;
    }

    void dfs(int i, int w, std::uint64_t m1, std::uint64_t m2) {
        if (budget.tick()) return;
        if (i == n) {
            if (leaf_valid(m1, m2)) {
                best_weight = w;
                best.assign(cur.begin(), cur.end());
                have_witness = true;
            }
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        for (int val = 0; val <= 2; ++val) {
            int nw = w + val;
            if (nw > weight_cap || nw >= best_weight) break;
            cur[i] = static_cast<std::uint8_t>(val);
            dfs(i + 1, nw, val == 1 ? (m1 | bit) : m1, val == 2 ? (m2 | bit) : m2);
            if (budget.hit) return;
        }
        cur[i] = 0;
    }

    SolveResult run() {
        auto t0 = Clock::now();
        dfs(0, 0, 0, 0);
        if (!have_witness) {
            // Nothing below the cap was found before the budget hit.
            best.assign(n, 1);
            best_weight = n;
        }
        SolveResult r;
        r.value = best_weight;
        r.witness = Labeling(std::move(best));
        r.method = Method::BruteForce;
        r.nodes_explored = budget.nodes;
        r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
        r.optimal = !budget.hit;
        return r;
    }
};

// Greedy total dominating set: repeatedly take the vertex covering the most
// still-uncovered vertices. Assigning 2 to the set is a valid TR2DF.
std::vector<int> greedy_total_dominating_set(const Graph& g) {
    const int n = g.order();
    std::uint64_t uncovered = full_mask(n);
    std::vector<int> s;
    while (uncovered) {
        int pick = -1, gain = 0;
        for (int v = 0; v < n; ++v) {
            int c = std::popcount(g.neighbor_mask(v) & uncovered);
            if (c > gain) {
                gain = c;
                pick = v;
            }
        }
        assert(pick >= 0);
        s.push_back(pick);
        uncovered &= ~g.neighbor_mask(pick);
    }
    std::sort(s.begin(), s.end());
    return s;
}

struct BnbSearch {
    const Graph& g;
    int n;
    int dplus1;  // Delta + 1
    Budget budget;

    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    int best_weight;
    std::vector<int> order;  // descending degree, stable on index

    std::uint64_t m1 = 0, m2 = 0, assigned = 0, posnbr = 0;
    std::uint64_t all;

    BnbSearch(const Graph& graph, const SolverConfig& cfg)
        : g(graph),
          n(graph.order()),
          dplus1(graph.max_degree() + 1),
          budget(cfg),
          cur(n, 0),
          all(full_mask(n)) {
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });

        auto greedy = greedy_total_dominating_set(g);
        if (2 * static_cast<int>(greedy.size()) <= n) {
            best.assign(n, 0);
            for (int v : greedy) best[v] = 2;
            best_weight = 2 * static_cast<int>(greedy.size());
        } else {
            best.assign(n, 1);
            best_weight = n;
        }
    }

    // Definite-violation checks localized around the just-assigned vertex.
    bool locally_feasible(int v) const {
        if (vertex_dead(v)) return false;
        for (int w : g.neighbors(v))
            if ((assigned >> w) & 1)
                if (vertex_dead(w)) return false;
        return true;
    }

    bool vertex_dead(int w) const {
        std::uint64_t nb = g.neighbor_mask(w);
        if (nb & ~assigned) return false;  // neighborhood still open
        if (cur[w] == 0) return !(nb & m2) && std::popcount(nb & m1) < 2;
        return !(nb & (m1 | m2));
    }

    int residual_lower_bound() const {
        int u = std::popcount(all & ~assigned & ~posnbr);
        return (2 * u + dplus1 - 1) / dplus1;
    }

    void dfs(int depth, int w) {
        if (budget.tick()) return;
        if (depth == n) {
            // All constraints were closed as neighborhoods completed.
            best_weight = w;
            best.assign(cur.begin(), cur.end());
            return;
        }
        int v = order[depth];
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint64_t saved_posnbr = posnbr;
        assigned |= bit;
        for (int val = 0; val <= 2; ++val) {
            if (w + val >= best_weight) break;
            cur[v] = static_cast<std::uint8_t>(val);
            if (val == 1) m1 |= bit;
            if (val == 2) {
                m1 &= ~bit;
                m2 |= bit;
            }
            if (val >= 1) posnbr = saved_posnbr | g.neighbor_mask(v);
            if (locally_feasible(v) && w + val + residual_lower_bound() < best_weight)
                dfs(depth + 1, w + val);
            if (budget.hit) break;
        }
        m1 &= ~bit;
        m2 &= ~bit;
        posnbr = saved_posnbr;
        assigned &= ~bit;
        cur[v] = 0;
    }

    SolveResult run() {
        auto t0 = Clock::now();
        dfs(0, 0);
        SolveResult r;
        r.value = best_weight;
        r.witness = Labeling(std::move(best));
        r.method = Method::BranchBound;
        r.nodes_explored = budget.nodes;
        r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
        r.optimal = !budget.hit;
        return r;
    }
};

// ---- subset-parameter searches ------------------------------------------

enum class SetParam { Dominating, TotalDominating, DoubleDominating };

bool subset_feasible(const Graph& g, SetParam p, std::uint64_t s) {
    const int n = g.order();
    switch (p) {
        case SetParam::Dominating:
            for (int v = 0; v < n; ++v)
                if (!((s >> v) & 1) && !(g.neighbor_mask(v) & s)) return false;
            return true;
        case SetParam::TotalDominating:
            for (int v = 0; v < n; ++v)
                if (!(g.neighbor_mask(v) & s)) return false;
            return true;
        case SetParam::DoubleDominating:
            for (int v = 0; v < n; ++v) {
                int c = std::popcount(g.neighbor_mask(v) & s) + static_cast<int>((s >> v) & 1);
                if (c < 2) return false;
            }
            return true;
    }
    return false;
}

// Smallest feasible subset, scanning cardinalities upward and combinations
// in lexicographic index order.
SolveResult subset_search(const Graph& g, SetParam p, const SolverConfig& cfg) {
    require_search_size(g);
    const int n = g.order();
    Budget budget(cfg);
    auto t0 = Clock::now();
    int lo = p == SetParam::Dominating ? 1 : 2;
    for (int k = lo; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            budget.tick();
            std::uint64_t mask = 0;
            for (int v : comb) mask |= std::uint64_t{1} << v;
            if (subset_feasible(g, p, mask)) {
                SolveResult r;
                r.value = k;
                std::vector<std::uint8_t> ind(n, 0);
                for (int v : comb) ind[v] = 1;
                r.witness = Labeling(std::move(ind));
                r.method = Method::BruteForce;
                r.nodes_explored = budget.nodes;
                r.elapsed =
                    std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
                return r;
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("subset search found no feasible set");  // unreachable for delta>=1
}

// ---- closed-form family recognition --------------------------------------

// Recognizes a connected component against the families with proven
// formulas; fills value and a valid witness.
std::optional<SolveResult> closed_form_solve(const Graph& g) {
    const int n = g.order();
    SolveResult r;
    r.method = Method::ClosedForm;
    r.nodes_explored = 0;

    // Two adjacent universal vertices: gamma_tR2(K2 v H) = 2.
    if (n >= 2) {
        std::vector<int> universal;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == n - 1) universal.push_back(v);
        if (universal.size() >= 2) {
            std::vector<std::uint8_t> f(n, 0);
            f[universal[0]] = 1;
            f[universal[1]] = 1;
            r.value = 2;
            r.witness = Labeling(std::move(f));
            return r;
        }
    }

    const int m = g.size();
    const int delta = g.min_degree();
    const int Delta = g.max_degree();

    // Cycle: gamma_tR2(C_n) = ceil(2n/3); label 1 along the traced cycle at
    // positions i mod 3 != 2.
    if (n >= 3 && m == n && delta == 2 && Delta == 2) {
        std::vector<std::uint8_t> f(n, 0);
        int prev = -1, at = 0;
        for (int i = 0; i < n; ++i) {
            if (i % 3 != 2) f[at] = 1;
            auto nb = g.neighbors(at);
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = at;
            at = next;
        }
        r.value = (2 * n + 2) / 3;
        r.witness = Labeling(std::move(f));
        return r;
    }

    if (m != n - 1 || !is_connected(g)) return std::nullopt;  // remaining families are trees

    auto tree_witnessed = [&](int value) {
        SolveResult dp = tree_gamma_tr2(g);
        assert(dp.value == value);
        (void)value;
        r.value = dp.value;
        r.witness = std::move(dp.witness);
        return r;
    };

    // Path: ceil((2n+2)/3).
    if (Delta <= 2) return tree_witnessed((2 * n + 4) / 3);
    // Star: 3 for n >= 3.
    if (Delta == n - 1 && n >= 3) return tree_witnessed(3);
    // Double star: 4.
    {
        std::vector<int> internal;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 2) internal.push_back(v);
        if (internal.size() == 2 && g.adjacent(internal[0], internal[1]))
            return tree_witnessed(4);
    }
    // Corona of a tree: n.
    if (corona_base_tree(g).has_value()) return tree_witnessed(n);
    return std::nullopt;
}

SolveResult solve_component(const Graph& comp, const SolverConfig& cfg) {
    if (comp.order() < 2) throw IsolatedVertexError("component is a single vertex");
    if (cfg.force_method) {
        switch (*cfg.force_method) {
            case Method::BruteForce: {
                require_search_size(comp);
                LabelingSearch s(comp, /*total=*/true, /*value_only=*/false, cfg);
                return s.run();
            }
            case Method::BranchBound: {
                require_search_size(comp);
                return BnbSearch(comp, cfg).run();
            }
            case Method::TreeDP:
                return tree_gamma_tr2(comp, cfg);
            case Method::ClosedForm: {
                auto r = closed_form_solve(comp);
                if (!r) throw NoKnownFormulaError("no closed form matches this graph");
                return *r;
            }
        }
    }
    if (auto r = closed_form_solve(comp)) return *r;
    if (comp.size() == comp.order() - 1) return tree_gamma_tr2(comp, cfg);
    require_search_size(comp);
    return BnbSearch(comp, cfg).run();
}

int method_rank(Method m) {
    switch (m) {
        case Method::ClosedForm: return 0;
        case Method::TreeDP: return 1;
        case Method::BruteForce: return 2;
        case Method::BranchBound: return 3;
    }
    return 0;
}

// Per-component solve + sum, stitching witnesses back together.
SolveResult solve_by_components(const Graph& g, const SolverConfig& cfg,
                                SolveResult (*component_solver)(const Graph&,
                                                                 const SolverConfig&)) {
    auto t0 = Clock::now();
    auto comps = connected_components(g);
    SolveResult total;
    total.witness = Labeling::zeros(g.order());
    total.method = Method::ClosedForm;
    bool first = true;
    for (const auto& vs : comps) {
        Graph sub = induced_subgraph(g, vs);
        SolveResult r = component_solver(sub, cfg);
        total.value += r.value;
        total.nodes_explored += r.nodes_explored;
        total.optimal = total.optimal && r.optimal;
        for (std::size_t i = 0; i < vs.size(); ++i) total.witness[vs[i]] = r.witness[i];
        if (first || method_rank(r.method) > method_rank(total.method)) total.method = r.method;
        first = false;
    }
    total.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
    return total;
}

}  // namespace

SolveResult gamma_tr2_exact(const Graph& g, const SolverConfig& cfg) {
    require_no_isolated(g);
    return solve_by_components(g, cfg, &solve_component);
}

SolveResult brute_force_tr2(const Graph& g, const SolverConfig& cfg, bool value_only) {
    require_no_isolated(g);
    require_search_size(g);
    LabelingSearch s(g, /*total=*/true, value_only, cfg);
    return s.run();
}

SolveResult branch_and_bound(const Graph& g, const SolverConfig& cfg) {
    require_no_isolated(g);
    require_search_size(g);
    if (!is_connected(g)) throw std::invalid_argument("branch_and_bound expects a connected graph");
    return BnbSearch(g, cfg).run();
}

SolveResult gamma(const Graph& g, const SolverConfig& cfg) {
    return solve_by_components(g, cfg, +[](const Graph& comp, const SolverConfig& c) {
        if (comp.order() == 1) {
            SolveResult r;
            r.value = 1;
            r.witness = Labeling::ones(1);
            r.method = Method::BruteForce;
            return r;
        }
        return subset_search(comp, SetParam::Dominating, c);
    });
}

SolveResult gamma_t(const Graph& g, const SolverConfig& cfg) {
    require_no_isolated(g);
    return solve_by_components(g, cfg, +[](const Graph& comp, const SolverConfig& c) {
        return subset_search(comp, SetParam::TotalDominating, c);
    });
}

SolveResult gamma_x2(const Graph& g, const SolverConfig& cfg) {
    require_no_isolated(g);
    return solve_by_components(g, cfg, +[](const Graph& comp, const SolverConfig& c) {
        return subset_search(comp, SetParam::DoubleDominating, c);
    });
}

SolveResult gamma_r2(const Graph& g, const SolverConfig& cfg) {
    return solve_by_components(g, cfg, +[](const Graph& comp, const SolverConfig& c) {
        require_search_size(comp);
        LabelingSearch s(comp, /*total=*/false, /*value_only=*/false, c);
        return s.run();
    });
}

void enumerate_optimal_tr2df(const Graph& g, const std::function<void(const Labeling&)>& yield,
                             std::uint64_t state_cap) {
    require_no_isolated(g);
    require_search_size(g);
    const int n = g.order();
    double states = std::pow(3.0, n);
    if (states > static_cast<double>(state_cap))
        throw EnumerationCapError("3^n exceeds the enumeration cap");

    const int target = gamma_tr2_exact(g).value;
    std::vector<std::uint8_t> cur(n, 0);

    auto leaf_valid = [&](std::uint64_t m1, std::uint64_t m2) {
        std::uint64_t pos = m1 | m2;
        for (int v = 0; v < n; ++v) {
            std::uint64_t nb = g.neighbor_mask(v);
            if (cur[v] == 0) {
                if (nb & m2) continue;
                if (std::popcount(nb & m1) < 2) return false;
            } else if (!(nb & pos)) {
                return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, int i, int w, std::uint64_t m1, std::uint64_t m2) -> void {
        if (i == n) {
            if (w == target && leaf_valid(m1, m2)) yield(Labeling(cur));
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        for (int val = 0; val <= 2; ++val) {
            if (w + val > target) break;
            cur[i] = static_cast<std::uint8_t>(val);
            self(self, i + 1, w + val, val == 1 ? (m1 | bit) : m1, val == 2 ? (m2 | bit) : m2);
        }
        cur[i] = 0;
    };
    dfs(dfs, 0, 0, 0, 0);
}

std::vector<Labeling> all_optimal_tr2df(const Graph& g, std::uint64_t state_cap) {
    std::vector<Labeling> out;
    enumerate_optimal_tr2df(g, [&](const Labeling& f) { out.push_back(f); }, state_cap);
    return out;
}

}  // namespace tr2dom
