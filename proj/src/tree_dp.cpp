#include "tr2dom/tree_dp.hpp"

#include <algorithm>

#include "tr2dom/labeling.hpp"

namespace tr2dom {

namespace {

bool g_dp_transition_fault = false;

// Child state `cs` may sit under a parent labeled `pl` iff the child's
// residual obligation is discharged: a 0-child needs saturated coverage or
// the parent's label to complete it; a positive child needs a positive
// neighbor among its own children or a positive parent.
bool attachable(int cs, int pl) {
    if (cs <= kZeroCreditSat) {
        if (g_dp_transition_fault && cs == kZeroCreditZero && pl == 1) return true;
        return cs == kZeroCreditSat || pl == 2 || (pl == 1 && cs >= kZeroCreditOne);
    }
    return cs == kOneOk || cs == kTwoOk || pl >= 1;
}

// Parent state update when a child with label `cl` is attached. For a
// 0-parent the coverage credit saturates at Sat; for a positive parent the
// total-flag turns Ok once any positive child appears.
int folded_state(int ps, int cl) {
    if (ps <= kZeroCreditSat) return std::min(ps + (cl == 2 ? 2 : cl), int{kZeroCreditSat});
    bool ok = ps == kOneOk || ps == kTwoOk || cl >= 1;
    return ps <= kOneOk ? (ok ? kOneOk : kOnePending) : (ok ? kTwoOk : kTwoPending);
}

constexpr DpTableRow leaf_row() {
    DpTableRow r{};
    r.fill(kDpInfeasible);
    r[kZeroCreditZero] = 0;
    r[kOnePending] = 1;
    r[kTwoPending] = 2;
    return r;
}

struct FoldChoice {
    std::array<std::pair<std::int8_t, std::int8_t>, kDpStateCount> from;  // (prev, child)
};

struct ComponentDp {
    const Graph& g;
    std::vector<int> bfs_order;            // root first
    std::vector<int> parent;               // by vertex
    std::vector<std::vector<int>> children;
    std::vector<DpTableRow> table;         // by vertex
    std::vector<std::vector<FoldChoice>> choices;  // by vertex, one per child

    explicit ComponentDp(const Graph& graph) : g(graph) {
        parent.assign(g.order(), -1);
        children.assign(g.order(), {});
        table.assign(g.order(), leaf_row());
        choices.assign(g.order(), {});
    }

    void run(const std::vector<int>& comp) {
        int root = comp[0];  // components are sorted: lowest index
        bfs_order.clear();
        bfs_order.push_back(root);
        parent[root] = root;
        for (std::size_t head = 0; head < bfs_order.size(); ++head) {
            int v = bfs_order[head];
            for (int w : g.neighbors(v)) {
                if (parent[w] != -1) continue;
                parent[w] = v;
                children[v].push_back(w);
                bfs_order.push_back(w);
            }
        }
        parent[root] = -1;

        for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) process(*it);
    }

    void process(int v) {
        table[v] = leaf_row();
        choices[v].clear();
        choices[v].reserve(children[v].size());
        for (int c : children[v]) fold(v, c);
    }

    void fold(int v, int c) {
        DpTableRow next;
        next.fill(kDpInfeasible);
        FoldChoice pick{};
        for (auto& p : pick.from) p = {-1, -1};
        const DpTableRow& cur = table[v];
        const DpTableRow& child = table[c];
        for (int ps = 0; ps < kDpStateCount; ++ps) {
            if (cur[ps] >= kDpInfeasible) continue;
            int pl = dp_state_label(ps);
            for (int cs = 0; cs < kDpStateCount; ++cs) {
                if (child[cs] >= kDpInfeasible) continue;
                if (!attachable(cs, pl)) continue;
                int ns = folded_state(ps, dp_state_label(cs));
                int w = cur[ps] + child[cs];
                if (w < next[ns]) {
                    next[ns] = w;
                    pick.from[ns] = {static_cast<std::int8_t>(ps), static_cast<std::int8_t>(cs)};
                }
            }
        }
        table[v] = next;
        choices[v].push_back(pick);
    }

    int best_root_state(int root, int* value) const {
        int best = -1;
        int w = kDpInfeasible;
        for (int s : {kZeroCreditSat, kOneOk, kTwoOk}) {
            if (table[root][s] < w) {
                w = table[root][s];
                best = s;
            }
        }
        *value = w;
        return best;
    }

    void reconstruct(int root, int root_state, Labeling* f) const {
        // Walk the fold records backwards: the last child attached is
        // resolved first.
        std::vector<std::pair<int, int>> stack{{root, root_state}};
        while (!stack.empty()) {
            auto [v, s] = stack.back();
            stack.pop_back();
            (*f)[v] = static_cast<std::uint8_t>(dp_state_label(s));
            for (int i = static_cast<int>(children[v].size()) - 1; i >= 0; --i) {
                auto [prev, cs] = choices[v][i].from[s];
                if (prev < 0) throw std::logic_error("tree DP backpointer chain broken");
                stack.push_back({children[v][i], cs});
                s = prev;
            }
        }
    }
};

void require_forest(const Graph& g, const std::vector<std::vector<int>>& comps) {
    if (g.size() != g.order() - static_cast<int>(comps.size()))
        throw NotForestError("graph is not a forest");
    for (const auto& c : comps)
        if (c.size() < 2)
            throw IsolatedComponentError("forest has a single-vertex component");
}

}  // namespace

namespace testhooks {
void set_dp_transition_fault(bool enabled) { g_dp_transition_fault = enabled; }
}  // namespace testhooks

SolveResult tree_gamma_tr2(const Graph& forest, const SolverConfig&) {
    auto t0 = std::chrono::steady_clock::now();
    auto comps = connected_components(forest);
    require_forest(forest, comps);

    ComponentDp dp(forest);

    SolveResult r;
    r.method = Method::TreeDP;
    r.witness = Labeling::zeros(forest.order());
    for (const auto& comp : comps) {
        dp.run(comp);
        int value = 0;
        int state = dp.best_root_state(comp[0], &value);
        if (state < 0 || value >= kDpInfeasible)
            throw std::logic_error("tree DP found no feasible root state");
        dp.reconstruct(comp[0], state, &r.witness);
        r.value += value;
        r.nodes_explored += static_cast<long long>(comp.size());
    }
    if (!check_tr2df(forest, r.witness).empty() || weight(r.witness) != r.value)
        throw std::logic_error("tree DP witness failed verification");
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return r;
}

DpTableRow dp_trace(const Graph& forest, int v) {
    auto comps = connected_components(forest);
    require_forest(forest, comps);
    if (v < 0 || v >= forest.order()) throw std::invalid_argument("dp_trace: vertex out of range");

    ComponentDp dp(forest);
    for (const auto& comp : comps) {
        if (std::find(comp.begin(), comp.end(), v) == comp.end()) continue;
        dp.run(comp);
        return dp.table[v];
    }
    throw std::logic_error("dp_trace: vertex not found in any component");
}

}  // namespace tr2dom
