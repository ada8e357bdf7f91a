#include "tr2dom/bounds.hpp"

#include "tr2dom/labeling.hpp"
#include "tr2dom/solvers.hpp"

namespace tr2dom {

namespace {

int get_or_compute(const Graph& g, ParamMap& params, const std::string& key) {
    if (auto it = params.find(key); it != params.end()) return it->second;
    int value = 0;
    if (key == "gamma")
        value = gamma(g).value;
    else if (key == "gamma_t")
        value = gamma_t(g).value;
    else if (key == "gamma_r2")
        value = gamma_r2(g).value;
    else if (key == "gamma_x2")
        value = gamma_x2(g).value;
    else if (key == "gamma_tr2")
        value = gamma_tr2_exact(g).value;
    else
        throw std::invalid_argument("unknown parameter " + key);
    params[key] = value;
    return value;
}

BoundEntry make_entry(const std::string& name, bool applicable, int lhs, int rhs, bool leq) {
    BoundEntry e;
    e.name = name;
    e.applicable = applicable;
    e.lhs = lhs;
    e.rhs = rhs;
    if (applicable) {
        e.holds = leq ? lhs <= rhs : lhs >= rhs;
        e.tight = lhs == rhs;
    }
    return e;
}

}  // namespace

BoundReport bound_report(const Graph& g, const ParamMap* precomputed) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("bound_report requires order >= 2");
    if (!is_connected(g)) throw DisconnectedError("bound_report requires a connected graph");

    BoundReport rep;
    rep.graph_profile = profile(g);
    ParamMap params = precomputed ? *precomputed : ParamMap{};

    const auto& pro = rep.graph_profile;
    int gtr2 = get_or_compute(g, params, "gamma_tr2");
    int gt = get_or_compute(g, params, "gamma_t");
    int gd = get_or_compute(g, params, "gamma");
    int gr2 = get_or_compute(g, params, "gamma_r2");

    rep.entries.push_back(make_entry("total_lower", true, gt, gtr2, true));
    rep.entries.push_back(make_entry("total_upper", true, gtr2, 2 * gt, true));
    rep.entries.push_back(make_entry("three_gamma", true, gtr2, 3 * gd, true));
    rep.entries.push_back(make_entry("italian_lower", true, gr2, gtr2, true));

    bool girth_upper_ok = pro.min_degree >= 2 && (!pro.girth || *pro.girth >= 6);
    rep.entries.push_back(make_entry("girth_upper", girth_upper_ok, gtr2,
                                     n + 2 - (pro.max_degree + pro.min_degree), true));

    int degree_lower_rhs = (2 * n + pro.max_degree) / (pro.max_degree + 1);  // ceil(2n/(Delta+1))
    rep.entries.push_back(make_entry("degree_lower", true, gtr2, degree_lower_rhs, false));

    bool tree = pro.tree;
    int tl_rhs = (2 * (n - pro.leaf_count + 3) + 2) / 3;  // ceil(2(n-l+3)/3)
    rep.entries.push_back(make_entry("tree_leaf_lower", tree && n >= 2, gtr2, tl_rhs, false));
    rep.entries.push_back(make_entry("tree_support_upper", tree && n >= 4, 4 * gtr2,
                                     3 * n + 2 * pro.support_count, true));

    rep.gamma_values = std::move(params);
    return rep;
}

CorollaryResult check_girth_upper_corollary(const Graph& g, const ParamMap* precomputed) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) throw NotApplicableError("girth_upper requires a connected nontrivial graph");
    auto pro = profile(g);
    if (pro.min_degree < 2 || (pro.girth && *pro.girth < 6))
        throw NotApplicableError("girth_upper hypotheses (girth >= 6, delta >= 2) not met");
    ParamMap params = precomputed ? *precomputed : ParamMap{};
    int gtr2 = get_or_compute(g, params, "gamma_tr2");
    if (gtr2 != n + 2 - (pro.max_degree + pro.min_degree))
        throw NotApplicableError("girth_upper is not tight on this graph");

    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != pro.max_degree) continue;
        for (int v : g.neighbors(u))
            if (g.degree(v) != pro.min_degree)
                return {false, "neighbor " + std::to_string(v) + " of maximum-degree vertex " +
                                   std::to_string(u) + " has degree " +
                                   std::to_string(g.degree(v))};
    }
    return {true, ""};
}

bool check_degree_lower_equality(const Graph& g, const ParamMap* precomputed, std::uint64_t state_cap) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) throw NotApplicableError("degree_lower requires a connected nontrivial graph");
    ParamMap params = precomputed ? *precomputed : ParamMap{};
    int gtr2 = get_or_compute(g, params, "gamma_tr2");
    // The equality case reads gamma_tR2 = 2n/(Delta+1) without a ceiling.
    if (gtr2 * (g.max_degree() + 1) != 2 * n)
        throw NotApplicableError("gamma_tR2 != 2n/(Delta+1) exactly");

    bool all_v2_empty = true;
    enumerate_optimal_tr2df(
        g,
        [&](const Labeling& f) {
            for (int v = 0; v < f.size(); ++v)
                if (f[v] == 2) all_v2_empty = false;
        },
        state_cap);
    return all_v2_empty;
}

}  // namespace tr2dom
