#include "tr2dom/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace tr2dom {

X3CInstance parse_x3c(std::string_view text) {
    std::istringstream in{std::string(text)};
    X3CInstance inst;
    int t = 0;
    if (!(in >> inst.q >> t)) throw std::invalid_argument("x3c: expected header \"q t\"");
    if (inst.q < 1) throw std::invalid_argument("x3c: q must be >= 1");
    if (t < 0) throw std::invalid_argument("x3c: t must be >= 0");
    for (int j = 0; j < t; ++j) {
        std::array<int, 3> s{};
        if (!(in >> s[0] >> s[1] >> s[2]))
            throw std::invalid_argument("x3c: expected 3 integers for set " + std::to_string(j));
        inst.sets.push_back(s);
    }
    // Validate element ranges and distinctness.
    for (const auto& s : inst.sets) {
        for (int e : s)
            if (e < 0 || e >= inst.ground_size())
                throw std::invalid_argument("x3c: element out of range");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw std::invalid_argument("x3c: set elements must be distinct");
    }
    return inst;
}

std::string format_x3c(const X3CInstance& inst) {
    std::ostringstream out;
    out << inst.q << ' ' << inst.set_count() << '\n';
    for (const auto& s : inst.sets) out << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
    return out.str();
}

ReductionOutput reduce(const X3CInstance& inst, ReductionVariant variant) {
    const int m = inst.ground_size();  // 3q
    const int t = inst.set_count();

    ReductionOutput out;
    out.variant = variant;
    out.k = 4 * t + 16 * inst.q;

    std::vector<std::pair<int, int>> edges;
    // H_i blocks: x, y, a, b, three a-leaves, three b-leaves.
    for (int i = 0; i < m; ++i) {
        int base = 10 * i;
        ElementGadget h;
        h.x = base;
        h.y = base + 1;
        h.a = base + 2;
        h.b = base + 3;
        h.a_leaves = {base + 4, base + 5, base + 6};
        h.b_leaves = {base + 7, base + 8, base + 9};
        edges.emplace_back(h.x, h.y);
        edges.emplace_back(h.y, h.a);
        edges.emplace_back(h.y, h.b);
        for (int leaf : h.a_leaves) edges.emplace_back(h.a, leaf);
        for (int leaf : h.b_leaves) edges.emplace_back(h.b, leaf);
        out.elements.push_back(h);
    }
    // S_{3,3} blocks: u, v, c (a leaf of v), three u-leaves, two more v-leaves.
    for (int j = 0; j < t; ++j) {
        int base = 10 * m + 8 * j;
        SetGadget s;
        s.u = base;
        s.v = base + 1;
        s.c = base + 2;
        s.u_leaves = {base + 3, base + 4, base + 5};
        s.v_leaves = {base + 6, base + 7};
        edges.emplace_back(s.u, s.v);
        for (int leaf : s.u_leaves) edges.emplace_back(s.u, leaf);
        edges.emplace_back(s.v, s.c);
        for (int leaf : s.v_leaves) edges.emplace_back(s.v, leaf);
        out.set_gadgets.push_back(s);
    }
    // Cross edges c_j x_i for x_i in C_j.
    for (int j = 0; j < t; ++j)
        for (int e : inst.sets[j]) edges.emplace_back(out.set_gadgets[j].c, out.elements[e].x);
    // Chordal variant: clique on the c_j.
    if (variant == ReductionVariant::Chordal)
        for (int j = 0; j < t; ++j)
            for (int j2 = j + 1; j2 < t; ++j2)
                edges.emplace_back(out.set_gadgets[j].c, out.set_gadgets[j2].c);

    out.graph = Graph(10 * m + 8 * t, std::move(edges));
    return out;
}

Labeling cover_to_labeling(const X3CInstance& inst, const std::vector<int>& cover,
                           const ReductionOutput& red) {
    // The cover must hit every ground element exactly once.
    std::vector<int> hits(inst.ground_size(), 0);
    for (int j : cover) {
        if (j < 0 || j >= inst.set_count())
            throw std::invalid_argument("cover references a set out of range");
        for (int e : inst.sets[j]) ++hits[e];
    }
    for (int e = 0; e < inst.ground_size(); ++e)
        if (hits[e] != 1) throw std::invalid_argument("cover is not an exact cover");

    Labeling f = Labeling::zeros(red.graph.order());
    for (const auto& h : red.elements) {
        f[h.a] = 2;
        f[h.b] = 2;
        f[h.y] = 1;
    }
    for (const auto& s : red.set_gadgets) {
        f[s.u] = 2;
        f[s.v] = 2;
    }
    for (int j : cover) f[red.set_gadgets[j].c] = 1;
    return f;
}

std::optional<std::vector<int>> x3c_brute_force(const X3CInstance& inst, int max_sets) {
    const int t = inst.set_count();
    if (t > max_sets) throw std::invalid_argument("x3c instance exceeds the subset-search cap");

    std::vector<int> chosen;
    std::vector<int> hits(inst.ground_size(), 0);
    // Depth-first over set indices; an exact cover uses exactly q sets.
    auto dfs = [&](auto&& self, int j) -> bool {
        if (static_cast<int>(chosen.size()) == inst.q) {
            for (int h : hits)
                if (h != 1) return false;
            return true;
        }
        if (j == t) return false;
        // Take j if it stays disjoint.
        bool disjoint = true;
        for (int e : inst.sets[j])
            if (hits[e]) disjoint = false;
        if (disjoint) {
            for (int e : inst.sets[j]) ++hits[e];
            chosen.push_back(j);
            if (self(self, j + 1)) return true;
            chosen.pop_back();
            for (int e : inst.sets[j]) --hits[e];
        }
        return self(self, j + 1);
    };
    if (dfs(dfs, 0)) return chosen;
    return std::nullopt;
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    // Maximum cardinality search: repeatedly pick the vertex with the most
    // numbered neighbors; the reverse order is a perfect elimination
    // ordering iff the graph is chordal.
    std::vector<int> weight(n, 0), order(n, -1), position(n, -1);
    std::vector<bool> numbered(n, false);
    for (int step = n - 1; step >= 0; --step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = true;
        order[step] = pick;
        position[pick] = step;
        for (int w : g.neighbors(pick))
            if (!numbered[w]) ++weight[w];
    }
    // PEO test: the earlier neighbors of each vertex (in elimination order,
    // which is `order` itself) must form a clique around the closest one.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1;
        for (int w : g.neighbors(v))
            if (position[w] > i && (parent == -1 || position[w] < position[parent])) parent = w;
        if (parent == -1) continue;
        for (int w : g.neighbors(v)) {
            if (position[w] <= i || w == parent) continue;
            if (!g.adjacent(parent, w)) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace tr2dom
