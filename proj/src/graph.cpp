#include "tr2dom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tr2dom {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph order must be >= 1");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    offsets_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(2 * edges_.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);

    if (n_ <= 64) {
        masks_.assign(n_, 0);
        for (const auto& [u, v] : edges_) {
            masks_[u] |= std::uint64_t{1} << v;
            masks_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    if (!masks_.empty()) return (masks_[u] >> v) & 1;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_forest(const Graph& g) {
    return g.size() == g.order() - static_cast<int>(connected_components(g).size());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order() || index[v] != -1)
            throw std::invalid_argument("induced_subgraph: bad vertex list");
        index[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace tr2dom
