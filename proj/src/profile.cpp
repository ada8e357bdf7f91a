#include "tr2dom/profile.hpp"

#include <algorithm>
#include <queue>

namespace tr2dom {

namespace {

// Shortest cycle through any vertex, or nullopt for forests. Per-start BFS:
// every non-tree edge (x,y) with both distances final closes a walk of
// length dist[x]+dist[y]+1 containing a cycle no longer than that, and for
// a start on a shortest cycle the bound is attained.
std::optional<int> girth_of(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[s] = 0;
        parent[s] = -1;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : g.neighbors(x)) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    int cand = dist[x] + dist[y] + 1;
                    if (best == -1 || cand < best) best = cand;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<int> diameter_of(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : g.neighbors(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] == -1) return std::nullopt;  // disconnected
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

}  // namespace

StructuralProfile profile(const Graph& g) {
    const int n = g.order();
    StructuralProfile p;
    p.max_degree = g.max_degree();
    p.min_degree = g.min_degree();
    p.girth = girth_of(g);
    p.diameter = diameter_of(g);
    p.connected = p.diameter.has_value();
    p.tree = p.connected && g.size() == n - 1;

    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) ++p.leaf_count;
    for (int v = 0; v < n; ++v) {
        int leaf_neighbors = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1) ++leaf_neighbors;
        if (leaf_neighbors == 1) p.weak_supports.push_back(v);
        if (leaf_neighbors >= 2) p.strong_supports.push_back(v);
    }
    p.support_count =
        static_cast<int>(p.weak_supports.size() + p.strong_supports.size());
    return p;
}

}  // namespace tr2dom
