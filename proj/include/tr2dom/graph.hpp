#ifndef TR2DOM_GRAPH_HPP
#define TR2DOM_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tr2dom {

/// Raised by operations whose precondition is a connected graph.
class DisconnectedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph over vertices {0..n-1}.
///
/// Adjacency is stored in CSR form with sorted neighbor lists. For graphs
/// with at most 64 vertices a per-vertex neighbor bitmask is kept as well;
/// the exact solvers rely on it.
class Graph {
public:
    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(int u, int v) const;

    int min_degree() const;
    int max_degree() const;

    /// Edges normalized to u < v and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_masks() const { return !masks_.empty(); }
    /// Neighbor bitset of v; only available when order() <= 64.
    std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> offsets_;
    std::vector<int> adj_;
    std::vector<std::uint64_t> masks_;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

/// Induced subgraph on the given vertices (re-indexed 0..k-1 in the order
/// given). Vertices must be distinct and in range.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace tr2dom

#endif
