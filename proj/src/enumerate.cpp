#include "tr2dom/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tr2dom {

Graph prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2) throw std::invalid_argument("prufer_decode requires n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer sequence must have length n-2");

    std::vector<int> degree(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw std::invalid_argument("prufer entry out of range");
        ++degree[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;  // reuse immediately, below the scan pointer
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, std::move(edges));
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 2) throw std::invalid_argument("labeled_tree_count requires n >= 2");
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

void for_each_labeled_tree_range(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const Graph&)>& visit) {
    if (n < 2 || n > 10) throw std::invalid_argument("tree enumeration supports 2 <= n <= 10");
    std::uint64_t total = labeled_tree_count(n);
    if (begin > end || end > total) throw std::invalid_argument("tree range out of bounds");

    std::vector<int> seq(n - 2, 0);
    std::uint64_t index = begin;
    for (int pos = n - 3; pos >= 0; --pos) {
        seq[pos] = static_cast<int>(index % n);
        index /= n;
    }
    for (std::uint64_t i = begin; i < end; ++i) {
        visit(prufer_decode(n, seq));
        // Odometer increment.
        for (int pos = n - 3; pos >= 0; --pos) {
            if (++seq[pos] < n) break;
            seq[pos] = 0;
        }
    }
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit) {
    for_each_labeled_tree_range(n, 0, labeled_tree_count(n), visit);
}

std::uint64_t edge_subset_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

namespace {

// Connectivity over an edge mask without building a Graph.
bool mask_connected(int n, const std::vector<std::uint64_t>& nbr) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= nbr[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

void for_each_connected_graph_range(int n, std::uint64_t begin, std::uint64_t end,
                                    const std::function<void(const Graph&)>& visit) {
    if (n < 2 || n > 7) throw std::invalid_argument("graph enumeration supports 2 <= n <= 7");
    std::uint64_t total = edge_subset_count(n);
    if (begin > end || end > total) throw std::invalid_argument("graph range out of bounds");

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    std::vector<std::uint64_t> nbr(n);
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        std::fill(nbr.begin(), nbr.end(), 0);
        edges.clear();
        std::uint64_t m = mask;
        while (m) {
            int bit = std::countr_zero(m);
            m &= m - 1;
            auto [u, v] = slots[bit];
            nbr[u] |= std::uint64_t{1} << v;
            nbr[v] |= std::uint64_t{1} << u;
            edges.push_back(slots[bit]);
        }
        if (!mask_connected(n, nbr)) continue;
        visit(Graph(n, edges));
    }
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
    for_each_connected_graph_range(n, 0, edge_subset_count(n), visit);
}

}  // namespace tr2dom
