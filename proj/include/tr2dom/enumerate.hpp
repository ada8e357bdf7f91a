#ifndef TR2DOM_ENUMERATE_HPP
#define TR2DOM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "tr2dom/graph.hpp"

namespace tr2dom {

/// Decodes a Prüfer sequence over {0..n-1} (length n-2) into a labeled tree.
Graph prufer_decode(int n, const std::vector<int>& seq);

/// n^{n-2} for n >= 3, 1 for n == 2.
std::uint64_t labeled_tree_count(int n);

/// All labeled trees on n vertices via Prüfer sequences; 2 <= n <= 10.
/// The range variant visits sequence indices [begin, end) of the odometer
/// order, for chunked parallel sweeps.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);
void for_each_labeled_tree_range(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const Graph&)>& visit);

/// Number of candidate edge subsets on n labeled vertices (2^C(n,2)).
std::uint64_t edge_subset_count(int n);

/// All connected labeled graphs on n vertices (edge subsets filtered by
/// connectivity); 2 <= n <= 7. Range variant over edge-mask values.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);
void for_each_connected_graph_range(int n, std::uint64_t begin, std::uint64_t end,
                                    const std::function<void(const Graph&)>& visit);

}  // namespace tr2dom

#endif
