#ifndef TR2DOM_PROFILE_HPP
#define TR2DOM_PROFILE_HPP

#include <optional>
#include <vector>

#include "tr2dom/graph.hpp"

namespace tr2dom {

/// Structural metrics used by the bounds and characterization modules.
/// girth is empty for forests; diameter is empty for disconnected graphs.
struct StructuralProfile {
    int max_degree = 0;
    int min_degree = 0;
    std::optional<int> girth;
    std::optional<int> diameter;
    int leaf_count = 0;
    int support_count = 0;
    std::vector<int> weak_supports;    // adjacent to exactly one leaf
    std::vector<int> strong_supports;  // adjacent to two or more leaves
    bool connected = false;
    bool tree = false;
};

StructuralProfile profile(const Graph& g);

}  // namespace tr2dom

#endif
