#ifndef TR2DOM_REDUCTION_HPP
#define TR2DOM_REDUCTION_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tr2dom/graph.hpp"
#include "tr2dom/labeling.hpp"

namespace tr2dom {

/// Exact 3-Cover instance: ground set {0..3q-1} and 3-element subsets.
struct X3CInstance {
    int q = 0;
    std::vector<std::array<int, 3>> sets;

    int ground_size() const { return 3 * q; }
    int set_count() const { return static_cast<int>(sets.size()); }
};

/// Text format: first line "q t", then t lines of 3 integers.
X3CInstance parse_x3c(std::string_view text);
std::string format_x3c(const X3CInstance& inst);

enum class ReductionVariant { Bipartite, Chordal };

/// Named handles into the reduction graph.
struct ElementGadget {          // H_i, order 10
    int x, y, a, b;             // x_i - y_i path; stars centered at a_i, b_i
    std::array<int, 3> a_leaves;
    std::array<int, 3> b_leaves;
};

struct SetGadget {              // S_{3,3} per subset, order 8
    int u, v, c;                // supports u_j, v_j; c_j is a leaf of v_j
    std::array<int, 3> u_leaves;
    std::array<int, 2> v_leaves;  // v's leaves besides c
};

struct ReductionOutput {
    Graph graph{1, {}};
    int k = 0;  // 4t + 16q
    ReductionVariant variant = ReductionVariant::Bipartite;
    std::vector<ElementGadget> elements;
    std::vector<SetGadget> set_gadgets;
};

/// Builds the hardness gadget graph: one H_i per ground element, one
/// S_{3,3} per subset, edges c_j x_i for x_i in C_j; the chordal variant
/// additionally turns {c_j} into a clique.
ReductionOutput reduce(const X3CInstance& inst, ReductionVariant variant);

/// The proof's weight-k labeling for an exact cover (set indices).
/// Throws std::invalid_argument when the cover is not exact.
Labeling cover_to_labeling(const X3CInstance& inst, const std::vector<int>& cover,
                           const ReductionOutput& red);

/// Subset search for an exact cover; empty when none exists.
std::optional<std::vector<int>> x3c_brute_force(const X3CInstance& inst, int max_sets = 30);

/// Maximum-cardinality-search perfect-elimination-ordering test.
bool is_chordal(const Graph& g);

/// BFS 2-coloring; empty when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace tr2dom

#endif
