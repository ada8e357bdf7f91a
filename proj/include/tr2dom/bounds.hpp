#ifndef TR2DOM_BOUNDS_HPP
#define TR2DOM_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tr2dom/graph.hpp"
#include "tr2dom/profile.hpp"

namespace tr2dom {

class NotApplicableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One inequality instance. The relation direction is fixed per bound name
/// (see bound_report); holds is the literal comparison and tight means
/// lhs == rhs while applicable. tree_support_upper is stored scaled by 4
/// so the comparison stays integral.
struct BoundEntry {
    std::string name;
    bool applicable = false;
    int lhs = 0;
    int rhs = 0;
    bool holds = true;
    bool tight = false;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    StructuralProfile graph_profile;
    std::map<std::string, int> gamma_values;
};

using ParamMap = std::map<std::string, int>;

/// Evaluates every known inequality on a connected graph of order
/// >= 2. Bounds and their relations:
///   total_lower:        gamma_t <= gamma_tR2
///   total_upper:        gamma_tR2 <= 2*gamma_t
///   three_gamma:        gamma_tR2 <= 3*gamma
///   italian_lower:      gamma_r2 <= gamma_tR2
///   girth_upper:        gamma_tR2 <= n+2-(Delta+delta)   [girth >= 6, delta >= 2]
///   degree_lower:       gamma_tR2 >= ceil(2n/(Delta+1))
///   tree_leaf_lower:    gamma_tR2 >= ceil(2(n-leaves+3)/3)  [trees]
///   tree_support_upper: 4*gamma_tR2 <= 3n+2s             [trees, n >= 4]
/// Parameters are taken from `precomputed` when given (keys gamma, gamma_t,
/// gamma_r2, gamma_tr2) and computed exactly otherwise.
BoundReport bound_report(const Graph& g, const ParamMap* precomputed = nullptr);

struct CorollaryResult {
    bool holds = true;
    std::string detail;
};

/// girth_upper equality case: every neighbor of every maximum-degree
/// vertex has degree delta. Requires girth_upper applicable and tight.
CorollaryResult check_girth_upper_corollary(const Graph& g, const ParamMap* precomputed = nullptr);

/// degree_lower equality case: gamma_tR2 == 2n/(Delta+1) exactly implies
/// V2 is empty in every optimal TR2DF. Requires the exact equality to hold.
bool check_degree_lower_equality(const Graph& g, const ParamMap* precomputed = nullptr,
                                 std::uint64_t state_cap = 20'000'000);

}  // namespace tr2dom

#endif
