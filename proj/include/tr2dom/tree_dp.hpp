#ifndef TR2DOM_TREE_DP_HPP
#define TR2DOM_TREE_DP_HPP

#include <array>
#include <limits>
#include <stdexcept>

#include "tr2dom/graph.hpp"
#include "tr2dom/solvers.hpp"

namespace tr2dom {

/// DP states at a vertex v, written (label, status). For label 0 the status
/// is the coverage credit received from children (Zero, One, Sat); for
/// labels 1 and 2 it is whether some child is positive (Pending, Ok).
enum DpState : int {
    kZeroCreditZero = 0,
    kZeroCreditOne = 1,
    kZeroCreditSat = 2,
    kOnePending = 3,
    kOneOk = 4,
    kTwoPending = 5,
    kTwoOk = 6,
};

inline constexpr int kDpStateCount = 7;
inline constexpr int kDpInfeasible = std::numeric_limits<int>::max() / 4;

inline int dp_state_label(int s) { return s <= kZeroCreditSat ? 0 : (s <= kOneOk ? 1 : 2); }

using DpTableRow = std::array<int, kDpStateCount>;

class NotForestError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IsolatedComponentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Linear-time gamma_tR2 on a forest (every component must have >= 2
/// vertices). Components are rooted at their lowest-index vertex, children
/// are folded one at a time, and the witness is rebuilt from backpointers
/// and re-verified with check_tr2df before returning.
SolveResult tree_gamma_tr2(const Graph& forest, const SolverConfig& cfg = {});

/// The 7-entry table at v after its subtree has been processed.
DpTableRow dp_trace(const Graph& forest, int v);

namespace testhooks {
/// Corrupts one transition entry of the DP (an uncovered 0-child is treated
/// as attachable under a 1-parent). Only for fault-injection tests.
void set_dp_transition_fault(bool enabled);
}  // namespace testhooks

}  // namespace tr2dom

#endif
