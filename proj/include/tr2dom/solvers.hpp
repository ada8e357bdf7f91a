#ifndef TR2DOM_SOLVERS_HPP
#define TR2DOM_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tr2dom/graph.hpp"
#include "tr2dom/labeling.hpp"

namespace tr2dom {

enum class Method { BruteForce, BranchBound, TreeDP, ClosedForm };

const char* method_name(Method m);

struct SolverConfig {
    std::optional<long long> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    std::optional<Method> force_method;
};

struct SolveResult {
    int value = 0;
    Labeling witness;
    Method method = Method::BruteForce;
    long long nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
    bool optimal = true;  // false when a budget cut the search short
};

/// The parameter is undefined (graph has an isolated vertex).
class IsolatedVertexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EnumerationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// gamma_tR2: minimum weight of a total Roman {2}-dominating function.
/// Method dispatch: ClosedForm for recognized families, TreeDP for forests,
/// otherwise BranchBound (or the forced method). Disconnected graphs are
/// solved per component and summed.
SolveResult gamma_tr2_exact(const Graph& g, const SolverConfig& cfg = {});

/// gamma, gamma_t, gamma_{R2}, gamma_{x2}. Set parameters report the witness
/// as a 0/1 indicator labeling.
SolveResult gamma(const Graph& g, const SolverConfig& cfg = {});
SolveResult gamma_t(const Graph& g, const SolverConfig& cfg = {});
SolveResult gamma_r2(const Graph& g, const SolverConfig& cfg = {});
SolveResult gamma_x2(const Graph& g, const SolverConfig& cfg = {});

/// Exhaustive labeling search. The reported witness is the lexicographically
/// smallest optimal value array. With value_only the witness is any optimum
/// (cheaper; used by the verification sweeps).
SolveResult brute_force_tr2(const Graph& g, const SolverConfig& cfg = {}, bool value_only = false);

/// Exact search over labelings of a connected graph: vertices in descending
/// degree order, greedy total-dominating-set incumbent, residual lower bound
/// ceil(2*U/(Delta+1)) where U counts unassigned vertices with no assigned
/// positive neighbor.
SolveResult branch_and_bound(const Graph& g, const SolverConfig& cfg = {});

/// Yields every optimal TR2DF in lexicographic order of value arrays.
/// Throws EnumerationCapError when 3^n exceeds state_cap.
void enumerate_optimal_tr2df(const Graph& g, const std::function<void(const Labeling&)>& yield,
                             std::uint64_t state_cap = 20'000'000);
std::vector<Labeling> all_optimal_tr2df(const Graph& g, std::uint64_t state_cap = 20'000'000);

}  // namespace tr2dom

#endif
