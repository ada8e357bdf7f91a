#ifndef TR2DOM_SWEEP_HPP
#define TR2DOM_SWEEP_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tr2dom/families.hpp"
#include "tr2dom/graph.hpp"

namespace tr2dom {

/// The closed registry of theorem checks.
enum class Check {
    Bounds,             // every inequality plus both equality-case conditions
    Characterizations,  // gamma_tR2 in {2,3,n} recognizers, both directions
    PrivateNeighbors,   // private-neighbor structure of |V2|-minimal optima
    EmptyV2,            // Delta <= 2 admits an optimum with V2 empty
    DoubleEquiv,        // an optimum with V2 empty forces gamma_tR2 == gamma_x2
    SupportLabels,      // supports positive in optima; strong supports can take 2
    Formulas,           // family closed forms vs exact values
    ReductionIff,       // X3C gadget battery (corpus independent)
    DpOracle,           // tree DP vs brute force on forests
};

const char* check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);

struct SweepConfig {
    struct TreesUpTo { int max_n; };
    struct ConnectedUpTo { int max_n; };
    struct Graph6File { std::string path; };
    struct Families { std::vector<FamilySpec> specs; };

    std::variant<TreesUpTo, ConnectedUpTo, Graph6File, Families> corpus;
    std::vector<Check> checks;
    int jobs = 1;
    std::optional<std::chrono::milliseconds> time_budget;
    int max_counterexamples = 100;  // kept per check; failures beyond are counted
};

struct Counterexample {
    std::string graph_id;  // graph6 (plus family label for family corpora)
    std::string check;
    std::string detail;
};

struct CheckStats {
    long long checked = 0;
    long long failed = 0;
};

struct SweepReport {
    std::map<std::string, CheckStats> stats;
    std::vector<Counterexample> counterexamples;
    /// Bound name -> ids of graphs where the bound held with equality.
    std::map<std::string, std::vector<std::string>> tight_instances;
    std::map<std::string, long long> tight_counts;
    long long graphs_processed = 0;
    double millis = 0;
    bool budget_exhausted = false;

    bool ok() const;
    long long total_failures() const;
};

SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace tr2dom

#endif
