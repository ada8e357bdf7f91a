#ifndef TR2DOM_LABELING_HPP
#define TR2DOM_LABELING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tr2dom/graph.hpp"

namespace tr2dom {

/// A function V -> {0,1,2}, indexed by vertex.
struct Labeling {
    std::vector<std::uint8_t> values;

    Labeling() = default;
    explicit Labeling(std::vector<std::uint8_t> v) : values(std::move(v)) {}
    static Labeling zeros(int n) { return Labeling(std::vector<std::uint8_t>(n, 0)); }
    static Labeling ones(int n) { return Labeling(std::vector<std::uint8_t>(n, 1)); }

    int size() const { return static_cast<int>(values.size()); }
    std::uint8_t operator[](int v) const { return values[v]; }
    std::uint8_t& operator[](int v) { return values[v]; }

    bool operator==(const Labeling&) const = default;
};

int weight(const Labeling& f);

struct Violation {
    enum class Kind { UncoveredZero, IsolatedPositive, UndominatedVertex, NotDoublyDominated };
    Kind kind;
    int vertex;
    std::string detail;
};

/// Roman {2}-domination check: every 0-vertex has a 2-neighbor or two
/// distinct 1-neighbors. Violations are collected exhaustively.
std::vector<Violation> check_r2f(const Graph& g, const Labeling& f);

/// Total Roman {2}-domination check: check_r2f plus no positive vertex is
/// isolated in the subgraph induced by the positive vertices.
std::vector<Violation> check_tr2df(const Graph& g, const Labeling& f);

/// Boolean fast paths for the two checks above.
bool is_r2f(const Graph& g, const Labeling& f);
bool is_tr2df(const Graph& g, const Labeling& f);

/// The partition (V0,V1,V2) induced by f, with V0 split into V02 (vertices
/// with a 2-neighbor) and V01 (the rest).
struct Partition {
    std::vector<int> v0, v1, v2;
    std::vector<int> v01, v02;
};

Partition partition(const Graph& g, const Labeling& f);

/// epn(u,S): vertices v outside S with N[v] ∩ S = {u}. Requires u in S.
std::vector<int> external_private_neighbors(const Graph& g, const std::vector<int>& s, int u);

bool is_dominating_set(const Graph& g, const std::vector<int>& s);
bool is_total_dominating_set(const Graph& g, const std::vector<int>& s);
bool is_double_dominating_set(const Graph& g, const std::vector<int>& s);

/// Text form: whitespace-separated digits, e.g. "1 1 0 1 1".
Labeling parse_labeling(std::string_view text);
std::string format_labeling(const Labeling& f);

}  // namespace tr2dom

#endif
