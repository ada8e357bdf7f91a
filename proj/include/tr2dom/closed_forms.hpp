#ifndef TR2DOM_CLOSED_FORMS_HPP
#define TR2DOM_CLOSED_FORMS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tr2dom/families.hpp"
#include "tr2dom/graph.hpp"

namespace tr2dom {

class NoKnownFormulaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotTreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Proven gamma_tR2 values: path(n>=2), cycle(n>=3), star(n>=3),
/// doublestar(p,q), corona(tree), join with a K2 side. Everything else
/// throws NoKnownFormulaError.
int formula_value(const FamilySpec& spec);

enum class ValueKind { ValueTwo, ValueThree, ValueN, Other };

const char* value_kind_name(ValueKind k);

struct Classification {
    ValueKind kind = ValueKind::Other;
    /// K2 matches both the value-2 shape and value-n; reported as ValueTwo
    /// with this flag set.
    bool also_value_n = false;
    /// Evidence, depending on kind.
    std::optional<std::pair<int, int>> universal_pair;  // ValueTwo
    std::optional<int> universal_vertex;                // ValueThree, first shape
    std::optional<std::array<int, 3>> triple;           // ValueThree, second shape
    bool by_solver = false;                             // n <= 4 fallback
};

/// Recognizes gamma_tR2 in {2, 3, n} for a connected graph of order >= 2.
/// Orders 2..4 fall back to the exact solver for the value-3 case.
Classification classify(const Graph& g);

/// If T is the corona of a tree, returns the base tree (vertices re-indexed
/// in increasing original order); otherwise empty. Throws NotTreeError when
/// T is not a tree.
std::optional<Graph> corona_base_tree(const Graph& t);

struct PendantPathTree {
    Graph tree;
    double strict_upper;  // 2(k+3)/3; gamma_tR2 is strictly below it
};

/// The path v1..vk with a pendant vertex attached at v_{k-1}; requires k >= 4.
PendantPathTree pendant_path_tree(int k);

}  // namespace tr2dom

#endif
