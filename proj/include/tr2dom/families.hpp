#ifndef TR2DOM_FAMILIES_HPP
#define TR2DOM_FAMILIES_HPP

#include <memory>
#include <string>
#include <string_view>

#include "tr2dom/graph.hpp"

namespace tr2dom {

/// Named graph family with parameters. Canonical vertex numbering per family:
///   path(n):              0-1-...-(n-1)
///   cycle(n):             0-1-...-(n-1)-0
///   star(n):              center 0, leaves 1..n-1
///   doublestar(p,q):      supports 0,1 (adjacent); leaves of 0: 2..p+1;
///                         leaves of 1: p+2..p+q+1
///   complete(n), empty(n)
///   completebipartite(p,q): sides 0..p-1 and p..p+q-1
///   corona(B):            base 0..h-1, pendant of i is h+i
///   join(G,H):            G first, H shifted by |G|, all cross edges added
///   pendantpathtree(k):   path 0..k-1 plus vertex k adjacent to k-2
///   twostarbridge(a,b):   centers 0,1; leaves 2..a+1 and a+2..a+b+1;
///                         bridge edge {2, a+2}
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Star,
        DoubleStar,
        Complete,
        CompleteBipartite,
        Empty,
        Corona,
        Join,
        PendantPathTree,
        TwoStarBridge,
    };

    Kind kind;
    int a = 0;
    int b = 0;
    std::shared_ptr<const FamilySpec> base;   // corona, join (left operand)
    std::shared_ptr<const FamilySpec> other;  // join (right operand)

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int n);
    static FamilySpec double_star(int p, int q);
    static FamilySpec complete(int n);
    static FamilySpec complete_bipartite(int p, int q);
    static FamilySpec empty(int n);
    static FamilySpec corona(FamilySpec base);
    static FamilySpec join(FamilySpec left, FamilySpec right);
    static FamilySpec pendant_path_tree(int k);
    static FamilySpec two_star_bridge(int a, int b);

    std::string label() const;
};

/// Builds the graph for a spec; throws std::invalid_argument when a
/// parameter is outside the family's validity range.
Graph generate(const FamilySpec& spec);

/// Parses labels such as "path(7)", "doublestar(3,3)", "corona(path(2))",
/// "join(complete(2),empty(5))".
FamilySpec parse_family(std::string_view text);

}  // namespace tr2dom

#endif
