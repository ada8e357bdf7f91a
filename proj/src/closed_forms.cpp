#include "tr2dom/closed_forms.hpp"

#include <algorithm>

#include "tr2dom/profile.hpp"
#include "tr2dom/solvers.hpp"

namespace tr2dom {

const char* value_kind_name(ValueKind k) {
    switch (k) {
        case ValueKind::ValueTwo: return "value_two";
        case ValueKind::ValueThree: return "value_three";
        case ValueKind::ValueN: return "value_n";
        case ValueKind::Other: return "other";
    }
    return "?";
}

namespace {

bool is_k2_spec(const FamilySpec& s) {
    Graph g = generate(s);
    return g.order() == 2 && g.size() == 1;
}

}  // namespace

int formula_value(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Path:
            if (spec.a >= 2) return (2 * spec.a + 4) / 3;  // ceil((2n+2)/3)
            break;
        case Kind::Cycle:
            if (spec.a >= 3) return (2 * spec.a + 2) / 3;  // ceil(2n/3)
            break;
        case Kind::Star:
            if (spec.a >= 3) return 3;
            break;
        case Kind::DoubleStar:
            if (spec.a >= 1 && spec.b >= 1) return 4;
            break;
        case Kind::Corona: {
            Graph base = generate(*spec.base);
            if (is_tree(base)) return 2 * base.order();
            break;
        }
        case Kind::Join:
            if (is_k2_spec(*spec.base) || is_k2_spec(*spec.other)) return 2;
            break;
        default:
            break;
    }
    throw NoKnownFormulaError("no proven formula for " + spec.label());
}

Classification classify(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("classify requires order >= 2");
    if (!is_connected(g)) throw DisconnectedError("classify requires a connected graph");

    Classification c;

    std::vector<int> universal;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) universal.push_back(v);

    if (universal.size() >= 2) {
        c.kind = ValueKind::ValueTwo;
        c.universal_pair = {universal[0], universal[1]};
        if (n == 2) c.also_value_n = true;
        return c;
    }

    // gamma_tR2 = n: K2 and K_{1,2} are handled above/below; otherwise every
    // vertex must be a leaf or a weak support.
    auto every_leaf_or_weak_support = [&] {
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 1) continue;
            int leaf_neighbors = 0;
            for (int w : g.neighbors(v))
                if (g.degree(w) == 1) ++leaf_neighbors;
            if (leaf_neighbors != 1) return false;
        }
        return true;
    };
    bool is_p3 = n == 3 && g.size() == 2;
    if (is_p3 || every_leaf_or_weak_support()) {
        c.kind = ValueKind::ValueN;
        return c;
    }

    if (n >= 5) {
        if (universal.size() == 1) {
            c.kind = ValueKind::ValueThree;
            c.universal_vertex = universal[0];
            return c;
        }
        // Delta <= n-2 here. Look for a triple inducing P3 or C3 with every
        // outside vertex having two neighbors inside.
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int d = b + 1; d < n; ++d) {
                    int edges = (g.adjacent(a, b) ? 1 : 0) + (g.adjacent(a, d) ? 1 : 0) +
                                (g.adjacent(b, d) ? 1 : 0);
                    if (edges < 2) continue;  // induced P3 or C3
                    bool ok = true;
                    for (int v = 0; v < n && ok; ++v) {
                        if (v == a || v == b || v == d) continue;
                        int inside = (g.adjacent(v, a) ? 1 : 0) + (g.adjacent(v, b) ? 1 : 0) +
                                     (g.adjacent(v, d) ? 1 : 0);
                        if (inside < 2) ok = false;
                    }
                    if (ok) {
                        c.kind = ValueKind::ValueThree;
                        c.triple = {a, b, d};
                        return c;
                    }
                }
            }
        }
        c.kind = ValueKind::Other;
        return c;
    }

    // Orders 3 and 4: the structural value-3 characterization needs n >= 5,
    // so decide by exact search.
    if (gamma_tr2_exact(g).value == 3) {
        c.kind = ValueKind::ValueThree;
        c.by_solver = true;
        return c;
    }
    c.kind = ValueKind::Other;
    return c;
}

std::optional<Graph> corona_base_tree(const Graph& t) {
    if (!is_tree(t)) throw NotTreeError("corona test requires a tree");
    const int n = t.order();
    if (n == 1) return std::nullopt;
    if (n == 2) return Graph(1, {});  // K2 is the corona of K1
    if (n % 2 != 0) return std::nullopt;

    std::vector<int> base;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 1) continue;
        int leaf_neighbors = 0;
        for (int w : t.neighbors(v))
            if (t.degree(w) == 1) ++leaf_neighbors;
        if (leaf_neighbors != 1) return std::nullopt;  // non-leaf must be a weak support
        base.push_back(v);
    }
    if (2 * static_cast<int>(base.size()) != n) return std::nullopt;
    // In a tree the internal vertices always induce a subtree.
    return induced_subgraph(t, base);
}

PendantPathTree pendant_path_tree(int k) {
    if (k < 4) throw std::invalid_argument("pendant path tree requires k >= 4");
    Graph g = generate(FamilySpec::pendant_path_tree(k));
    return {std::move(g), 2.0 * (k + 3) / 3.0};
}

}  // namespace tr2dom
