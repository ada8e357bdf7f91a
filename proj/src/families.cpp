#include "tr2dom/families.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace tr2dom {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

FamilySpec FamilySpec::path(int n) { return {Kind::Path, n}; }
FamilySpec FamilySpec::cycle(int n) { return {Kind::Cycle, n}; }
FamilySpec FamilySpec::star(int n) { return {Kind::Star, n}; }
FamilySpec FamilySpec::double_star(int p, int q) { return {Kind::DoubleStar, p, q}; }
FamilySpec FamilySpec::complete(int n) { return {Kind::Complete, n}; }
FamilySpec FamilySpec::complete_bipartite(int p, int q) { return {Kind::CompleteBipartite, p, q}; }
FamilySpec FamilySpec::empty(int n) { return {Kind::Empty, n}; }

FamilySpec FamilySpec::corona(FamilySpec b) {
    FamilySpec s{Kind::Corona};
    s.base = std::make_shared<const FamilySpec>(std::move(b));
    return s;
}

FamilySpec FamilySpec::join(FamilySpec left, FamilySpec right) {
    FamilySpec s{Kind::Join};
    s.base = std::make_shared<const FamilySpec>(std::move(left));
    s.other = std::make_shared<const FamilySpec>(std::move(right));
    return s;
}

FamilySpec FamilySpec::pendant_path_tree(int k) { return {Kind::PendantPathTree, k}; }
FamilySpec FamilySpec::two_star_bridge(int a, int b) { return {Kind::TwoStarBridge, a, b}; }

std::string FamilySpec::label() const {
    switch (kind) {
        case Kind::Path: return "path(" + std::to_string(a) + ")";
        case Kind::Cycle: return "cycle(" + std::to_string(a) + ")";
        case Kind::Star: return "star(" + std::to_string(a) + ")";
        case Kind::DoubleStar:
            return "doublestar(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::Complete: return "complete(" + std::to_string(a) + ")";
        case Kind::CompleteBipartite:
            return "completebipartite(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::Empty: return "empty(" + std::to_string(a) + ")";
        case Kind::Corona: return "corona(" + base->label() + ")";
        case Kind::Join: return "join(" + base->label() + "," + other->label() + ")";
        case Kind::PendantPathTree: return "pendantpathtree(" + std::to_string(a) + ")";
        case Kind::TwoStarBridge:
            return "twostarbridge(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<int, int>> e;
    switch (spec.kind) {
        case Kind::Path: {
            require(spec.a >= 1, "path requires n >= 1");
            for (int i = 0; i + 1 < spec.a; ++i) e.emplace_back(i, i + 1);
            return Graph(spec.a, std::move(e));
        }
        case Kind::Cycle: {
            require(spec.a >= 3, "cycle requires n >= 3");
            for (int i = 0; i < spec.a; ++i) e.emplace_back(i, (i + 1) % spec.a);
            return Graph(spec.a, std::move(e));
        }
        case Kind::Star: {
            require(spec.a >= 2, "star requires n >= 2");
            for (int i = 1; i < spec.a; ++i) e.emplace_back(0, i);
            return Graph(spec.a, std::move(e));
        }
        case Kind::DoubleStar: {
            require(spec.a >= 1 && spec.b >= 1, "double star requires p,q >= 1");
            int n = spec.a + spec.b + 2;
            e.emplace_back(0, 1);
            for (int i = 0; i < spec.a; ++i) e.emplace_back(0, 2 + i);
            for (int i = 0; i < spec.b; ++i) e.emplace_back(1, 2 + spec.a + i);
            return Graph(n, std::move(e));
        }
        case Kind::Complete: {
            require(spec.a >= 1, "complete requires n >= 1");
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) e.emplace_back(i, j);
            return Graph(spec.a, std::move(e));
        }
        case Kind::CompleteBipartite: {
            require(spec.a >= 1 && spec.b >= 1, "complete bipartite requires p,q >= 1");
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j) e.emplace_back(i, spec.a + j);
            return Graph(spec.a + spec.b, std::move(e));
        }
        case Kind::Empty: {
            require(spec.a >= 1, "empty requires n >= 1");
            return Graph(spec.a, {});
        }
        case Kind::Corona: {
            Graph base = generate(*spec.base);
            int h = base.order();
            e = base.edges();
            for (int i = 0; i < h; ++i) e.emplace_back(i, h + i);
            return Graph(2 * h, std::move(e));
        }
        case Kind::Join: {
            Graph left = generate(*spec.base);
            Graph right = generate(*spec.other);
            int p = left.order();
            e = left.edges();
            for (const auto& [u, v] : right.edges()) e.emplace_back(p + u, p + v);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < right.order(); ++j) e.emplace_back(i, p + j);
            return Graph(p + right.order(), std::move(e));
        }
        case Kind::PendantPathTree: {
            require(spec.a >= 4, "pendant path tree requires k >= 4");
            int k = spec.a;
            for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(k - 2, k);
            return Graph(k + 1, std::move(e));
        }
        case Kind::TwoStarBridge: {
            require(spec.a >= 1 && spec.b >= 1, "two-star bridge requires a,b >= 1");
            int n = spec.a + spec.b + 2;
            for (int i = 0; i < spec.a; ++i) e.emplace_back(0, 2 + i);
            for (int i = 0; i < spec.b; ++i) e.emplace_back(1, 2 + spec.a + i);
            e.emplace_back(2, 2 + spec.a);
            return Graph(n, std::move(e));
        }
    }
    throw std::invalid_argument("unknown family");
}

namespace {

struct FamilyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        std::string out;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos++]))));
        if (out.empty()) throw std::invalid_argument("family name expected");
        return out;
    }

    int integer() {
        skip_space();
        bool neg = pos < text.size() && text[pos] == '-';
        if (neg) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("integer expected in family spec");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return static_cast<int>(neg ? -v : v);
    }

    FamilySpec spec() {
        std::string name = ident();
        std::vector<int> ints;
        std::vector<FamilySpec> subs;
        if (eat('(')) {
            do {
                skip_space();
                if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
                    ints.push_back(integer());
                else
                    subs.push_back(spec());
            } while (eat(','));
            if (!eat(')')) throw std::invalid_argument("')' expected in family spec");
        }
        return build(name, ints, subs);
    }

    static FamilySpec build(const std::string& name, const std::vector<int>& ints,
                            std::vector<FamilySpec>& subs) {
        auto want = [&](std::size_t ni, std::size_t ns) {
            if (ints.size() != ni || subs.size() != ns)
                throw std::invalid_argument("wrong arguments for family " + name);
        };
        if (name == "path") { want(1, 0); return FamilySpec::path(ints[0]); }
        if (name == "cycle") { want(1, 0); return FamilySpec::cycle(ints[0]); }
        if (name == "star") { want(1, 0); return FamilySpec::star(ints[0]); }
        if (name == "doublestar") { want(2, 0); return FamilySpec::double_star(ints[0], ints[1]); }
        if (name == "complete") { want(1, 0); return FamilySpec::complete(ints[0]); }
        if (name == "completebipartite") {
            want(2, 0);
            return FamilySpec::complete_bipartite(ints[0], ints[1]);
        }
        if (name == "empty") { want(1, 0); return FamilySpec::empty(ints[0]); }
        if (name == "corona") { want(0, 1); return FamilySpec::corona(std::move(subs[0])); }
        if (name == "join") {
            want(0, 2);
            return FamilySpec::join(std::move(subs[0]), std::move(subs[1]));
        }
        if (name == "pendantpathtree") { want(1, 0); return FamilySpec::pendant_path_tree(ints[0]); }
        if (name == "twostarbridge") {
            want(2, 0);
            return FamilySpec::two_star_bridge(ints[0], ints[1]);
        }
        throw std::invalid_argument("unknown family: " + name);
    }
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
    FamilyParser p{text};
    FamilySpec s = p.spec();
    p.skip_space();
    if (p.pos != text.size()) throw std::invalid_argument("trailing input in family spec");
    return s;
}

}  // namespace tr2dom
