#include "tr2dom/labeling.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tr2dom {

namespace {

void require_matching(const Graph& g, const Labeling& f) {
    if (f.size() != g.order()) throw std::invalid_argument("labeling length != graph order");
    for (auto v : f.values)
        if (v > 2) throw std::invalid_argument("labeling value outside {0,1,2}");
}

}  // namespace

int weight(const Labeling& f) {
    int w = 0;
    for (auto v : f.values) w += v;
    return w;
}

std::vector<Violation> check_r2f(const Graph& g, const Labeling& f) {
    require_matching(g, f);
    std::vector<Violation> out;
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        int ones = 0;
        bool covered = false;
        for (int w : g.neighbors(v)) {
            if (f[w] == 2) {
                covered = true;
                break;
            }
            if (f[w] == 1 && ++ones >= 2) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back({Violation::Kind::UncoveredZero, v,
                           "0-vertex with no 2-neighbor and fewer than two 1-neighbors"});
    }
    return out;
}

std::vector<Violation> check_tr2df(const Graph& g, const Labeling& f) {
    auto out = check_r2f(g, f);
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] == 0) continue;
        bool has_positive = false;
        for (int w : g.neighbors(v))
            if (f[w] > 0) {
                has_positive = true;
                break;
            }
        if (!has_positive)
            out.push_back({Violation::Kind::IsolatedPositive, v,
                           "positive vertex isolated among positive vertices"});
    }
    return out;
}

bool is_r2f(const Graph& g, const Labeling& f) {
    if (g.has_masks()) {
        std::uint64_t m1 = 0, m2 = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (f[v] == 1) m1 |= std::uint64_t{1} << v;
            if (f[v] == 2) m2 |= std::uint64_t{1} << v;
        }
        for (int v = 0; v < g.order(); ++v) {
            if (f[v] != 0) continue;
            std::uint64_t nb = g.neighbor_mask(v);
            if (nb & m2) continue;
            if (std::popcount(nb & m1) < 2) return false;
        }
        return true;
    }
    return check_r2f(g, f).empty();
}

bool is_tr2df(const Graph& g, const Labeling& f) {
    if (g.has_masks()) {
        std::uint64_t m1 = 0, m2 = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (f[v] == 1) m1 |= std::uint64_t{1} << v;
            if (f[v] == 2) m2 |= std::uint64_t{1} << v;
        }
        std::uint64_t pos = m1 | m2;
        for (int v = 0; v < g.order(); ++v) {
            std::uint64_t nb = g.neighbor_mask(v);
            if (f[v] == 0) {
                if (nb & m2) continue;
                if (std::popcount(nb & m1) < 2) return false;
            } else {
                if (!(nb & pos)) return false;
            }
        }
        return true;
    }
    return check_tr2df(g, f).empty();
}

Partition partition(const Graph& g, const Labeling& f) {
    require_matching(g, f);
    Partition p;
    for (int v = 0; v < g.order(); ++v) {
        switch (f[v]) {
            case 0: p.v0.push_back(v); break;
            case 1: p.v1.push_back(v); break;
            default: p.v2.push_back(v); break;
        }
    }
    for (int v : p.v0) {
        bool near2 = false;
        for (int w : g.neighbors(v))
            if (f[w] == 2) {
                near2 = true;
                break;
            }
        (near2 ? p.v02 : p.v01).push_back(v);
    }
    return p;
}

std::vector<int> external_private_neighbors(const Graph& g, const std::vector<int>& s, int u) {
    std::vector<bool> in_s(g.order(), false);
    for (int v : s) in_s.at(v) = true;
    if (u < 0 || u >= g.order() || !in_s[u])
        throw std::invalid_argument("external_private_neighbors: u not in S");
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (in_s[v]) continue;
        // N[v] ∩ S must be exactly {u}; v itself is outside S.
        bool sees_u = false, sees_other = false;
        for (int w : g.neighbors(v)) {
            if (!in_s[w]) continue;
            if (w == u)
                sees_u = true;
            else {
                sees_other = true;
                break;
            }
        }
        if (sees_u && !sees_other) out.push_back(v);
    }
    return out;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::vector<bool> in_s(g.order(), false);
    for (int v : s) in_s.at(v) = true;
    for (int v = 0; v < g.order(); ++v) {
        if (in_s[v]) continue;
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (in_s[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

bool is_total_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::vector<bool> in_s(g.order(), false);
    for (int v : s) in_s.at(v) = true;
    for (int v = 0; v < g.order(); ++v) {
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (in_s[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

bool is_double_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::vector<bool> in_s(g.order(), false);
    for (int v : s) in_s.at(v) = true;
    for (int v = 0; v < g.order(); ++v) {
        int count = in_s[v] ? 1 : 0;
        for (int w : g.neighbors(v)) {
            if (in_s[w]) ++count;
            if (count >= 2) break;
        }
        if (count < 2) return false;
    }
    return true;
}

Labeling parse_labeling(std::string_view text) {
    std::vector<std::uint8_t> values;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') continue;
        if (c < '0' || c > '2') throw std::invalid_argument("labeling digit outside {0,1,2}");
        values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (values.empty()) throw std::invalid_argument("empty labeling");
    return Labeling(std::move(values));
}

std::string format_labeling(const Labeling& f) {
    std::ostringstream out;
    for (int v = 0; v < f.size(); ++v) {
        if (v) out << ' ';
        out << static_cast<int>(f[v]);
    }
    return out.str();
}

}  // namespace tr2dom
