#include "tr2dom/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace tr2dom {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

// Parses exactly `count` integers from a line; anything else is an error.
std::vector<int> parse_ints(std::string_view line, int count, int lineno) {
    std::vector<int> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p != end) {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
        if (p == end) break;
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) throw ParseError("malformed integer", lineno);
        out.push_back(value);
        p = next;
    }
    if (static_cast<int>(out.size()) != count)
        throw ParseError("expected " + std::to_string(count) + " integers", lineno);
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty input", 1);

    auto header = parse_ints(trim(lines[0]), 2, 1);
    int n = header[0], m = header[1];
    if (n < 1) throw ParseError("vertex count must be >= 1", 1);
    if (m < 0) throw ParseError("edge count must be >= 0", 1);
    if (static_cast<int>(lines.size()) != m + 1)
        throw ParseError("expected " + std::to_string(m) + " edge lines",
                         static_cast<int>(lines.size()));

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    for (int i = 0; i < m; ++i) {
        int lineno = i + 2;
        auto uv = parse_ints(trim(lines[i + 1]), 2, lineno);
        int u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        int a = std::min(u, v), b = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        if (!seen.insert(key).second) throw ParseError("duplicate edge", lineno);
        edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

}  // namespace

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw ParseError("empty graph6 line", 1);
    for (char c : line)
        if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6 char outside 63..126", 1);

    std::size_t at = 0;
    std::uint64_t n = 0;
    if (line[0] != '~') {
        n = static_cast<std::uint64_t>(line[0] - kG6Lo);
        at = 1;
    } else if (line.size() >= 4 && line[1] != '~') {
        for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(line[i] - kG6Lo);
        at = 4;
    } else if (line.size() >= 8) {
        for (int i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(line[i] - kG6Lo);
        at = 8;
    } else {
        throw ParseError("truncated graph6 size header", 1);
    }
    if (n < 1) throw ParseError("graph6 order must be >= 1", 1);
    if (n > 100000) throw ParseError("graph6 order unreasonably large", 1);

    std::uint64_t bits = n * (n - 1) / 2;
    std::uint64_t needed = (bits + 5) / 6;
    if (line.size() - at != needed) throw ParseError("graph6 body has wrong length", 1);

    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int ch = line[at + bit / 6] - kG6Lo;
            if ((ch >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Lo));
    }

    std::uint64_t bits = n * (n - 1) / 2;
    std::uint64_t bit = 0;
    int acc = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        acc <<= 6 - bits % 6;
        out.push_back(static_cast<char>(acc + kG6Lo));
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace tr2dom
