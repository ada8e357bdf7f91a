#ifndef TR2DOM_GRAPH_IO_HPP
#define TR2DOM_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tr2dom/graph.hpp"

namespace tr2dom {

/// Error raised by the text parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list format: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// graph6 format (one graph per line, printable chars 63..126). The
/// optional ">>graph6<<" header is tolerated by the line parser.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Reads every graph6 line from a stream; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace tr2dom

#endif
