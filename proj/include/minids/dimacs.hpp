#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minids/graph.hpp"

namespace minids {

/// Malformed DIMACS input. line() is 1-based; 0 when the problem is not tied
/// to a single line (e.g. a missing problem line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

struct DimacsResult {
    Graph graph;
    std::size_t duplicate_edges = 0;
    std::size_t declared_edges = 0;
};

/// Reads ASCII DIMACS (`c` comments, one `p edge|col <n> <m>` line, `e <u> <v>`
/// edge lines with 1-based ids). Duplicate edges are merged and counted;
/// self-loops and out-of-range endpoints are rejected with the line number.
DimacsResult parse_dimacs(std::istream& in);
DimacsResult parse_dimacs(std::string_view text);
DimacsResult read_dimacs_file(const std::string& path);

/// Writes `p edge n m` followed by one `e u v` line per edge (u < v, 1-based).
void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment = {});

} // namespace minids
