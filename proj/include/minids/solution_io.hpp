#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minids/graph.hpp"

namespace minids {

struct VerifyReport {
    bool valid = false;
    std::string message; // first violated constraint, or "ok"
};

/// Checks independence, then domination, reporting the first violation
/// with 1-based ids. Throws std::out_of_range for an id >= n.
VerifyReport verify_solution(const Graph& g, std::span<const Vertex> solution);

/// Reads 1-based vertex ids separated by whitespace or commas; lines
/// starting with '#' or 'c ' are comments. Returns 0-based ids in input order.
/// Throws std::invalid_argument on a non-numeric token and
/// std::out_of_range on an id outside [1, n].
std::vector<Vertex> read_solution(std::istream& in, std::size_t n);
std::vector<Vertex> read_solution_file(const std::string& path, std::size_t n);

/// Sorted 1-based ids, one per line.
void write_solution(std::ostream& out, std::span<const Vertex> solution);

} // namespace minids
