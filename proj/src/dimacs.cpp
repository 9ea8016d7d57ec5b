#include "minids/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace minids {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line), detail_(message) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

DimacsResult parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    DimacsResult result;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") {
            continue;
        }
        if (tokens[0] == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
                throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
            }
            n = parse_count(tokens[2], line_no, "vertex count");
            result.declared_edges = parse_count(tokens[3], line_no, "edge count");
            if (n > 0xFFFFFFFEULL) {
                throw ParseError(line_no, "vertex count too large");
            }
            have_header = true;
            edges.reserve(result.declared_edges);
        } else if (tokens[0] == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge line before problem line");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            }
            const auto u = parse_count(tokens[1], line_no, "vertex id");
            const auto v = parse_count(tokens[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "edge endpoint out of range [1, " + std::to_string(n) + "]");
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            }
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing problem line 'p edge <n> <m>'");
    }
    result.graph = Graph::from_edges(n, edges, &result.duplicate_edges);
    return result;
}

DimacsResult parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

DimacsResult read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file '" + path + "'");
    }
    try {
        return parse_dimacs(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.detail());
    }
}

void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment) {
    if (!comment.empty()) {
        out << "c " << comment << '\n';
    }
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

} // namespace minids
