#include "minids/solution_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace minids {

VerifyReport verify_solution(const Graph& g, std::span<const Vertex> solution) {
    const std::size_t n = g.num_vertices();
    std::vector<char> in(n, 0);
    for (Vertex v : solution) {
        if (v >= n) {
            throw std::out_of_range("vertex id " + std::to_string(v + 1) + " exceeds n = " + std::to_string(n));
        }
        if (in[v]) {
            return {false, "vertex " + std::to_string(v + 1) + " is listed twice"};
        }
        in[v] = 1;
    }
    std::vector<Vertex> sorted(solution.begin(), solution.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v : sorted) {
        for (Vertex u : g.neighbors(v)) {
            if (u > v && in[u]) {
                return {false, "not independent: vertices " + std::to_string(v + 1) + " and " +
                                   std::to_string(u + 1) + " are adjacent"};
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (in[v]) {
            continue;
        }
        const auto nbrs = g.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&in](Vertex u) { return in[u] != 0; })) {
            return {false, "not dominating: vertex " + std::to_string(v + 1) + " has no neighbor in the set"};
        }
    }
    return {true, "ok"};
}

std::vector<Vertex> read_solution(std::istream& in, std::size_t n) {
    std::vector<Vertex> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && (line[0] == '#' || (line[0] == 'c' && (line.size() == 1 || line[1] == ' ')))) {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) {
                ++end;
            }
            if (end == pos) {
                break;
            }
            unsigned long long id = 0;
            const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, id);
            if (ec != std::errc{} || ptr != line.data() + end) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad vertex id '" +
                                            line.substr(pos, end - pos) + "'");
            }
            if (id < 1 || id > n) {
                throw std::out_of_range("line " + std::to_string(line_no) + ": vertex id " + std::to_string(id) +
                                        " outside [1, " + std::to_string(n) + "]");
            }
            out.push_back(static_cast<Vertex>(id - 1));
            pos = end;
        }
    }
    return out;
}

std::vector<Vertex> read_solution_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open solution file " + path);
    }
    return read_solution(in, n);
}

void write_solution(std::ostream& out, std::span<const Vertex> solution) {
    std::vector<Vertex> sorted(solution.begin(), solution.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v : sorted) {
        out << v + 1 << '\n';
    }
}

} // namespace minids
