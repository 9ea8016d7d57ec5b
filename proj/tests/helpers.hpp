#pragma once

#include <initializer_list>
#include <vector>

#include "minids/graph.hpp"
#include "minids/solution_state.hpp"

namespace minids::test {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph::from_edges(n, e);
}

// a-b-c
inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
// a-b-c-d
inline Graph path4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
// a-b-c-d-e
inline Graph path5() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) {
        e.emplace_back(0, v);
    }
    return Graph::from_edges(leaves + 1, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) {
        e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, e);
}

inline void load(SolutionState& state, std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) {
        state.add_vertex(v);
    }
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace minids::test
