#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minids {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable undirected simple graph, stored as compressed adjacency lists.
/// Every neighbor list is sorted ascending; all neighbor scans in the solver
/// follow that order.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from 0-based edges. Duplicate edges (in either
    /// orientation) are merged and counted into *duplicates when given.
    /// Throws GraphError on self-loops or out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t* duplicates = nullptr);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return m_; }
    std::uint32_t max_degree() const { return max_degree_; }

    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    /// O(log deg(u)).
    bool has_edge(Vertex u, Vertex v) const;

    /// Edge density m / (n(n-1)/2); 0 for n < 2.
    double density() const;

    /// Edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

    /// Graph on the same vertex set with exactly the missing pairs as edges.
    Graph complement() const;

    /// Structural self-check: symmetry, sortedness, no loops or duplicate
    /// neighbors, degree sum, and max degree. Empty result means consistent.
    std::vector<std::string> validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t m_ = 0;
    std::uint32_t max_degree_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

} // namespace minids
