#include "minids/graph.hpp"

#include <algorithm>
#include <sstream>

namespace minids {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t* duplicates) {
    if (n > std::size_t{0xFFFFFFFE}) {
        throw GraphError("vertex count too large");
    }
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n = " + std::to_string(n));
        }
        if (u == v) {
            throw GraphError("self-loop on vertex " + std::to_string(u));
        }
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    const auto unique_end = std::unique(normalized.begin(), normalized.end());
    if (duplicates != nullptr) {
        *duplicates = static_cast<std::size_t>(normalized.end() - unique_end);
    }
    normalized.erase(unique_end, normalized.end());

    Graph g;
    g.m_ = normalized.size();
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : normalized) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.offsets_[i + 1] += g.offsets_[i];
    }
    g.adjacency_.resize(2 * normalized.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills each list in ascending order: for vertex w,
    // smaller neighbors arrive as the second endpoint before larger ones arrive
    // as the first endpoint.
    for (auto [u, v] : normalized) {
        g.adjacency_[cursor[v]++] = u;
    }
    for (auto [u, v] : normalized) {
        g.adjacency_[cursor[u]++] = v;
    }
    for (std::size_t v = 0; v < n; ++v) {
        g.max_degree_ = std::max(g.max_degree_, g.degree(static_cast<Vertex>(v)));
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double Graph::density() const {
    const auto n = static_cast<double>(num_vertices());
    if (n < 2) {
        return 0.0;
    }
    return static_cast<double>(m_) / (n * (n - 1) / 2.0);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::complement() const {
    const std::size_t n = num_vertices();
    std::vector<Edge> out;
    out.reserve(n * (n - 1) / 2 - m_);
    for (Vertex u = 0; u < n; ++u) {
        auto it = neighbors(u).begin();
        const auto end = neighbors(u).end();
        for (Vertex v = u + 1; v < n; ++v) {
            while (it != end && *it < v) {
                ++it;
            }
            if (it == end || *it != v) {
                out.emplace_back(u, v);
            }
        }
    }
    return from_edges(n, out);
}

std::vector<std::string> Graph::validate() const {
    std::vector<std::string> issues;
    const std::size_t n = num_vertices();
    std::size_t degree_sum = 0;
    std::uint32_t observed_max = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto nbrs = neighbors(v);
        degree_sum += nbrs.size();
        observed_max = std::max(observed_max, degree(v));
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Vertex u = nbrs[i];
            std::ostringstream where;
            where << "vertex " << v << ", neighbor " << u << ": ";
            if (u >= n) {
                issues.push_back(where.str() + "out of range");
                continue;
            }
            if (u == v) {
                issues.push_back(where.str() + "self-loop");
            }
            if (i > 0 && nbrs[i - 1] >= u) {
                issues.push_back(where.str() + "list not strictly ascending");
            }
            if (!has_edge(u, v)) {
                issues.push_back(where.str() + "asymmetric adjacency");
            }
        }
    }
    if (degree_sum != 2 * m_) {
        issues.push_back("degree sum " + std::to_string(degree_sum) + " != 2m = " +
                         std::to_string(2 * m_));
    }
    if (observed_max != max_degree_) {
        issues.push_back("stored max degree " + std::to_string(max_degree_) + " != " +
                         std::to_string(observed_max));
    }
    return issues;
}

} // namespace minids
