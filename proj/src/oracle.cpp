#include "minids/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace minids {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_rows(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<Mask> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        rows[v] = Mask{1} << v;
    }
    for (const auto& [u, v] : g.edges()) {
        rows[u] |= Mask{1} << v;
        rows[v] |= Mask{1} << u;
    }
    return rows;
}

std::vector<Vertex> mask_to_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

struct BranchAndBound {
    std::vector<Mask> closed;
    Mask all = 0;
    int max_closed = 1;
    int best_size = 0;
    Mask best = 0;

    void run(Mask chosen, Mask dominated, int count) {
        if (dominated == all) {
            if (count < best_size) {
                best_size = count;
                best = chosen;
            }
            return;
        }
        const int undominated = std::popcount(all & ~dominated);
        if (count + (undominated + max_closed - 1) / max_closed >= best_size) {
            return;
        }
        // Branch on the undominated vertex with the fewest ways to dominate it.
        Mask pick = 0;
        int fewest = 64;
        for (Mask rest = all & ~dominated; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            const Mask options = closed[u] & ~dominated;
            const int c = std::popcount(options);
            if (c < fewest) {
                fewest = c;
                pick = options;
            }
        }
        for (Mask rest = pick; rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            run(chosen | (Mask{1} << w), dominated | closed[w], count + 1);
        }
    }
};

// Dense 0/1 adjacency for the exhaustive swap and plateau checks, which
// must handle graphs above 32 vertices.
class Dense {
public:
    explicit Dense(const Graph& g) : n_(g.num_vertices()), adj_(n_ * n_, 0) {
        for (const auto& [u, v] : g.edges()) {
            adj_[u * n_ + v] = 1;
            adj_[v * n_ + u] = 1;
        }
    }
    std::size_t n() const { return n_; }
    bool adj(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

private:
    std::size_t n_;
    std::vector<char> adj_;
};

std::vector<char> membership(std::size_t n, std::span<const Vertex> set) {
    std::vector<char> in(n, 0);
    for (Vertex v : set) {
        if (v >= n) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        }
        in[v] = 1;
    }
    return in;
}

std::vector<Vertex> freed_by(const Dense& d, const std::vector<char>& in_s, const std::vector<char>& in_drop) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < d.n(); ++v) {
        if (in_s[v]) {
            continue;
        }
        bool inside = true;
        for (Vertex u = 0; u < d.n() && inside; ++u) {
            if (in_s[u] && d.adj(u, v) && !in_drop[u]) {
                inside = false;
            }
        }
        if (inside) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_solution(const Dense& d, const std::vector<char>& in) {
    for (Vertex v = 0; v < d.n(); ++v) {
        bool covered = in[v] != 0;
        for (Vertex u = 0; u < d.n(); ++u) {
            if (u == v || !d.adj(u, v) || !in[u]) {
                continue;
            }
            if (in[v]) {
                return false;
            }
            covered = true;
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

// Tries every subset A of `pool` with 1 <= |A| <= max_size, in
// lexicographic order of index tuples.
bool find_subset(const Dense& d, std::vector<char>& in, const std::vector<Vertex>& pool, std::size_t start,
                 std::size_t remaining, std::vector<Vertex>& picked) {
    if (!picked.empty() && is_solution(d, in)) {
        return true;
    }
    if (remaining == 0) {
        return false;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        const Vertex v = pool[i];
        in[v] = 1;
        picked.push_back(v);
        if (find_subset(d, in, pool, i + 1, remaining - 1, picked)) {
            return true;
        }
        picked.pop_back();
        in[v] = 0;
    }
    return false;
}

} // namespace

ExactResult exact_min_ids(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > exact_vertex_limit) {
        throw std::invalid_argument("exact solver handles at most " + std::to_string(exact_vertex_limit) +
                                    " vertices, graph has " + std::to_string(n));
    }
    if (n == 0) {
        return {};
    }
    BranchAndBound bb;
    bb.closed = closed_rows(g);
    bb.all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask row : bb.closed) {
        bb.max_closed = std::max(bb.max_closed, std::popcount(row));
    }
    bb.best_size = static_cast<int>(n) + 1;
    bb.run(0, 0, 0);
    return {static_cast<std::size_t>(bb.best_size), mask_to_vertices(bb.best)};
}

ExactResult exact_min_ids_sweep(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 20) {
        throw std::invalid_argument("subset sweep handles at most 20 vertices");
    }
    const auto closed = closed_rows(g);
    const Mask all = (Mask{1} << n) - 1;
    ExactResult best{n + 1, {}};
    for (Mask s = 0; s <= all; ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size >= best.size) {
            continue;
        }
        Mask dominated = 0;
        bool independent = true;
        for (Mask rest = s; rest != 0 && independent; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            independent = (closed[v] & s) == (Mask{1} << v);
            dominated |= closed[v];
        }
        if (independent && dominated == all) {
            best = {size, mask_to_vertices(s)};
        }
    }
    if (n == 0) {
        best.size = 0;
    }
    return best;
}

bool is_independent_dominating(const Graph& g, std::span<const Vertex> solution) {
    const Dense d(g);
    return is_solution(d, membership(g.num_vertices(), solution));
}

std::vector<Vertex> naive_F(const Graph& g, std::span<const Vertex> solution, std::span<const Vertex> drop) {
    const Dense d(g);
    return freed_by(d, membership(g.num_vertices(), solution), membership(g.num_vertices(), drop));
}

ExhaustiveSwap find_improving_swap(const Graph& g, std::span<const Vertex> solution, int k) {
    const Dense d(g);
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> s(solution.begin(), solution.end());
    std::sort(s.begin(), s.end());
    const auto kk = static_cast<std::size_t>(k);
    if (k < 1 || s.size() < kk) {
        return {};
    }
    std::vector<std::size_t> idx(kk);
    for (std::size_t i = 0; i < kk; ++i) {
        idx[i] = i;
    }
    const auto in_s = membership(n, s);
    while (true) {
        std::vector<char> in_drop(n, 0);
        std::vector<Vertex> drop;
        for (std::size_t i : idx) {
            in_drop[s[i]] = 1;
            drop.push_back(s[i]);
        }
        const auto freed = freed_by(d, in_s, in_drop);
        std::vector<char> in = in_s;
        for (Vertex x : drop) {
            in[x] = 0;
        }
        std::vector<Vertex> picked;
        if (find_subset(d, in, freed, 0, kk - 1, picked)) {
            return {drop, picked};
        }
        // next k-combination of indices
        std::size_t i = kk;
        while (i > 0 && idx[i - 1] == s.size() - kk + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return {};
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < kk; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

bool certify_k_minimal(const Graph& g, std::span<const Vertex> solution, int k) {
    return find_improving_swap(g, solution, k).drop.empty();
}

std::vector<std::pair<Vertex, Vertex>> naive_plateau(const Graph& g, std::span<const Vertex> solution) {
    const Dense d(g);
    const std::size_t n = g.num_vertices();
    std::vector<char> in = membership(n, solution);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < n; ++x) {
        if (!in[x]) {
            continue;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (in[v]) {
                continue;
            }
            in[x] = 0;
            in[v] = 1;
            if (is_solution(d, in)) {
                out.emplace_back(x, v);
            }
            in[v] = 0;
            in[x] = 1;
        }
    }
    return out;
}

} // namespace minids
