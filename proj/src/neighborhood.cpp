#include "minids/neighborhood.hpp"

#include <limits>
#include <stdexcept>

namespace minids {

Deadline Deadline::after(double seconds) {
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(seconds)));
}

namespace {

void require_maximal(const SolutionState& state) {
    if (!state.is_maximal()) {
        throw std::logic_error("neighborhood search needs a maximal independent set");
    }
}

SwapMove make_move(const DropSet& drop, Vertex a) {
    SwapMove m;
    m.drop = drop;
    m.add_vertices[0] = a;
    m.add_count = 1;
    return m;
}

SwapMove make_move(const DropSet& drop, Vertex a, Vertex b) {
    SwapMove m;
    m.drop = drop;
    m.add_vertices = {a, b};
    m.add_count = 2;
    return m;
}

} // namespace

void NeighborhoodSearch::ensure_capacity(std::size_t n) {
    if (mark_.size() < n) {
        mark_.assign(n, 0);
        epoch_ = 0;
        z_seen_.assign(n, 0);
        z_epoch_ = 0;
    }
}

// Never hands out 0 (the initial mark) and keeps the previous epoch distinct.
void NeighborhoodSearch::next_epoch() {
    if (++epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(mark_.begin(), mark_.end(), 0);
        epoch_ = 1;
    }
}

void NeighborhoodSearch::mark_neighbors(const Graph& g, Vertex v) {
    for (Vertex u : g.neighbors(v)) {
        mark_[u] = epoch_;
    }
}

// A vertex b such that {a, b} is a solution of G[D + F(D)], where a is
// freed by D without being adjacent to z: b lies in the part of F(D) that a
// misses, is adjacent to z and to every other vertex of that part.
std::optional<Vertex> NeighborhoodSearch::partner(SolutionState& state, Vertex a, const DropSet& drop, Vertex z) {
    const Graph& g = state.graph();
    state.collect_freed(drop, freed_);
    next_epoch();
    mark_[a] = epoch_;
    mark_neighbors(g, a);
    missed_.clear();
    for (Vertex u : freed_) {
        if (mark_[u] != epoch_) {
            missed_.push_back(u);
        }
    }
    if (missed_.empty()) {
        return std::nullopt;
    }
    // restamp the missed part so one pass over N(b) counts b's neighbors in it
    next_epoch();
    for (Vertex u : missed_) {
        mark_[u] = epoch_;
    }
    for (Vertex b : g.neighbors(z)) {
        if (mark_[b] != epoch_) {
            continue;
        }
        std::size_t adjacent = 0;
        for (Vertex u : g.neighbors(b)) {
            adjacent += mark_[u] == epoch_ ? 1 : 0;
        }
        if (adjacent + 1 == missed_.size()) {
            return b;
        }
    }
    return std::nullopt;
}

std::optional<SwapMove> NeighborhoodSearch::search_2(SolutionState& state) {
    require_maximal(state);
    stats_.two_anchors = 0;
    std::array<Vertex, 2> pair{};
    for (Vertex v : state.section(Section::two_tight)) {
        ++stats_.two_anchors;
        state.solution_neighbors(v, pair);
        const DropSet drop{pair[0], pair[1]};
        if (state.adjacent_to_all_freed(v, drop, freed_)) {
            last_case_ = SwapCase::two_swap;
            return make_move(drop, v);
        }
    }
    return std::nullopt;
}

std::optional<SwapMove> NeighborhoodSearch::search_3(SolutionState& state) {
    require_maximal(state);
    stats_.three_anchors = 0;
    stats_.pair_anchors = 0;
    if (state.size() < 3) {
        return std::nullopt;
    }
    const Graph& g = state.graph();
    ensure_capacity(g.num_vertices());
    std::array<Vertex, 3> triple{};
    std::array<Vertex, 2> pair{};
    std::array<Vertex, 2> other_pair{};

    const auto three_tight = state.section(Section::three_plus);
    const auto two_tight = state.section(Section::two_tight);

    // 1. a single 3-tight vertex replaces its three solution neighbors.
    for (Vertex a : three_tight) {
        if (state.tightness(a) != 3) {
            continue;
        }
        ++stats_.three_anchors;
        state.solution_neighbors(a, triple);
        const DropSet drop{triple[0], triple[1], triple[2]};
        if (state.adjacent_to_all_freed(a, drop, freed_)) {
            last_case_ = SwapCase::single_three;
            return make_move(drop, a);
        }
    }

    // 2. 3-tight a plus one freed vertex b covering everything a misses.
    for (Vertex a : three_tight) {
        if (state.tightness(a) != 3) {
            continue;
        }
        state.solution_neighbors(a, triple);
        const DropSet drop{triple[0], triple[1], triple[2]};
        state.collect_freed(drop, freed_);
        next_epoch();
        mark_neighbors(g, a);
        missed_.clear();
        for (Vertex u : freed_) {
            if (u != a && mark_[u] != epoch_) {
                missed_.push_back(u);
            }
        }
        for (Vertex b : missed_) {
            if (state.adjacent_to_all(b, missed_)) {
                last_case_ = SwapCase::three_with_mate;
                return make_move(drop, a, b);
            }
        }
    }

    // 3 and 4. a 2-tight anchor a on {x, y} plus a partner b, dropping a third
    // solution vertex z. Each branch only proposes z; the (a, z) pair is then
    // checked once, taking any b from the freed set of {x, y, z} that a
    // misses, that covers z and that is adjacent to the rest of what a misses.
    for (Vertex a : two_tight) {
        ++stats_.pair_anchors;
        state.solution_neighbors(a, pair);
        const Vertex x = pair[0];
        const Vertex y = pair[1];
        if (++z_epoch_ == 0) {
            std::fill(z_seen_.begin(), z_seen_.end(), 0);
            z_epoch_ = 1;
        }
        std::optional<SwapMove> found;
        const auto propose = [&](Vertex z, SwapCase label) {
            if (z == x || z == y || z_seen_[z] == z_epoch_) {
                return false;
            }
            z_seen_[z] = z_epoch_;
            if (auto b = partner(state, a, DropSet{x, y, z}, z)) {
                last_case_ = label;
                found = make_move(DropSet{x, y, z}, a, *b);
                return true;
            }
            return false;
        };

        // 3. z from a 2-tight vertex with exactly one solution neighbor in
        //    common with a. This also covers a 2-tight neighbor of a.
        for (int side = 0; side < 2; ++side) {
            for (Vertex b : g.neighbors(pair[side])) {
                if (b == a || state.in_solution(b) || state.tightness(b) != 2) {
                    continue;
                }
                state.solution_neighbors(b, other_pair);
                const Vertex z = other_pair[0] == pair[side] ? other_pair[1] : other_pair[0];
                if (propose(z, SwapCase::two_two)) {
                    return found;
                }
            }
        }

        // 4. z is the solution neighbor of a 1-tight b reached from a vertex w
        //    freed by {x, y} that a does not dominate. If {a, b} improves S,
        //    2-minimality rules out {a} alone dominating the freed set of
        //    {x, y}, so such a w exists and b is one of its neighbors.
        for (int side = 0; side < 2; ++side) {
            const Vertex s = pair[side];
            for (Vertex w : g.neighbors(s)) {
                if (w == a || state.in_solution(w) || state.tightness(w) > 2) {
                    continue;
                }
                if (state.tightness(w) == 2) {
                    state.solution_neighbors(w, other_pair);
                    const Vertex rest = other_pair[0] == s ? other_pair[1] : other_pair[0];
                    if (rest != x && rest != y) {
                        continue;
                    }
                    if (side == 1) {
                        continue; // already visited from x
                    }
                }
                if (g.has_edge(w, a)) {
                    continue;
                }
                for (Vertex b : g.neighbors(w)) {
                    if (state.in_solution(b) || state.tightness(b) != 1) {
                        continue;
                    }
                    Vertex z = 0;
                    state.solution_neighbors(b, std::span<Vertex>(&z, 1));
                    if (propose(z, SwapCase::two_one_linked)) {
                        return found;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool NeighborhoodSearch::local_search(SolutionState& state, int k, const Deadline& deadline) {
    if (k != 2 && k != 3) {
        throw std::invalid_argument("local search order k must be 2 or 3");
    }
    while (true) {
        while (true) {
            if (deadline.expired()) {
                return false;
            }
            const auto move = search_2(state);
            if (!move) {
                break;
            }
            apply_move(state, *move);
            ++stats_.moves_applied;
        }
        if (k == 2) {
            return true;
        }
        if (deadline.expired()) {
            return false;
        }
        const auto move = search_3(state);
        if (!move) {
            return true;
        }
        apply_move(state, *move);
        ++stats_.moves_applied;
    }
}

void apply_move(SolutionState& state, const SwapMove& move) {
    for (Vertex x : move.drop) {
        if (!state.in_solution(x)) {
            throw std::logic_error("stale move: vertex " + std::to_string(x) + " is no longer in the solution");
        }
    }
    for (Vertex x : move.drop) {
        state.drop_vertex(x);
    }
    for (Vertex v : move.add()) {
        state.add_vertex(v);
    }
}

std::optional<SwapMove> search_2(SolutionState& state) {
    NeighborhoodSearch search;
    return search.search_2(state);
}

std::optional<SwapMove> search_3(SolutionState& state) {
    NeighborhoodSearch search;
    return search.search_3(state);
}

bool local_search(SolutionState& state, int k, const Deadline& deadline) {
    NeighborhoodSearch search;
    return search.local_search(state, k, deadline);
}

} // namespace minids
