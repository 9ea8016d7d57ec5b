#include "minids/plateau.hpp"

#include <stdexcept>

namespace minids {

namespace {

Vertex only_solution_neighbor(const SolutionState& state, Vertex v) {
    Vertex x = 0;
    state.solution_neighbors(v, std::span<Vertex>(&x, 1));
    return x;
}

} // namespace

std::vector<PlateauMove> enumerate_plateau_moves(SolutionState& state) {
    if (!state.is_maximal()) {
        throw std::logic_error("plateau enumeration needs a maximal independent set");
    }
    std::vector<PlateauMove> moves;
    std::vector<Vertex> freed;
    for (Vertex v : state.section(Section::one_tight)) {
        const Vertex x = only_solution_neighbor(state, v);
        if (state.adjacent_to_all_freed(v, DropSet{x}, freed)) {
            moves.push_back({x, v});
        }
    }
    return moves;
}

bool plateau_search(SolutionState& state, int k, NeighborhoodSearch& search, const Deadline& deadline) {
    std::vector<Vertex> freed;
    bool restart = true;
    while (restart) {
        restart = false;
        const auto moves = enumerate_plateau_moves(state);
        for (const auto& [x, v] : moves) {
            if (deadline.expired()) {
                return false;
            }
            // the list is a snapshot; skip pairs that no longer qualify
            if (!state.in_solution(x) || state.in_solution(v) || state.tightness(v) != 1 ||
                only_solution_neighbor(state, v) != x || !state.adjacent_to_all_freed(v, DropSet{x}, freed)) {
                continue;
            }
            const std::size_t entry = state.size();
            state.drop_vertex(x);
            state.add_vertex(v);
            const bool finished = search.local_search(state, k, deadline);
            if (state.size() < entry) {
                restart = finished;
                if (!finished) {
                    return false;
                }
                break;
            }
            // Same size means local search applied nothing.
            state.drop_vertex(v);
            state.add_vertex(x);
            if (!finished) {
                return false;
            }
        }
    }
    return true;
}

bool plateau_search(SolutionState& state, int k, const Deadline& deadline) {
    NeighborhoodSearch search;
    return plateau_search(state, k, search, deadline);
}

} // namespace minids
