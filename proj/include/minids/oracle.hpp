#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "minids/graph.hpp"

namespace minids {

/// Brute-force reference implementations for small graphs. Nothing here
/// shares code with SolutionState or the neighborhood searches: graphs are
/// copied into dense adjacency rows first.

/// Largest graph exact_min_ids accepts.
inline constexpr std::size_t exact_vertex_limit = 26;

struct ExactResult {
    std::size_t size = 0;
    std::vector<Vertex> solution; // sorted
};

/// Minimum independent dominating set by branch and bound over bitmasks.
/// Throws std::invalid_argument when n > exact_vertex_limit.
ExactResult exact_min_ids(const Graph& g);

/// Same answer by sweeping every subset; n <= 20. Slow, used to check
/// exact_min_ids.
ExactResult exact_min_ids_sweep(const Graph& g);

/// True iff S is independent and dominating.
bool is_independent_dominating(const Graph& g, std::span<const Vertex> solution);

/// {v not in S : every solution neighbor of v lies in D}, sorted.
std::vector<Vertex> naive_F(const Graph& g, std::span<const Vertex> solution, std::span<const Vertex> drop);

/// An improving k-swap found by exhaustive search: drop exactly k members of
/// S and add an independent A inside F(D) with |A| < k that dominates D and
/// the rest of F(D).
struct ExhaustiveSwap {
    std::vector<Vertex> drop;
    std::vector<Vertex> add;
};

/// First improving k-swap in lexicographic order of D, or an empty drop list
/// if none exists.
ExhaustiveSwap find_improving_swap(const Graph& g, std::span<const Vertex> solution, int k);

/// True iff S (a maximal independent set) admits no improving k-swap.
/// Vacuously true when |S| < k.
bool certify_k_minimal(const Graph& g, std::span<const Vertex> solution, int k);

/// Every exchange (x in S, v not in S) such that (S \ {x}) + v is again a
/// maximal independent set, sorted by (x, v).
std::vector<std::pair<Vertex, Vertex>> naive_plateau(const Graph& g, std::span<const Vertex> solution);

} // namespace minids
