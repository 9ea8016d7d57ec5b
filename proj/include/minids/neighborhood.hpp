#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minids/solution_state.hpp"

namespace minids {

/// An improving k-swap: drop `drop` (2 or 3 solution vertices), then add
/// `add` (1 or 2 non-solution vertices, fewer than dropped).
struct SwapMove {
    DropSet drop;
    std::array<Vertex, 2> add_vertices{};
    std::size_t add_count = 0;

    std::span<const Vertex> add() const { return {add_vertices.data(), add_count}; }

    friend bool operator==(const SwapMove& a, const SwapMove& b) {
        return a.drop == b.drop && a.add_count == b.add_count &&
               std::equal(a.add().begin(), a.add().end(), b.add().begin());
    }
};

/// Which branch of the 3-swap search produced a move.
enum class SwapCase : std::uint8_t {
    two_swap,          // 2-tight v replaces its two solution neighbors
    single_three,      // 3-tight a replaces its three solution neighbors
    three_with_mate,   // 3-tight a plus a non-adjacent b from the freed set
    two_two,           // third vertex found through a 2-tight vertex sharing one solution neighbor with a
    two_one_linked,    // 2-tight a, 1-tight b reached through a freed vertex not adjacent to a
};

/// Wall-clock cutoff; a default-constructed deadline never expires.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;
    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}
    static Deadline after(double seconds);
    bool expired() const { return at_ && Clock::now() >= *at_; }

private:
    std::optional<Clock::time_point> at_;
};

/// 2- and 3-neighborhood search over a SolutionState. Holds reusable
/// buffers, so one instance should serve a whole run.
class NeighborhoodSearch {
public:
    struct Stats {
        std::uint64_t two_anchors = 0;    // 2-tight vertices examined by the last search_2
        std::uint64_t three_anchors = 0;  // 3-tight vertices examined by the last search_3
        std::uint64_t pair_anchors = 0;   // 2-tight vertices examined by the last search_3
        std::uint64_t moves_applied = 0;  // cumulative, by local_search
    };

    /// First 2-tight v (in T2 order) whose two solution neighbors D satisfy
    /// "v is adjacent to every other vertex of the freed set of D". None
    /// means S is 2-minimal. Throws std::logic_error if S is not maximal.
    std::optional<SwapMove> search_2(SolutionState& state);

    /// Improving 3-swap for a 2-minimal S, or none when S is 3-minimal.
    /// Branches 1 and 2 run over the 3-tight anchors in section order; then,
    /// per 2-tight anchor a on {x, y} in section order, branches 3 and 4
    /// propose a third solution vertex z and the first working partner b is
    /// taken from the freed set of {x, y, z}:
    ///   1. 3-tight a alone dominates its freed set;
    ///   2. 3-tight a plus b, where b is adjacent to every freed vertex that
    ///      a misses;
    ///   3. z comes from a 2-tight vertex sharing exactly one solution
    ///      neighbor with a (this includes 2-tight neighbors of a);
    ///   4. z is the solution neighbor of a 1-tight b reached through a
    ///      vertex w freed by {x, y} but not adjacent to a.
    /// Branch 4 closes the case where the freed set is connected only through
    /// an edge between non-solution vertices; 2-minimality guarantees such a
    /// w exists whenever the pair {a, b} improves S. Each (anchor, z) pair is
    /// checked once, in O(max degree^2).
    /// Throws std::logic_error if S is not maximal.
    std::optional<SwapMove> search_3(SolutionState& state);

    /// Which branch produced the last move returned by search_3/search_2.
    SwapCase last_case() const { return last_case_; }

    /// k = 2: apply search_2 moves until none remains. k = 3: reach
    /// 2-minimality, try search_3, apply and repeat until search_3 finds
    /// nothing. Returns false if the deadline cut the search short (the state
    /// is still a valid maximal independent set).
    bool local_search(SolutionState& state, int k, const Deadline& deadline = {});

    const Stats& stats() const { return stats_; }

private:
    std::optional<Vertex> partner(SolutionState& state, Vertex a, const DropSet& drop, Vertex z);
    void mark_neighbors(const Graph& g, Vertex v);
    void next_epoch();
    void ensure_capacity(std::size_t n);

    std::vector<Vertex> freed_;
    std::vector<Vertex> missed_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> z_seen_;
    std::uint32_t z_epoch_ = 0;
    SwapCase last_case_ = SwapCase::two_swap;
    Stats stats_;
};

/// Drops move.drop then adds move.add. Throws std::logic_error if the move is
/// stale (a dropped vertex left S or an added vertex is not free afterwards).
void apply_move(SolutionState& state, const SwapMove& move);

/// Convenience wrappers using a temporary NeighborhoodSearch.
std::optional<SwapMove> search_2(SolutionState& state);
std::optional<SwapMove> search_3(SolutionState& state);
bool local_search(SolutionState& state, int k, const Deadline& deadline = {});

} // namespace minids
