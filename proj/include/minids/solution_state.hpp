#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minids/graph.hpp"

namespace minids {

class Rng;

/// The five sections of the vertex ordering, left to right.
enum class Section : std::uint8_t { solution = 0, free = 1, one_tight = 2, two_tight = 3, three_plus = 4 };

/// 1 to 3 distinct solution vertices proposed for removal.
class DropSet {
public:
    DropSet() = default;
    DropSet(std::initializer_list<Vertex> vertices);

    void push(Vertex v);
    std::size_t size() const { return size_; }
    bool contains(Vertex v) const;
    std::span<const Vertex> vertices() const { return {items_.data(), size_}; }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.begin() + size_; }

    friend bool operator==(const DropSet& a, const DropSet& b) {
        return a.vertices().size() == b.vertices().size() &&
               std::equal(a.begin(), a.end(), b.begin());
    }

private:
    std::array<Vertex, 3> items_{};
    std::size_t size_ = 0;
};

/// Incremental independent-set structure.
///
/// All vertices live in one permutation `order` split into five contiguous
/// sections: S | T0 | T1 | T2 | T>=3, where Tt holds non-solution vertices
/// with exactly t solution neighbors (T>=3 pools everything from 3 up).
/// Tightness is kept for every vertex, so moving a vertex across a section
/// boundary is one swap plus one boundary shift. Adding or dropping v costs
/// O(deg(v)).
///
/// The scratch counters used by the freed-set primitives live here as well,
/// so those primitives never allocate.
class SolutionState {
public:
    explicit SolutionState(const Graph& graph);

    const Graph& graph() const { return *graph_; }
    std::size_t num_vertices() const { return order_.size(); }

    bool in_solution(Vertex v) const { return position_[v] < begin_[1]; }
    std::uint32_t tightness(Vertex v) const { return tau_[v]; }
    std::size_t position(Vertex v) const { return position_[v]; }
    Section section_of(Vertex v) const;

    std::span<const Vertex> section(Section s) const;
    std::size_t section_size(Section s) const { return section(s).size(); }
    std::span<const Vertex> solution() const { return section(Section::solution); }
    std::size_t size() const { return begin_[1]; }
    std::vector<Vertex> sorted_solution() const;
    std::span<const Vertex> order() const { return order_; }

    /// True iff T0 is empty, i.e. S is a maximal independent set.
    bool is_maximal() const { return begin_[1] == begin_[2]; }

    /// Moves a free vertex into S. Throws std::logic_error if v is already in
    /// S or has a neighbor in S.
    void add_vertex(Vertex v);

    /// Moves x out of S. Throws std::logic_error if x is not in S.
    void drop_vertex(Vertex x);

    /// First vertex of T0 in the current order, if any.
    std::optional<Vertex> pick_free() const;

    /// Adds free vertices, largest degree first (ties: smaller id), until S
    /// is maximal.
    void greedy_max_degree();

    /// Adds uniformly random free vertices until S is maximal.
    void random_fill(Rng& rng);

    /// Drops everything.
    void clear();

    /// Makes S equal to `target` (an independent set) by dropping S \ target
    /// and then adding target \ S. Throws std::logic_error if target is not
    /// independent. Cost is proportional to the degrees of the differing
    /// vertices plus |target|.
    void assign(std::span<const Vertex> target);

    /// The t = tightness(v) members of S adjacent to a non-solution vertex v,
    /// written to out in neighbor-list order. Returns t.
    std::size_t solution_neighbors(Vertex v, std::span<Vertex> out) const;
    std::vector<Vertex> solution_neighbors(Vertex v) const;

    /// The freed set of D: non-solution vertices whose solution neighbors all
    /// lie in D (members of D are not reported). Two passes over N(D) with the
    /// per-vertex counter c: reset, then count; u is reported when its count
    /// reaches its tightness. O(|D| * max degree). `out` is cleared first.
    /// Throws std::logic_error if some member of D is not in S.
    void collect_freed(const DropSet& drop, std::vector<Vertex>& out);
    std::vector<Vertex> collect_freed(const DropSet& drop);

    /// Whether v (a member of the freed set of D) is adjacent to every other
    /// member of that set. Resets c on N(v), runs collect_freed, then counts
    /// neighbors u with 1 <= tightness(u) <= |D| and c(u) == tightness(u).
    /// The freed set is left in `freed`. Throws std::logic_error if v is not
    /// in the freed set of D.
    bool adjacent_to_all_freed(Vertex v, const DropSet& drop, std::vector<Vertex>& freed);
    bool adjacent_to_all_freed(Vertex v, const DropSet& drop);

    /// Whether v is adjacent to every member of `set` other than itself, in
    /// O(|set| + deg(v)), using the stamp array chi and the global stamp
    /// gamma. Throws std::logic_error if v is not a member of `set`.
    bool adjacent_to_all(Vertex v, std::span<const Vertex> set);

    /// Recomputes tightness, section placement, permutation consistency and
    /// independence from scratch. Empty result means consistent.
    std::vector<std::string> validate() const;

    /// Section relocations performed so far (instrumentation).
    std::uint64_t relocations() const { return relocations_; }

    std::uint32_t stamp() const { return gamma_; }
    /// Test hook: jump gamma close to its reset threshold.
    void set_stamp_for_testing(std::uint32_t gamma) { gamma_ = gamma; }
    static constexpr std::uint32_t stamp_limit = 0xFFFFFFFFu - 1;

private:
    std::size_t section_index(Vertex v) const;
    void shift_right(Vertex v, std::size_t from);
    void shift_left(Vertex v, std::size_t from);
    void swap_positions(std::size_t i, std::size_t j);
    void bump_stamp();

    const Graph* graph_;
    std::vector<Vertex> order_;
    std::vector<std::uint32_t> position_;
    std::vector<std::uint32_t> tau_;
    // begin_[s] = first index of section s; begin_[0] = 0, begin_[5] = n.
    std::array<std::size_t, 6> begin_{};

    std::vector<std::uint32_t> counter_;
    std::vector<std::uint32_t> chi_;
    std::uint32_t gamma_ = 1;

    std::vector<Vertex> scratch_freed_;
    std::uint64_t relocations_ = 0;
};

} // namespace minids
