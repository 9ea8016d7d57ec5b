#include "minids/solution_state.hpp"

#include <algorithm>
#include <sstream>

#include "minids/rng.hpp"

namespace minids {

DropSet::DropSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) {
        push(v);
    }
}

void DropSet::push(Vertex v) {
    if (size_ == items_.size()) {
        throw std::invalid_argument("drop set holds at most 3 vertices");
    }
    if (contains(v)) {
        throw std::invalid_argument("drop set members must be distinct");
    }
    items_[size_++] = v;
}

bool DropSet::contains(Vertex v) const {
    return std::find(begin(), end(), v) != end();
}

SolutionState::SolutionState(const Graph& graph)
    : graph_(&graph),
      order_(graph.num_vertices()),
      position_(graph.num_vertices()),
      tau_(graph.num_vertices(), 0),
      counter_(graph.num_vertices(), 0),
      chi_(graph.num_vertices(), 0) {
    const std::size_t n = graph.num_vertices();
    for (std::size_t i = 0; i < n; ++i) {
        order_[i] = static_cast<Vertex>(i);
        position_[i] = static_cast<std::uint32_t>(i);
    }
    begin_ = {0, 0, n, n, n, n};
}

std::size_t SolutionState::section_index(Vertex v) const {
    if (in_solution(v)) {
        return 0;
    }
    return 1 + std::min<std::uint32_t>(tau_[v], 3);
}

Section SolutionState::section_of(Vertex v) const {
    return static_cast<Section>(section_index(v));
}

std::span<const Vertex> SolutionState::section(Section s) const {
    const auto i = static_cast<std::size_t>(s);
    return {order_.data() + begin_[i], order_.data() + begin_[i + 1]};
}

std::vector<Vertex> SolutionState::sorted_solution() const {
    std::vector<Vertex> out(solution().begin(), solution().end());
    std::sort(out.begin(), out.end());
    return out;
}

void SolutionState::swap_positions(std::size_t i, std::size_t j) {
    const Vertex a = order_[i];
    const Vertex b = order_[j];
    order_[i] = b;
    order_[j] = a;
    position_[b] = static_cast<std::uint32_t>(i);
    position_[a] = static_cast<std::uint32_t>(j);
}

// Moves v from section s to section s + 1: swap it to the last slot of s,
// then pull the boundary one step left.
void SolutionState::shift_right(Vertex v, std::size_t from) {
    swap_positions(position_[v], begin_[from + 1] - 1);
    --begin_[from + 1];
    ++relocations_;
}

// Moves v from section s to section s - 1.
void SolutionState::shift_left(Vertex v, std::size_t from) {
    swap_positions(position_[v], begin_[from]);
    ++begin_[from];
    ++relocations_;
}

void SolutionState::add_vertex(Vertex v) {
    if (in_solution(v)) {
        throw std::logic_error("add_vertex: vertex " + std::to_string(v) + " is already in the solution");
    }
    if (tau_[v] != 0) {
        throw std::logic_error("add_vertex: vertex " + std::to_string(v) +
                               " has a neighbor in the solution");
    }
    shift_left(v, 1);
    for (Vertex u : graph_->neighbors(v)) {
        const std::uint32_t old = tau_[u]++;
        if (old < 3) {
            shift_right(u, 1 + old);
        }
    }
}

void SolutionState::drop_vertex(Vertex x) {
    if (!in_solution(x)) {
        throw std::logic_error("drop_vertex: vertex " + std::to_string(x) + " is not in the solution");
    }
    // x has no solution neighbor (S is independent), so it lands in T0.
    shift_right(x, 0);
    for (Vertex u : graph_->neighbors(x)) {
        const std::uint32_t old = tau_[u]--;
        if (old <= 3) {
            shift_left(u, 1 + old);
        }
    }
}

std::optional<Vertex> SolutionState::pick_free() const {
    if (begin_[1] == begin_[2]) {
        return std::nullopt;
    }
    return order_[begin_[1]];
}

void SolutionState::greedy_max_degree() {
    // Degrees are fixed and adding only raises tightness, so scanning the
    // current free vertices once in (degree desc, id asc) order and keeping
    // those still free is the same as repeatedly taking the best free vertex.
    std::vector<Vertex> candidates(section(Section::free).begin(), section(Section::free).end());
    std::sort(candidates.begin(), candidates.end(), [this](Vertex a, Vertex b) {
        const auto da = graph_->degree(a);
        const auto db = graph_->degree(b);
        return da != db ? da > db : a < b;
    });
    for (Vertex v : candidates) {
        if (!in_solution(v) && tau_[v] == 0) {
            add_vertex(v);
        }
    }
}

void SolutionState::random_fill(Rng& rng) {
    while (begin_[2] > begin_[1]) {
        const std::size_t free_count = begin_[2] - begin_[1];
        add_vertex(order_[begin_[1] + rng.below(free_count)]);
    }
}

void SolutionState::clear() {
    while (size() > 0) {
        drop_vertex(order_[0]);
    }
}

void SolutionState::assign(std::span<const Vertex> target) {
    for (Vertex t : target) {
        chi_[t] = gamma_;
    }
    scratch_freed_.clear();
    for (Vertex x : solution()) {
        if (chi_[x] != gamma_) {
            scratch_freed_.push_back(x);
        }
    }
    bump_stamp();
    for (Vertex x : scratch_freed_) {
        drop_vertex(x);
    }
    for (Vertex t : target) {
        if (!in_solution(t)) {
            add_vertex(t);
        }
    }
}

std::size_t SolutionState::solution_neighbors(Vertex v, std::span<Vertex> out) const {
    const std::uint32_t want = tau_[v];
    std::size_t found = 0;
    for (Vertex u : graph_->neighbors(v)) {
        if (found == want) {
            break;
        }
        if (in_solution(u)) {
            if (found < out.size()) {
                out[found] = u;
            }
            ++found;
        }
    }
    return found;
}

std::vector<Vertex> SolutionState::solution_neighbors(Vertex v) const {
    std::vector<Vertex> out(tau_[v]);
    solution_neighbors(v, out);
    return out;
}

void SolutionState::collect_freed(const DropSet& drop, std::vector<Vertex>& out) {
    out.clear();
    for (Vertex x : drop) {
        if (!in_solution(x)) {
            throw std::logic_error("drop set member " + std::to_string(x) + " is not in the solution");
        }
    }
    for (Vertex x : drop) {
        for (Vertex u : graph_->neighbors(x)) {
            counter_[u] = 0;
        }
    }
    for (Vertex x : drop) {
        for (Vertex u : graph_->neighbors(x)) {
            if (++counter_[u] == tau_[u]) {
                out.push_back(u);
            }
        }
    }
}

std::vector<Vertex> SolutionState::collect_freed(const DropSet& drop) {
    std::vector<Vertex> out;
    collect_freed(drop, out);
    return out;
}

bool SolutionState::adjacent_to_all_freed(Vertex v, const DropSet& drop, std::vector<Vertex>& freed) {
    if (in_solution(v) || tau_[v] == 0) {
        throw std::logic_error("adjacent_to_all_freed: vertex " + std::to_string(v) +
                               " is not in the freed set");
    }
    const auto nbrs = graph_->neighbors(v);
    counter_[v] = 0;
    for (Vertex u : nbrs) {
        counter_[u] = 0;
    }
    collect_freed(drop, freed);
    if (counter_[v] != tau_[v]) {
        throw std::logic_error("adjacent_to_all_freed: vertex " + std::to_string(v) +
                               " is not in the freed set");
    }
    const auto k = static_cast<std::uint32_t>(drop.size());
    std::size_t adjacent = 0;
    for (Vertex u : nbrs) {
        const std::uint32_t t = tau_[u];
        if (t >= 1 && t <= k && counter_[u] == t) {
            ++adjacent;
        }
    }
    return adjacent + 1 == freed.size();
}

bool SolutionState::adjacent_to_all_freed(Vertex v, const DropSet& drop) {
    return adjacent_to_all_freed(v, drop, scratch_freed_);
}

void SolutionState::bump_stamp() {
    if (++gamma_ >= stamp_limit) {
        std::fill(chi_.begin(), chi_.end(), 0);
        gamma_ = 1;
    }
}

bool SolutionState::adjacent_to_all(Vertex v, std::span<const Vertex> set) {
    bool member = false;
    for (Vertex u : set) {
        chi_[u] = gamma_;
        member = member || u == v;
    }
    std::size_t adjacent = 0;
    if (member) {
        for (Vertex u : graph_->neighbors(v)) {
            if (chi_[u] == gamma_) {
                ++adjacent;
            }
        }
    }
    bump_stamp();
    if (!member) {
        throw std::logic_error("adjacent_to_all: vertex " + std::to_string(v) + " is not in the set");
    }
    return adjacent + 1 == set.size();
}

std::vector<std::string> SolutionState::validate() const {
    std::vector<std::string> issues;
    const std::size_t n = order_.size();
    const auto report = [&issues](auto&&... parts) {
        std::ostringstream s;
        (s << ... << parts);
        issues.push_back(s.str());
    };
    if (begin_[0] != 0 || begin_[5] != n) {
        report("section boundaries do not span [0, n)");
    }
    for (std::size_t s = 0; s < 5; ++s) {
        if (begin_[s] > begin_[s + 1]) {
            report("section boundaries not monotone at ", s);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (order_[i] >= n || position_[order_[i]] != i) {
            report("order/position mismatch at index ", i);
        }
    }
    if (!issues.empty()) {
        return issues;
    }
    const auto member = [this](Vertex v) { return position_[v] < begin_[1]; };
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t count = 0;
        for (Vertex u : graph_->neighbors(v)) {
            if (member(u)) {
                ++count;
            }
        }
        if (tau_[v] != count) {
            report("vertex ", v, ": stored tightness ", tau_[v], " but recomputed ", count);
        }
        std::size_t placed = 0;
        while (placed < 5 && !(position_[v] >= begin_[placed] && position_[v] < begin_[placed + 1])) {
            ++placed;
        }
        if (member(v)) {
            if (count != 0) {
                report("solution vertex ", v, " has ", count, " solution neighbors");
            }
        } else {
            const std::size_t expected = 1 + std::min<std::uint32_t>(count, 3);
            if (placed != expected) {
                report("vertex ", v, " sits in section ", placed, " but tightness ", count,
                       " requires section ", expected);
            }
        }
    }
    return issues;
}

} // namespace minids
