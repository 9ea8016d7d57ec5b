#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minids/graph.hpp"
#include "minids/rng.hpp"
#include "minids/solution_state.hpp"

namespace minids {

/// Per-vertex penalties steering the kick away from vertices that keep
/// showing up in initial solutions.
struct PenaltyState {
    std::vector<std::uint32_t> rho;
    std::uint32_t delay = 1;      // halving period, in iterations
    std::uint64_t iteration = 0;  // number of update_penalty calls so far

    PenaltyState() = default;
    PenaltyState(std::size_t n, std::uint32_t delay) : rho(n, 0), delay(delay) {}
};

/// rho(v) += 1 for v in S; then, once every `delay` calls,
/// rho(v) = floor(min(rho(v), delay) / 2) for all v.
void update_penalty(PenaltyState& penalty, std::span<const Vertex> solution);

enum class InitMode { greedy, random };

std::string to_string(InitMode mode);
InitMode parse_init_mode(const std::string& text);

struct IlpsConfig {
    int k = 2;
    std::uint32_t delta = 1;
    std::uint32_t nu = 1;
    std::optional<double> time_limit;             // seconds
    std::optional<std::uint64_t> max_iterations;
    std::uint64_t seed = 1;
    InitMode init = InitMode::greedy;
    std::optional<std::size_t> plateau_gate;      // k = 3 only: plateau when |S| <= |S*| + gate
    std::optional<std::size_t> target_size;       // stop once |S*| <= target

    /// Throws std::invalid_argument on k not in {2,3}, delta or nu of 0, or
    /// neither time limit nor iteration cap.
    void validate() const;
};

struct RunResult {
    std::vector<Vertex> best_solution; // sorted
    std::size_t best_size = 0;
    std::size_t initial_size = 0;
    double time_to_best = 0.0;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
};

struct IterationRecord {
    std::uint64_t iteration = 0; // 1-based
    std::size_t after_local_search = 0;
    std::size_t after_plateau = 0;
    std::size_t best_size = 0;
    double elapsed = 0.0;
};

/// Optional instrumentation. Either callback may return true to stop the
/// run early. `initial` sees the starting solution of every iteration
/// (the constructed one, then each kick result).
struct IlpsHooks {
    std::function<bool(std::uint64_t iteration, std::span<const Vertex> solution)> initial;
    std::function<bool(const IterationRecord&)> iteration;
};

/// Reusable buffers for kick().
struct KickScratch {
    std::vector<std::uint32_t> mark;
    std::uint32_t epoch = 0;
    std::vector<Vertex> pool;
    std::vector<std::uint32_t> pool_pos;
    std::vector<Vertex> picked;
    std::vector<Vertex> ties;
};

/// Replaces state with a perturbation of `best`: force in a set R of
/// low-penalty non-solution vertices (one, then each further trial with
/// probability (nu-1)/nu), drop their solution neighbors, and refill
/// greedily. Returns R.
std::vector<Vertex> kick(SolutionState& state, std::span<const Vertex> best, const PenaltyState& penalty,
                         std::uint32_t nu, Rng& rng, KickScratch& scratch);

/// Iterated local search with plateau moves and penalty-guided kicks.
RunResult ilps(const Graph& g, const IlpsConfig& config, const IlpsHooks& hooks = {});

} // namespace minids
