#include "minids/ilps.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "minids/neighborhood.hpp"
#include "minids/plateau.hpp"

namespace minids {

void update_penalty(PenaltyState& penalty, std::span<const Vertex> solution) {
    for (Vertex v : solution) {
        ++penalty.rho[v];
    }
    ++penalty.iteration;
    if (penalty.iteration % penalty.delay == 0) {
        for (auto& r : penalty.rho) {
            r = std::min(r, penalty.delay) / 2;
        }
    }
}

std::string to_string(InitMode mode) {
    return mode == InitMode::greedy ? "greedy" : "random";
}

InitMode parse_init_mode(const std::string& text) {
    if (text == "greedy") {
        return InitMode::greedy;
    }
    if (text == "random") {
        return InitMode::random;
    }
    throw std::invalid_argument("init must be 'greedy' or 'random', got '" + text + "'");
}

void IlpsConfig::validate() const {
    if (k != 2 && k != 3) {
        throw std::invalid_argument("k must be 2 or 3");
    }
    if (delta == 0) {
        throw std::invalid_argument("delta must be positive");
    }
    if (nu == 0) {
        throw std::invalid_argument("nu must be positive");
    }
    if (!time_limit && !max_iterations) {
        throw std::invalid_argument("set a time limit, an iteration cap, or both");
    }
    if (time_limit && !(*time_limit >= 0.0)) {
        throw std::invalid_argument("time limit must be non-negative");
    }
}

namespace {

std::uint32_t next_epoch(KickScratch& s) {
    if (++s.epoch == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(s.mark.begin(), s.mark.end(), 0);
        s.epoch = 1;
    }
    return s.epoch;
}

void pool_remove(KickScratch& s, Vertex v) {
    const std::uint32_t i = s.pool_pos[v];
    if (i == std::numeric_limits<std::uint32_t>::max()) {
        return;
    }
    const Vertex last = s.pool.back();
    s.pool[i] = last;
    s.pool_pos[last] = i;
    s.pool.pop_back();
    s.pool_pos[v] = std::numeric_limits<std::uint32_t>::max();
}

Vertex pick_lowest(const std::vector<Vertex>& candidates, const PenaltyState& penalty, Rng& rng,
                   std::vector<Vertex>& ties) {
    std::uint32_t lowest = std::numeric_limits<std::uint32_t>::max();
    ties.clear();
    for (Vertex v : candidates) {
        const std::uint32_t r = penalty.rho[v];
        if (r < lowest) {
            lowest = r;
            ties.clear();
        }
        if (r == lowest) {
            ties.push_back(v);
        }
    }
    return ties[rng.below(ties.size())];
}

} // namespace

std::vector<Vertex> kick(SolutionState& state, std::span<const Vertex> best, const PenaltyState& penalty,
                         std::uint32_t nu, Rng& rng, KickScratch& s) {
    const Graph& g = state.graph();
    const std::size_t n = g.num_vertices();
    if (s.mark.size() != n) {
        s.mark.assign(n, 0);
        s.epoch = 0;
        s.pool_pos.assign(n, std::numeric_limits<std::uint32_t>::max());
    }
    state.assign(best);

    const std::uint32_t in_best = next_epoch(s);
    for (Vertex v : best) {
        s.mark[v] = in_best;
    }
    s.pool.clear();
    for (Vertex v = 0; v < n; ++v) {
        if (s.mark[v] != in_best) {
            s.pool_pos[v] = static_cast<std::uint32_t>(s.pool.size());
            s.pool.push_back(v);
        }
    }
    std::vector<Vertex> forced;
    if (s.pool.empty()) {
        return forced;
    }

    Vertex r = pick_lowest(s.pool, penalty, rng, s.ties);
    while (true) {
        forced.push_back(r);
        pool_remove(s, r);
        for (Vertex u : g.neighbors(r)) {
            pool_remove(s, u);
        }
        if (rng.below(nu) == 0 || s.pool.empty()) {
            break;
        }
        // sample up to three pool members without replacement
        const std::size_t take = std::min<std::size_t>(3, s.pool.size());
        s.picked.clear();
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t remaining = s.pool.size() - i;
            const std::size_t j = rng.below(remaining);
            const std::size_t slot = remaining - 1;
            std::swap(s.pool[j], s.pool[slot]);
            s.pool_pos[s.pool[j]] = static_cast<std::uint32_t>(j);
            s.pool_pos[s.pool[slot]] = static_cast<std::uint32_t>(slot);
            s.picked.push_back(s.pool[slot]);
        }
        r = pick_lowest(s.picked, penalty, rng, s.ties);
    }
    for (Vertex v : forced) {
        for (Vertex u : g.neighbors(v)) {
            if (state.in_solution(u)) {
                state.drop_vertex(u);
            }
        }
        state.add_vertex(v);
    }
    for (Vertex v : forced) {
        s.pool_pos[v] = std::numeric_limits<std::uint32_t>::max();
    }
    for (Vertex v : s.pool) {
        s.pool_pos[v] = std::numeric_limits<std::uint32_t>::max();
    }
    state.greedy_max_degree();
    return forced;
}

RunResult ilps(const Graph& g, const IlpsConfig& config, const IlpsHooks& hooks) {
    config.validate();
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const auto elapsed = [start] { return std::chrono::duration<double>(Clock::now() - start).count(); };
    const Deadline deadline = config.time_limit ? Deadline::after(*config.time_limit) : Deadline{};

    Rng rng(config.seed);
    SolutionState state(g);
    if (config.init == InitMode::greedy) {
        state.greedy_max_degree();
    } else {
        state.random_fill(rng);
    }

    RunResult result;
    result.seed = config.seed;
    result.initial_size = state.size();
    std::vector<Vertex> best(state.solution().begin(), state.solution().end());
    result.best_size = best.size();
    result.time_to_best = elapsed();

    PenaltyState penalty(g.num_vertices(), config.delta);
    update_penalty(penalty, state.solution());

    NeighborhoodSearch search;
    KickScratch scratch;
    bool stop = hooks.initial && hooks.initial(1, state.solution());
    const auto reached_target = [&] { return config.target_size && result.best_size <= *config.target_size; };

    while (!stop && !reached_target()) {
        if (config.max_iterations && result.iterations >= *config.max_iterations) {
            break;
        }
        if (deadline.expired()) {
            break;
        }
        search.local_search(state, config.k, deadline);
        IterationRecord record;
        record.after_local_search = state.size();
        const bool gated = config.k == 3 && config.plateau_gate &&
                           state.size() > result.best_size + *config.plateau_gate;
        if (!gated) {
            plateau_search(state, config.k, search, deadline);
        }
        record.after_plateau = state.size();
        if (state.size() <= result.best_size) {
            if (state.size() < result.best_size) {
                result.time_to_best = elapsed();
            }
            best.assign(state.solution().begin(), state.solution().end());
            result.best_size = best.size();
        }
        ++result.iterations;
        record.iteration = result.iterations;
        record.best_size = result.best_size;
        record.elapsed = elapsed();
        if (hooks.iteration && hooks.iteration(record)) {
            break;
        }
        if (reached_target()) {
            break;
        }
        kick(state, best, penalty, config.nu, rng, scratch);
        update_penalty(penalty, state.solution());
        stop = hooks.initial && hooks.initial(result.iterations + 1, state.solution());
    }
    std::sort(best.begin(), best.end());
    result.best_solution = std::move(best);
    return result;
}

} // namespace minids
