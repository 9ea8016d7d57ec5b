#include <chrono>

#include "doctest.h"
#include "helpers.hpp"
#include "minids/generators.hpp"
#include "minids/ilps.hpp"
#include "minids/oracle.hpp"

using namespace minids;
using namespace minids::test;

TEST_CASE("update_penalty increments members") {
    PenaltyState p(3, 4);
    const std::vector<Vertex> s{0};
    update_penalty(p, s);
    CHECK(p.rho == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(p.iteration == 1);
}

TEST_CASE("update_penalty with delay 1 halves every call") {
    PenaltyState p(2, 1);
    const std::vector<Vertex> s{0};
    update_penalty(p, s);
    CHECK(p.rho[0] == 0);
}

TEST_CASE("update_penalty trace with delay 4") {
    PenaltyState p(2, 4);
    const std::vector<Vertex> s{0};
    std::vector<std::uint32_t> trace;
    for (int i = 0; i < 6; ++i) {
        update_penalty(p, s);
        trace.push_back(p.rho[0]);
    }
    CHECK(trace == std::vector<std::uint32_t>{1, 2, 3, 2, 3, 4});
}

TEST_CASE("penalties stay below delay/2 right after halving") {
    PenaltyState p(5, 6);
    const std::vector<Vertex> s{0, 2, 4};
    for (int i = 1; i <= 60; ++i) {
        update_penalty(p, s);
        if (i % 6 == 0) {
            for (auto r : p.rho) {
                CHECK(r <= 3);
            }
        }
    }
}

TEST_CASE("kick on the star forces a leaf") {
    const Graph g = star(3);
    SolutionState st(g);
    PenaltyState p(4, 4);
    Rng rng(1);
    KickScratch scratch;
    const std::vector<Vertex> best{0};
    const auto forced = kick(st, best, p, 1, rng, scratch);
    CHECK(forced.size() == 1);
    CHECK(forced[0] != 0);
    CHECK(st.sorted_solution() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("kick prefers low penalties in the first trial") {
    const Graph g = star(3);
    SolutionState st(g);
    PenaltyState p(4, 4);
    p.rho = {0, 5, 0, 5};
    Rng rng(3);
    KickScratch scratch;
    const std::vector<Vertex> best{0};
    for (int i = 0; i < 20; ++i) {
        const auto forced = kick(st, best, p, 1, rng, scratch);
        CHECK(forced == std::vector<Vertex>{2});
    }
}

TEST_CASE("kick with an empty complement returns the incumbent") {
    const Graph g = Graph::from_edges(3, {});
    SolutionState st(g);
    PenaltyState p(3, 2);
    Rng rng(1);
    KickScratch scratch;
    const std::vector<Vertex> best{0, 1, 2};
    CHECK(kick(st, best, p, 3, rng, scratch).empty());
    CHECK(st.sorted_solution() == best);
}

TEST_CASE("kick forces nu vertices on average") {
    const Graph g = gen_grid(100, 100);
    SolutionState st(g);
    st.greedy_max_degree();
    const std::vector<Vertex> best(st.solution().begin(), st.solution().end());
    PenaltyState p(g.num_vertices(), 8);
    Rng rng(17);
    KickScratch scratch;
    double total = 0;
    const int kicks = 10000;
    for (int i = 0; i < kicks; ++i) {
        const auto forced = kick(st, best, p, 3, rng, scratch);
        total += static_cast<double>(forced.size());
        for (std::size_t a = 0; a < forced.size(); ++a) {
            for (std::size_t b = a + 1; b < forced.size(); ++b) {
                REQUIRE_FALSE(g.has_edge(forced[a], forced[b]));
            }
        }
    }
    const double mean = total / kicks;
    CHECK(mean >= 2.8);
    CHECK(mean <= 3.2);
    CHECK(st.validate().empty());
    CHECK(st.is_maximal());
}

TEST_CASE("config validation") {
    IlpsConfig c;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument); // no stop condition
    c.max_iterations = 10;
    CHECK_NOTHROW(c.validate());
    c.k = 4;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.k = 3;
    c.nu = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.nu = 1;
    c.delta = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK(parse_init_mode("random") == InitMode::random);
    CHECK_THROWS_AS(parse_init_mode("best"), std::invalid_argument);
}

TEST_CASE("ilps on a large star finds the center") {
    const Graph g = star(50);
    IlpsConfig c;
    c.max_iterations = 3;
    c.delta = 4;
    c.nu = 3;
    const auto r = ilps(g, c);
    CHECK(r.best_size == 1);
    CHECK(r.best_solution == std::vector<Vertex>{0});
    CHECK(r.iterations == 3);
}

TEST_CASE("ilps reaches the grid optimum") {
    const Graph g = gen_grid(10, 10);
    IlpsConfig c;
    c.k = 2;
    c.delta = 40;
    c.nu = 1;
    c.max_iterations = 5000;
    c.seed = 7;
    c.target_size = 24;
    const auto r = ilps(g, c);
    CHECK(r.best_size == 24);
    CHECK(is_independent_dominating(g, r.best_solution));
}

TEST_CASE("ilps is deterministic per seed") {
    const Graph g = gen_random(120, 0.08, 4);
    IlpsConfig c;
    c.k = 3;
    c.delta = 8;
    c.nu = 3;
    c.max_iterations = 200;
    c.seed = 11;
    c.init = InitMode::random;
    std::vector<IterationRecord> first;
    std::vector<IterationRecord> second;
    IlpsHooks h1;
    h1.iteration = [&](const IterationRecord& r) { first.push_back(r); return false; };
    IlpsHooks h2;
    h2.iteration = [&](const IterationRecord& r) { second.push_back(r); return false; };
    const auto a = ilps(g, c, h1);
    const auto b = ilps(g, c, h2);
    CHECK(a.best_solution == b.best_solution);
    CHECK(a.iterations == b.iterations);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].after_local_search == second[i].after_local_search);
        CHECK(first[i].after_plateau == second[i].after_plateau);
        CHECK(first[i].best_size == second[i].best_size);
    }
}

TEST_CASE("ilps incumbent never grows and stays valid") {
    const Graph g = gen_random(80, 0.1, 21);
    IlpsConfig c;
    c.k = 3;
    c.delta = 4;
    c.nu = 2;
    c.max_iterations = 150;
    c.plateau_gate = 2;
    std::size_t last = g.num_vertices() + 1;
    IlpsHooks hooks;
    hooks.iteration = [&](const IterationRecord& r) {
        CHECK(r.best_size <= last);
        CHECK(r.after_plateau <= r.after_local_search);
        last = r.best_size;
        return false;
    };
    std::uint64_t initials = 0;
    hooks.initial = [&](std::uint64_t it, std::span<const Vertex> s) {
        CHECK(it == ++initials);
        CHECK(is_independent_dominating(g, s));
        return false;
    };
    const auto r = ilps(g, c, hooks);
    CHECK(r.best_size == last);
    CHECK(r.best_size <= r.initial_size);
    CHECK(is_independent_dominating(g, r.best_solution));
    CHECK(r.time_to_best >= 0.0);
}

TEST_CASE("ilps honours a time limit") {
    const Graph g = gen_random(300, 0.05, 2);
    IlpsConfig c;
    c.time_limit = 0.2;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = ilps(g, c);
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(took < 1.5);
    CHECK(r.iterations > 0);
    CHECK(is_independent_dominating(g, r.best_solution));
}

TEST_CASE("ilps matches the exact optimum on small graphs") {
    Rng rng(12);
    int hits = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = gen_random(6 + rng.below(9), 0.2 + 0.6 * rng.unit(), rng.next());
        IlpsConfig c;
        c.k = 3;
        c.delta = 8;
        c.nu = 3;
        c.max_iterations = 2000;
        c.seed = static_cast<std::uint64_t>(trial);
        const auto exact = exact_min_ids(g);
        c.target_size = exact.size;
        const auto r = ilps(g, c);
        CHECK(is_independent_dominating(g, r.best_solution));
        hits += r.best_size == exact.size ? 1 : 0;
    }
    CHECK(hits == 30);
}
