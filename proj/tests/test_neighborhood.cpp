#include "doctest.h"
#include "helpers.hpp"
#include "minids/generators.hpp"
#include "minids/neighborhood.hpp"
#include "minids/oracle.hpp"
#include "minids/rng.hpp"

using namespace minids;
using namespace minids::test;

namespace {

std::vector<Vertex> members(const SolutionState& st) { return st.sorted_solution(); }

void apply_checked(SolutionState& st, const SwapMove& move) {
    const std::size_t before = st.size();
    apply_move(st, move);
    CHECK(st.size() == before - move.drop.size() + move.add().size());
    CHECK(st.size() < before);
    CHECK(st.is_maximal());
    CHECK(st.validate().empty());
}

} // namespace

TEST_CASE("search_2 on P4 finds nothing") {
    const Graph g = path4();
    SolutionState st(g);
    load(st, {0, 2});
    CHECK_FALSE(search_2(st).has_value());
    CHECK(certify_k_minimal(g, members(st), 2));
}

TEST_CASE("search_2 on P5 merges two ends into their middle") {
    const Graph g = path5();
    SolutionState st(g);
    load(st, {0, 2, 4});
    const auto move = search_2(st);
    REQUIRE(move.has_value());
    // both b (for {a,c}) and d (for {c,e}) qualify; T2 order picks one
    const auto drop = sorted({move->drop.begin(), move->drop.end()});
    const Vertex added = move->add()[0];
    CHECK(move->add().size() == 1);
    CHECK(((drop == std::vector<Vertex>{0, 2} && added == 1) || (drop == std::vector<Vertex>{2, 4} && added == 3)));
    apply_checked(st, *move);
    CHECK(st.size() == 2);
}

TEST_CASE("search_2 on the star leaves finds nothing") {
    const Graph g = star(3);
    SolutionState st(g);
    load(st, {1, 2, 3});
    CHECK_FALSE(search_2(st).has_value());
}

TEST_CASE("search_3 on the star leaves picks the center") {
    const Graph g = star(3);
    SolutionState st(g);
    load(st, {1, 2, 3});
    NeighborhoodSearch search;
    const auto move = search.search_3(st);
    REQUIRE(move.has_value());
    CHECK(search.last_case() == SwapCase::single_three);
    apply_checked(st, *move);
    CHECK(members(st) == std::vector<Vertex>{0});
}

TEST_CASE("search_3 needs three solution vertices") {
    const Graph g = path4();
    SolutionState st(g);
    load(st, {0, 2});
    CHECK_FALSE(search_3(st).has_value());
}

TEST_CASE("searches reject a non-maximal set") {
    const Graph g = path4();
    SolutionState st(g);
    st.add_vertex(0);
    CHECK_THROWS_AS(search_2(st), std::logic_error);
    CHECK_THROWS_AS(search_3(st), std::logic_error);
}

TEST_CASE("search_3 covers each case") {
    SUBCASE("3-tight vertex with a mate") {
        // a adjacent to x, y, z; b attached to z only via the freed vertex c
        // x=0 y=1 z=2 a=3 c=4 b=5; c is 1-tight on z, b is 1-tight on z
        const Graph g = make_graph(6, {{0, 3}, {1, 3}, {2, 3}, {2, 4}, {4, 5}, {2, 5}});
        SolutionState st(g);
        load(st, {0, 1, 2});
        REQUIRE(certify_k_minimal(g, members(st), 2));
        NeighborhoodSearch search;
        const auto move = search.search_3(st);
        REQUIRE(move.has_value());
        CHECK(search.last_case() == SwapCase::three_with_mate);
        apply_checked(st, *move);
        CHECK(st.size() == 2);
    }
    SUBCASE("two 2-tight vertices sharing one solution neighbor") {
        // a on {x,y}, b on {y,z}; p on x and q on z keep S 2-minimal
        // x=0 y=1 z=2 a=3 b=4 p=5 q=6
        const Graph g = make_graph(7, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 6}, {4, 5}, {3, 6}});
        SolutionState st(g);
        load(st, {0, 1, 2});
        REQUIRE(st.is_maximal());
        REQUIRE(certify_k_minimal(g, members(st), 2));
        NeighborhoodSearch search;
        const auto move = search.search_3(st);
        REQUIRE(move.has_value());
        CHECK(search.last_case() == SwapCase::two_two);
        apply_checked(st, *move);
        CHECK(members(st) == std::vector<Vertex>{3, 4});
    }
    SUBCASE("2-tight pair joined by an adjacent 2-tight vertex") {
        // a on {x,y}, a' on {x,z} adjacent to a, b on z, p on y adjacent to b
        // x=0 y=1 z=2 a=3 a'=4 b=5 p=6
        const Graph g = make_graph(7, {{0, 3}, {1, 3}, {0, 4}, {2, 4}, {3, 4}, {2, 5}, {1, 6}, {5, 6}});
        SolutionState st(g);
        load(st, {0, 1, 2});
        REQUIRE(certify_k_minimal(g, members(st), 2));
        NeighborhoodSearch search;
        const auto move = search.search_3(st);
        REQUIRE(move.has_value());
        CHECK(search.last_case() == SwapCase::two_two); // z found through a'

        apply_checked(st, *move);
        CHECK(st.size() == 2); // {a, b} or the mirror pair {a', p}
    }
    SUBCASE("pair linked only through a freed vertex") {
        // x=0 y=1 z=2 a=3 w=4 b=5: the freed set is connected only via w-b
        const Graph g = make_graph(6, {{0, 3}, {1, 3}, {0, 4}, {2, 5}, {4, 5}});
        SolutionState st(g);
        load(st, {0, 1, 2});
        REQUIRE(certify_k_minimal(g, members(st), 2));
        REQUIRE_FALSE(certify_k_minimal(g, members(st), 3));
        NeighborhoodSearch search;
        const auto move = search.search_3(st);
        REQUIRE(move.has_value());
        CHECK(search.last_case() == SwapCase::two_one_linked);
        apply_checked(st, *move);
        CHECK(members(st) == std::vector<Vertex>{3, 5});
    }
}

TEST_CASE("local_search examples") {
    const Graph g = star(5);
    SolutionState a(g);
    load(a, {1, 2, 3, 4, 5});
    CHECK(local_search(a, 2));
    CHECK(a.size() == 5);

    const Graph s3 = star(3);
    SolutionState b(s3);
    load(b, {1, 2, 3});
    CHECK(local_search(b, 3));
    CHECK(members(b) == std::vector<Vertex>{0});

    CHECK_THROWS_AS(local_search(b, 4), std::invalid_argument);
}

TEST_CASE("an expired deadline stops local search") {
    const Graph g = gen_random(200, 0.1, 3);
    SolutionState st(g);
    Rng rng(3);
    st.random_fill(rng);
    const std::size_t before = st.size();
    const Deadline past(Deadline::Clock::now());
    CHECK_FALSE(local_search(st, 3, past));
    CHECK(st.size() == before);
    CHECK(st.is_maximal());
}

TEST_CASE("stale moves are rejected") {
    const Graph g = path5();
    SolutionState st(g);
    load(st, {0, 2, 4});
    const auto move = search_2(st);
    REQUIRE(move.has_value());
    apply_move(st, *move);
    CHECK_THROWS_AS(apply_move(st, *move), std::logic_error);
}

TEST_CASE("searches agree with exhaustive enumeration along trajectories") {
    Rng rng(99);
    NeighborhoodSearch search;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 6 + rng.below(9);
        const double p = std::array<double, 3>{0.2, 0.5, 0.8}[rng.below(3)];
        const Graph g = gen_random(n, p, rng.next());
        for (int init = 0; init < 5; ++init) {
            SolutionState st(g);
            st.random_fill(rng);
            while (true) {
                const auto m2 = search.search_2(st);
                CHECK(search.stats().two_anchors <= st.section_size(Section::two_tight));
                CHECK(m2.has_value() == !certify_k_minimal(g, members(st), 2));
                if (m2) {
                    apply_checked(st, *m2);
                    continue;
                }
                const auto m3 = search.search_3(st);
                CHECK(search.stats().three_anchors <= st.section_size(Section::three_plus));
                CHECK(search.stats().pair_anchors <= st.section_size(Section::two_tight));
                CHECK(m3.has_value() == !certify_k_minimal(g, members(st), 3));
                if (!m3) {
                    break;
                }
                apply_checked(st, *m3);
            }
        }
    }
}
