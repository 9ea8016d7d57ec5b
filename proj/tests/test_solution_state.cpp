#include "doctest.h"
#include "helpers.hpp"
#include "minids/generators.hpp"
#include "minids/oracle.hpp"
#include "minids/rng.hpp"

using namespace minids;
using namespace minids::test;

namespace {

std::vector<Vertex> as_vector(std::span<const Vertex> s) { return sorted({s.begin(), s.end()}); }

// Naive tightness straight from the graph.
std::uint32_t count_solution_neighbors(const SolutionState& st, Vertex v) {
    std::uint32_t c = 0;
    for (Vertex u : st.graph().neighbors(v)) {
        c += st.in_solution(u) ? 1 : 0;
    }
    return c;
}

} // namespace

TEST_CASE("init puts every vertex in the free section") {
    const Graph g = gen_grid(10, 10);
    SolutionState st(g);
    CHECK(st.size() == 0);
    CHECK(st.section_size(Section::free) == 100);
    CHECK(st.stamp() == 1);
    CHECK(st.validate().empty());
}

TEST_CASE("add_vertex on P3 center") {
    const Graph g = path3();
    SolutionState st(g);
    st.add_vertex(1);
    CHECK(as_vector(st.solution()) == std::vector<Vertex>{1});
    CHECK(st.tightness(0) == 1);
    CHECK(st.tightness(2) == 1);
    CHECK(st.section_size(Section::free) == 0);
    CHECK(as_vector(st.section(Section::one_tight)) == std::vector<Vertex>{0, 2});
    CHECK(st.validate().empty());
    CHECK_FALSE(st.pick_free().has_value());
    CHECK(st.is_maximal());
}

TEST_CASE("add_vertex on K5 and the star") {
    const Graph k5 = complete(5);
    SolutionState a(k5);
    a.add_vertex(0);
    CHECK(a.section_size(Section::one_tight) == 4);
    CHECK(a.validate().empty());

    const Graph s = star(3);
    SolutionState b(s);
    b.add_vertex(0);
    CHECK(b.section_size(Section::one_tight) == 3);
    CHECK(b.validate().empty());
}

TEST_CASE("add_vertex rejects members and dominated vertices") {
    const Graph g = path3();
    SolutionState st(g);
    st.add_vertex(1);
    CHECK_THROWS_AS(st.add_vertex(1), std::logic_error);
    CHECK_THROWS_AS(st.add_vertex(0), std::logic_error);
    CHECK_THROWS_AS(st.drop_vertex(0), std::logic_error);
}

TEST_CASE("drop_vertex examples") {
    const Graph p3 = path3();
    SolutionState a(p3);
    a.add_vertex(1);
    a.drop_vertex(1);
    CHECK(a.section_size(Section::free) == 3);
    CHECK(a.validate().empty());

    const Graph p4 = path4();
    SolutionState b(p4);
    load(b, {0, 2});
    b.drop_vertex(2);
    CHECK(b.tightness(3) == 0);
    CHECK(b.tightness(1) == 1);
    CHECK(b.tightness(2) == 0);
    CHECK(b.section_of(3) == Section::free);
    CHECK(b.section_of(2) == Section::free);
    CHECK(b.section_of(1) == Section::one_tight);
    CHECK(b.validate().empty());

    const Graph s = star(3);
    SolutionState c(s);
    c.add_vertex(0);
    c.drop_vertex(0);
    CHECK(c.section_size(Section::free) == 4);
}

TEST_CASE("pick_free") {
    const Graph p3 = path3();
    SolutionState a(p3);
    CHECK(a.pick_free().has_value());
    const Graph p4 = path4();
    SolutionState b(p4);
    b.add_vertex(0);
    REQUIRE(b.pick_free().has_value());
    CHECK((*b.pick_free() == 2 || *b.pick_free() == 3));
    CHECK(as_vector(b.section(Section::free)) == std::vector<Vertex>{2, 3});
}

TEST_CASE("greedy_max_degree picks by degree then id") {
    const Graph s = star(3);
    SolutionState a(s);
    a.greedy_max_degree();
    CHECK(as_vector(a.solution()) == std::vector<Vertex>{0});

    const Graph p4 = path4();
    SolutionState b(p4);
    b.greedy_max_degree();
    CHECK(as_vector(b.solution()) == std::vector<Vertex>{1, 3});

    const Graph k5 = complete(5);
    SolutionState c(k5);
    c.greedy_max_degree();
    CHECK(c.size() == 1);
    CHECK(c.solution()[0] == 0);
}

TEST_CASE("collect_freed examples") {
    const Graph p4 = path4();
    SolutionState a(p4);
    load(a, {0, 2});
    CHECK(sorted(a.collect_freed(DropSet{2})) == std::vector<Vertex>{3});
    CHECK(sorted(a.collect_freed(DropSet{0, 2})) == std::vector<Vertex>{1, 3});
    CHECK_THROWS_AS(a.collect_freed(DropSet{1}), std::logic_error);

    const Graph s = star(3);
    SolutionState b(s);
    load(b, {1, 2, 3});
    CHECK(b.collect_freed(DropSet{1, 2}).empty());
    CHECK(b.collect_freed(DropSet{1, 2, 3}) == std::vector<Vertex>{0});
}

TEST_CASE("adjacent_to_all_freed examples") {
    const Graph s = star(3);
    SolutionState a(s);
    load(a, {1, 2, 3});
    CHECK(a.adjacent_to_all_freed(0, DropSet{1, 2, 3}));

    const Graph p4 = path4();
    SolutionState b(p4);
    load(b, {0, 2});
    CHECK_FALSE(b.adjacent_to_all_freed(1, DropSet{0, 2}));
    CHECK_THROWS_AS(b.adjacent_to_all_freed(1, DropSet{2}), std::logic_error);

    const Graph c5 = cycle(5); // v1..v5 as 0..4
    SolutionState c(c5);
    load(c, {0, 2});
    CHECK(sorted(c.collect_freed(DropSet{0, 2})) == std::vector<Vertex>{1, 3, 4});
    CHECK_FALSE(c.adjacent_to_all_freed(1, DropSet{0, 2}));
}

TEST_CASE("adjacent_to_all examples") {
    const Graph p3 = path3();
    SolutionState a(p3);
    const std::vector<Vertex> single{2};
    CHECK(a.adjacent_to_all(2, single));
    const std::vector<Vertex> ends{0, 2};
    CHECK_FALSE(a.adjacent_to_all(0, ends));
    CHECK_THROWS_AS(a.adjacent_to_all(1, ends), std::logic_error);

    const Graph k5 = complete(5);
    SolutionState b(k5);
    const std::vector<Vertex> three{1, 3, 4};
    CHECK(b.adjacent_to_all(3, three));
}

TEST_CASE("stamp resets at the threshold") {
    const Graph k5 = complete(5);
    SolutionState st(k5);
    st.set_stamp_for_testing(SolutionState::stamp_limit - 2);
    const std::vector<Vertex> set{0, 1, 2};
    CHECK(st.adjacent_to_all(0, set));
    CHECK(st.stamp() == SolutionState::stamp_limit - 1);
    CHECK(st.adjacent_to_all(1, set));
    CHECK(st.stamp() == 1);
    const std::vector<Vertex> pair{1, 2};
    CHECK(st.adjacent_to_all(2, pair));
    const Graph p3 = path3();
    SolutionState other(p3);
    other.set_stamp_for_testing(SolutionState::stamp_limit - 1);
    const std::vector<Vertex> ends{0, 2};
    CHECK_FALSE(other.adjacent_to_all(0, ends));
    CHECK_FALSE(other.adjacent_to_all(2, ends));
}

TEST_CASE("relocations per add or drop stay within degree plus one") {
    const Graph g = gen_random(60, 0.2, 11);
    SolutionState st(g);
    Rng rng(5);
    for (int step = 0; step < 2000; ++step) {
        const std::uint64_t before = st.relocations();
        Vertex v = static_cast<Vertex>(rng.below(g.num_vertices()));
        if (st.in_solution(v)) {
            st.drop_vertex(v);
        } else if (st.tightness(v) == 0) {
            st.add_vertex(v);
        } else {
            continue;
        }
        CHECK(st.relocations() - before <= g.degree(v) + 1);
    }
}

TEST_CASE("assign reaches the target set") {
    const Graph g = gen_random(40, 0.15, 2);
    SolutionState st(g);
    Rng rng(8);
    st.random_fill(rng);
    SolutionState other(g);
    other.random_fill(rng);
    const std::vector<Vertex> target(other.solution().begin(), other.solution().end());
    st.assign(target);
    CHECK(as_vector(st.solution()) == sorted(target));
    CHECK(st.validate().empty());
}

TEST_CASE("random operation sequences keep the structure consistent") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.below(63);
        const Graph g = gen_random(n, 0.05 + 0.5 * rng.unit(), rng.next());
        SolutionState st(g);
        for (int step = 0; step < 300; ++step) {
            const Vertex v = static_cast<Vertex>(rng.below(n));
            if (st.in_solution(v)) {
                st.drop_vertex(v);
            } else if (st.tightness(v) == 0) {
                st.add_vertex(v);
            }
        }
        const auto issues = st.validate();
        CHECK(issues.empty());
        for (Vertex v = 0; v < n; ++v) {
            CHECK(st.tightness(v) == count_solution_neighbors(st, v));
        }
        CHECK(st.pick_free().has_value() == !st.is_maximal());
    }
}

TEST_CASE("freed sets and adjacency tests agree with the naive definitions") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng.below(17);
        const Graph g = gen_random(n, 0.1 + 0.7 * rng.unit(), rng.next());
        SolutionState st(g);
        st.random_fill(rng);
        const std::vector<Vertex> s(st.solution().begin(), st.solution().end());
        const auto check = [&](const DropSet& d) {
            const std::vector<Vertex> dv(d.begin(), d.end());
            const auto naive = naive_F(g, s, dv);
            CHECK(sorted(st.collect_freed(d)) == naive);
            for (Vertex v : naive) {
                bool all = true;
                for (Vertex u : naive) {
                    all = all && (u == v || g.has_edge(u, v));
                }
                CHECK(st.adjacent_to_all_freed(v, d) == all);
                CHECK(st.adjacent_to_all(v, naive) == all);
            }
        };
        for (std::size_t i = 0; i < s.size(); ++i) {
            check(DropSet{s[i]});
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                check(DropSet{s[i], s[j]});
                for (std::size_t l = j + 1; l < s.size(); ++l) {
                    check(DropSet{s[i], s[j], s[l]});
                }
            }
        }
    }
}

TEST_CASE("DropSet validation") {
    CHECK_THROWS_AS((DropSet{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((DropSet{1, 2, 3, 4}), std::invalid_argument);
    CHECK((DropSet{1, 2}).size() == 2);
    CHECK((DropSet{1, 2}).contains(2));
}
