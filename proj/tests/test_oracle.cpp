#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "minids/generators.hpp"
#include "minids/oracle.hpp"
#include "minids/rng.hpp"
#include "minids/solution_io.hpp"

using namespace minids;
using namespace minids::test;

TEST_CASE("exact_min_ids small cases") {
    CHECK(exact_min_ids(path4()).size == 2);
    CHECK(exact_min_ids(star(7)).size == 1);
    CHECK(exact_min_ids(star(7)).solution == std::vector<Vertex>{0});
    CHECK(exact_min_ids(complete(6)).size == 1);
    CHECK(exact_min_ids(Graph::from_edges(4, {})).size == 4);
    CHECK(exact_min_ids(Graph{}).size == 0);
    CHECK(exact_min_ids(cycle(9)).size == 3);
}

TEST_CASE("exact_min_ids on the 4x4 grid") {
    const auto r = exact_min_ids(gen_grid(4, 4));
    CHECK(r.size == 4);
    CHECK(is_independent_dominating(gen_grid(4, 4), r.solution));
}

TEST_CASE("exact_min_ids refuses large graphs") {
    CHECK_THROWS_AS(exact_min_ids(gen_random(27, 0.5, 1)), std::invalid_argument);
    CHECK_NOTHROW(exact_min_ids(gen_random(26, 0.5, 1)));
}

TEST_CASE("branch and bound agrees with the subset sweep") {
    Rng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = gen_random(1 + rng.below(16), rng.unit(), rng.next());
        const auto fast = exact_min_ids(g);
        const auto slow = exact_min_ids_sweep(g);
        CHECK(fast.size == slow.size);
        CHECK(fast.solution.size() == fast.size);
        CHECK(is_independent_dominating(g, fast.solution));
    }
}

TEST_CASE("certify_k_minimal examples") {
    const Graph s = star(3);
    const std::vector<Vertex> leaves{1, 2, 3};
    CHECK(certify_k_minimal(s, leaves, 2));
    CHECK_FALSE(certify_k_minimal(s, leaves, 3));
    const auto swap = find_improving_swap(s, leaves, 3);
    CHECK(swap.drop == leaves);
    CHECK(swap.add == std::vector<Vertex>{0});
    const std::vector<Vertex> ac{0, 2};
    CHECK(certify_k_minimal(path4(), ac, 2));
    CHECK(certify_k_minimal(path4(), ac, 3));
}

TEST_CASE("naive_F and naive_plateau examples") {
    const std::vector<Vertex> ac{0, 2};
    const std::vector<Vertex> c{2};
    CHECK(naive_F(path4(), ac, c) == std::vector<Vertex>{3});
    CHECK(naive_plateau(path4(), ac) == std::vector<std::pair<Vertex, Vertex>>{{2, 3}});
    const std::vector<Vertex> center{0};
    CHECK(naive_plateau(star(3), center).empty());
    const std::vector<Vertex> leaves{1, 2, 3};
    CHECK(naive_F(star(3), leaves, leaves) == std::vector<Vertex>{0});
}

TEST_CASE("verify_solution reports the first violation") {
    const Graph p3 = path3();
    const std::vector<Vertex> ends{0, 2};
    CHECK(verify_solution(p3, ends).valid);
    const std::vector<Vertex> adjacent{0, 1};
    const auto bad = verify_solution(p3, adjacent);
    CHECK_FALSE(bad.valid);
    CHECK(bad.message == "not independent: vertices 1 and 2 are adjacent");
    const std::vector<Vertex> one{0};
    CHECK(verify_solution(p3, one).message == "not dominating: vertex 3 has no neighbor in the set");
    const std::vector<Vertex> twice{0, 0, 2};
    CHECK_FALSE(verify_solution(p3, twice).valid);
    const std::vector<Vertex> far{5};
    CHECK_THROWS_AS(verify_solution(p3, far), std::out_of_range);
}

TEST_CASE("solution files") {
    std::istringstream in("# best\n3, 1\n\n2\n");
    CHECK(read_solution(in, 3) == std::vector<Vertex>{2, 0, 1});
    std::istringstream zero("0\n");
    CHECK_THROWS_AS(read_solution(zero, 3), std::out_of_range);
    std::istringstream big("4\n");
    CHECK_THROWS_AS(read_solution(big, 3), std::out_of_range);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(read_solution(junk, 3), std::invalid_argument);
    std::ostringstream out;
    const std::vector<Vertex> s{4, 0, 2};
    write_solution(out, s);
    CHECK(out.str() == "1\n3\n5\n");
}
