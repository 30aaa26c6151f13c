#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "surround/bounds.hpp"
#include "surround/designs.hpp"
#include "surround/families.hpp"

using namespace surround;

TEST_CASE("clique and independence match brute force on the corpus") {
    for (int n : {4, 5, 6}) {
        for (const Graph& g : testhelp::connected_corpus(n)) {
            bool exact = false;
            CHECK(max_clique(g, kDefaultCliqueNodeBudget, exact) == testhelp::brute_clique(g));
            CHECK(exact);
            CHECK(max_independent_set(g, kDefaultCliqueNodeBudget, exact) ==
                  testhelp::brute_independent(g));
            CHECK(exact);
        }
    }
}

TEST_CASE("clique and independence match brute force on random graphs") {
    std::mt19937 rng(424242);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = testhelp::random_connected(rng, 9, 0.2 + 0.07 * (rep % 10));
        bool exact = false;
        CHECK(max_clique(g, kDefaultCliqueNodeBudget, exact) == testhelp::brute_clique(g));
        CHECK(max_independent_set(g, kDefaultCliqueNodeBudget, exact) ==
              testhelp::brute_independent(g));
    }
}

TEST_CASE("clique budget exhaustion still yields a valid lower value") {
    std::mt19937 rng(7);
    Graph g = testhelp::random_connected(rng, 9, 0.5);
    bool exact = true;
    int truncated = max_clique(g, 1, exact);
    CHECK_FALSE(exact);
    CHECK(truncated >= 1);
    CHECK(truncated <= testhelp::brute_clique(g));
}

TEST_CASE("elimination width on known families") {
    CHECK(elimination_width(path_graph(7)) == 1);
    CHECK(elimination_width(cycle_graph(8)) == 2);
    CHECK(elimination_width(complete_graph(6)) == 5);
    CHECK(elimination_width(star_graph(7)) == 1);
    // grids: greedy orders achieve the true treewidth on small cases
    Graph grid33 = product(path_graph(3), path_graph(3), ProductKind::cartesian);
    CHECK(elimination_width(grid33) == 3);
}

TEST_CASE("lower bound pieces") {
    LowerBounds pet = lower_bounds(builtin_graph("petersen"));
    CHECK(pet.min_degree == 3);
    CHECK(pet.clique_minus_one == 1);
    CHECK_FALSE(pet.girth_rule.has_value());    // girth 5 < 7
    CHECK(pet.best() == 3);

    LowerBounds mc = lower_bounds(builtin_graph("mcgee"));
    CHECK(mc.girth_rule == 4);    // girth 7, min degree 3
    CHECK(mc.best() == 4);

    LowerBounds c7 = lower_bounds(cycle_graph(7));
    CHECK_FALSE(c7.girth_rule.has_value());    // girth 7 but min degree 2
    CHECK(c7.best() == 2);

    LowerBounds k5 = lower_bounds(complete_graph(5));
    CHECK(k5.clique_minus_one == 4);
    CHECK(k5.best() == 4);
}

TEST_CASE("upper bound pieces") {
    UpperBounds pet = upper_bounds(builtin_graph("petersen"));
    CHECK(pet.vertex_cover == 6);    // alpha = 4
    CHECK(pet.best() <= 6);

    UpperBounds p5 = upper_bounds(path_graph(5));
    CHECK(p5.vertex_cover == 2);
    CHECK(p5.elim_width_plus_one == 2);
    CHECK(p5.best() == 2);
}

TEST_CASE("bracket examples") {
    Bracket p4 = sigma_bracket(path_graph(4));
    CHECK(p4.lo == 1);
    CHECK(p4.hi == 2);

    Bracket k1 = sigma_bracket(complete_graph(1));
    CHECK(k1.lo == 1);
    CHECK(k1.hi == 1);

    Bracket k2 = sigma_bracket(complete_graph(2));
    CHECK(k2.lo == 1);
    CHECK(k2.hi == 1);

    Bracket big = sigma_bracket(block_intersection_graph(builtin_design("ag23")));
    CHECK(big.lo == 9);
    CHECK(big.hi == 9);

    Bracket kf = sigma_bracket(block_intersection_graph(builtin_design("fano")));
    CHECK(kf.lo == 6);
    CHECK(kf.hi == 6);

    // mcgee: girth rule lifts the lower end above the trivial degree bound
    Bracket mc = sigma_bracket(builtin_graph("mcgee"));
    CHECK(mc.lo == 4);
    CHECK(mc.hi >= mc.lo);
}

TEST_CASE("brackets are always ordered on random graphs") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = testhelp::random_connected(rng, 3 + static_cast<int>(rng() % 7),
                                             0.15 + 0.08 * (rep % 9));
        Bracket b = sigma_bracket(g);
        CHECK(b.lo >= 1);
        CHECK(b.lo <= b.hi);
        CHECK(b.hi <= g.order() - 1 + (g.order() == 1 ? 1 : 0));
    }
}
