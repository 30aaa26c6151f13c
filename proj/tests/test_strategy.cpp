#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "surround/errors.hpp"
#include "surround/families.hpp"
#include "surround/record.hpp"
#include "surround/solver.hpp"
#include "surround/strategy.hpp"

using namespace surround;

TEST_CASE("three cops surround on the Petersen graph from a one-move opening") {
    Graph p = builtin_graph("petersen");
    auto table = solve_positions(p, 3, Variant::surround);
    REQUIRE(table.has_value());
    CHECK_FALSE(table->immediate_win());
    CHECK(table->initial_rank() == 1);    // every placement answered by an immediate surround

    SimulateOutcome sim = simulate_exhaustive(*table);
    CHECK(sim.ok);
    CHECK(sim.failure.empty());
    CHECK(sim.states_checked == 7);    // the seven placements off the opening config
    CHECK_FALSE(sim.immediate_win);
}

TEST_CASE("two cops lose on the Petersen graph") {
    Graph p = builtin_graph("petersen");
    CHECK_FALSE(solve_positions(p, 2, Variant::surround).has_value());
}

TEST_CASE("backward induction agrees with the safe-set solver") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : testhelp::connected_corpus(n)) {
            for (Variant v : {Variant::surround, Variant::capture}) {
                for (int k = 1; k <= std::min(2, n); ++k) {
                    const bool cops_win_table = solve_positions(g, k, v).has_value();
                    const bool cops_win_solver = !robber_wins(g, k, v);
                    CHECK_MESSAGE(cops_win_table == cops_win_solver, "n=", n, " k=", k,
                                  " variant=", variant_name(v));
                }
            }
        }
    }
}

TEST_CASE("a hub cop wins a star at placement time") {
    Graph star = star_graph(6);
    auto table = solve_positions(star, 1, Variant::surround);
    REQUIRE(table.has_value());
    CHECK_FALSE(table->immediate_win());    // the leaves are open, just all losing
    CHECK(table->initial_rank() == 0);

    SimulateOutcome sim = simulate_exhaustive(*table);
    CHECK(sim.ok);
    CHECK(sim.states_checked == 5);    // one lost-at-placement state per leaf
}

TEST_CASE("one vertex, one cop") {
    Graph k1 = complete_graph(1);
    auto table = solve_positions(k1, 1, Variant::surround);
    REQUIRE(table.has_value());
    CHECK(table->immediate_win());
    CHECK(simulate_exhaustive(*table).ok);
}

TEST_CASE("robber policy on a 4-cycle") {
    Graph c4 = cycle_graph(4);
    SolveOptions so;
    PsiMap pm = init_psi(c4, 1, Variant::surround, so);
    refine_to_fixpoint(pm, so);
    RobberPolicy policy(pm);

    std::vector<int> cfg{0};
    const std::uint64_t at0 = pm.space().rank(cfg);
    cfg[0] = 1;
    const std::uint64_t at1 = pm.space().rank(cfg);

    CHECK(policy.place(at0) == 1);           // lowest safe vertex off the cop
    CHECK(policy.reply(1, at1) == 0);        // lowest of N[1] still safe once cops sit on 1
    CHECK(policy.reply(2, at0) == 1);
}

TEST_CASE("robber policy refuses a losing position") {
    SolveOptions so;
    Graph star = star_graph(4);
    PsiMap pm = init_psi(star, 1, Variant::surround, so);
    refine_to_fixpoint(pm, so);
    CHECK(pm.any_empty());
    CHECK_THROWS_AS(RobberPolicy{pm}, std::invalid_argument);
}

TEST_CASE("evasion check survives exhaustive cop play") {
    SolveOptions so;

    Graph c4g = cycle_graph(4);
    PsiMap c4 = init_psi(c4g, 1, Variant::surround, so);
    refine_to_fixpoint(c4, so);
    EvasionOutcome e1 = verify_evasion(c4);
    CHECK(e1.ok);
    CHECK(e1.failure.empty());
    CHECK(e1.states_checked > 0);

    Graph petg = builtin_graph("petersen");
    PsiMap pet = init_psi(petg, 2, Variant::surround, so);
    refine_to_fixpoint(pet, so);
    EvasionOutcome e2 = verify_evasion(pet);
    CHECK(e2.ok);
    CHECK(e2.states_checked == 145);

    Graph mcgeeg = builtin_graph("mcgee");
    PsiMap mcgee = init_psi(mcgeeg, 3, Variant::surround, so);
    refine_to_fixpoint(mcgee, so);
    CHECK(verify_evasion(mcgee).ok);
}

TEST_CASE("evasion state budget") {
    SolveOptions so;
    Graph petg = builtin_graph("petersen");
    PsiMap pet = init_psi(petg, 2, Variant::surround, so);
    refine_to_fixpoint(pet, so);
    EvasionOutcome e = verify_evasion(pet, 10);
    CHECK_FALSE(e.ok);
    CHECK(e.failure.find("budget") != std::string::npos);
}

TEST_CASE("strategy table state budget") {
    StrategyOptions tight;
    tight.state_budget = 10;
    Graph p = builtin_graph("petersen");
    CHECK_THROWS_AS(solve_positions(p, 2, Variant::surround, tight), budget_error);
}

TEST_CASE("stored cop moves are legal transitions") {
    Graph g = cycle_graph(5);
    auto table = solve_positions(g, 2, Variant::surround);
    REQUIRE(table.has_value());
    const ConfigSpace& space = table->space();
    std::vector<int> from(2), to(2);
    for (std::uint64_t cfg = 0; cfg < table->config_count(); ++cfg) {
        for (int r = 0; r < g.order(); ++r) {
            const std::uint32_t mv = table->cop_move(cfg, r);
            if (mv == StrategyTable::kNoMove) continue;
            space.unrank(cfg, from);
            space.unrank(mv, to);
            CHECK(config_move_legal(g, CopConfig{from}, CopConfig{to}));
        }
    }
}
