#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "surround/config_space.hpp"
#include "surround/errors.hpp"
#include "surround/families.hpp"
#include "surround/solver.hpp"

using namespace surround;

namespace {

std::vector<int> psi_vec(const PsiMap& pm, const std::vector<int>& cfg) {
    return pm.psi_set(CopConfig{cfg}).to_vector();
}

bool psi_equal(const PsiMap& a, const PsiMap& b) {
    if (a.config_count() != b.config_count() || a.words() != b.words()) return false;
    for (std::uint64_t t = 0; t < a.config_count(); ++t) {
        auto ra = a.psi(t);
        auto rb = b.psi(t);
        for (std::size_t w = 0; w < ra.size(); ++w) {
            if (ra[w] != rb[w]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("config space rank/unrank bijection") {
    Graph g = complete_graph(6);
    ConfigSpace space(g, 3, 1'000'000);
    CHECK(space.count() == 56);    // multisets of size 3 over 6 vertices
    std::vector<int> buf(3);
    for (std::uint64_t r = 0; r < space.count(); ++r) {
        space.unrank(r, buf);
        CHECK(std::is_sorted(buf.begin(), buf.end()));
        CHECK(space.rank(buf) == r);
    }
    CHECK_THROWS_AS(ConfigSpace(g, 3, 10), budget_error);
    try {
        ConfigSpace(g, 3, 10);
    } catch (const budget_error& e) {
        CHECK(e.required() == 56);
    }
}

TEST_CASE("successor enumeration matches the odometer reference") {
    std::mt19937 rng(1234);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 4 + static_cast<int>(rng() % 4);    // 4..7
        Graph g = testhelp::random_connected(rng, n, 0.3);
        for (int k = 1; k <= 3; ++k) {
            ConfigSpace space(g, k, 1'000'000);
            std::vector<int> cfg(static_cast<std::size_t>(k));
            std::vector<std::uint64_t> got;
            for (std::uint64_t t = 0; t < space.count(); ++t) {
                space.unrank(t, cfg);
                space.successors(t, got);
                std::vector<std::uint64_t> want;
                for (const CopConfig& s : config_successors(g, CopConfig{cfg})) {
                    want.push_back(space.rank(s.positions));
                }
                std::sort(want.begin(), want.end());
                std::vector<std::uint64_t> got_sorted = got;
                std::sort(got_sorted.begin(), got_sorted.end());
                CHECK(got_sorted == want);
                // the all-stay move keeps the config among its own successors
                CHECK(std::find(got_sorted.begin(), got_sorted.end(), t) != got_sorted.end());
            }
        }
    }
}

TEST_CASE("successor cache serves the same lists") {
    Graph g = builtin_graph("petersen");
    ConfigSpace space(g, 2, 1'000'000);
    std::vector<std::vector<std::uint64_t>> before;
    std::vector<std::uint64_t> row;
    for (std::uint64_t t = 0; t < space.count(); ++t) {
        space.successors(t, row);
        before.push_back(row);
    }
    CHECK(space.build_adjacency_cache(1'000'000));
    for (std::uint64_t t = 0; t < space.count(); ++t) {
        auto cached = space.cached_row(t);
        std::vector<std::uint64_t> c(cached.begin(), cached.end());
        std::sort(c.begin(), c.end());
        std::sort(before[t].begin(), before[t].end());
        CHECK(c == before[t]);
    }
}

TEST_CASE("psi initialization on hand-checked cases") {
    SolveOptions so;

    // the map keeps a pointer to the graph, so each graph outlives its map
    Graph c4g = cycle_graph(4);
    Graph starg = star_graph(5);
    Graph p5g = path_graph(5);
    Graph c3g = cycle_graph(3);

    // one cop on C4: nothing is surrounded or one-move-surroundable
    PsiMap c4 = init_psi(c4g, 1, Variant::surround, so);
    CHECK(psi_vec(c4, {0}) == std::vector<int>{1, 2, 3});

    // one cop at the star center dominates every leaf
    PsiMap star = init_psi(starg, 1, Variant::surround, so);
    CHECK(psi_vec(star, {0}).empty());
    CHECK(psi_vec(star, {1}) == std::vector<int>{0});

    // capture: safe means outside the closed neighborhood
    PsiMap cap = init_psi(p5g, 1, Variant::capture, so);
    CHECK(psi_vec(cap, {0}) == std::vector<int>{2, 3, 4});
    CHECK(psi_vec(cap, {2}) == std::vector<int>{0, 4});

    // two cops adjacent to the same vertex surround it now (B), and can
    // surround a degree-2 vertex whose neighbors they can reach in one move
    PsiMap c3 = init_psi(c3g, 2, Variant::surround, so);
    CHECK(psi_vec(c3, {0, 1}).empty());    // vertex 2 has N(2) = {0,1} occupied
}

TEST_CASE("refinement fixed point on C4 with one cop") {
    SolveOptions so;
    Graph c4g = cycle_graph(4);
    PsiMap pm = init_psi(c4g, 1, Variant::surround, so);
    refine_to_fixpoint(pm, so);
    CHECK(psi_vec(pm, {0}) == std::vector<int>{1, 2, 3});
    CHECK(psi_vec(pm, {1}) == std::vector<int>{0, 2, 3});
    CHECK_FALSE(pm.any_empty());
}

TEST_CASE("game numbers for closed forms") {
    CHECK(game_number(path_graph(2), Variant::surround).number == 1);
    CHECK(game_number(path_graph(6), Variant::surround).number == 2);
    CHECK(game_number(cycle_graph(3), Variant::surround).number == 2);
    CHECK(game_number(cycle_graph(7), Variant::surround).number == 2);
    CHECK(game_number(complete_graph(5), Variant::surround).number == 4);
    CHECK(game_number(complete_bipartite_graph(3, 4), Variant::surround).number == 3);
    CHECK(game_number(complete_graph(5), Variant::capture).number == 1);
    CHECK(game_number(cycle_graph(5), Variant::capture).number == 2);
    CHECK(game_number(path_graph(9), Variant::capture).number == 1);
    CHECK(game_number(builtin_graph("petersen"), Variant::capture).number == 3);
}

TEST_CASE("pinned results skip solver runs") {
    GameNumberResult k5 = game_number(complete_graph(5), Variant::surround);
    CHECK(k5.pinned_by_bounds);
    CHECK(k5.trials.empty());
    CHECK(k5.bracket.lo == 4);
    CHECK(k5.bracket.hi == 4);

    GameNumberResult k1 = game_number(complete_graph(1), Variant::capture);
    CHECK(k1.number == 1);
    CHECK(k1.pinned_by_bounds);
}

TEST_CASE("bound-free search agrees with the bounded one") {
    SolveOptions plain;
    plain.use_bounds = false;
    for (const char* name : {"petersen", "c8_chords", "c8_chords_plus_e"}) {
        Graph g = builtin_graph(name);
        GameNumberResult a = game_number(g, Variant::surround, plain);
        GameNumberResult b = game_number(g, Variant::surround);
        CHECK(a.number == b.number);
        CHECK(a.bracket.lo == 1);
        CHECK(a.bracket.hi == g.order());
        CHECK(a.trials.front().k == 1);
    }
}

TEST_CASE("bespoke values") {
    CHECK(game_number(builtin_graph("c8_chords"), Variant::surround).number == 3);
    CHECK(game_number(builtin_graph("c8_chords_plus_e"), Variant::surround).number == 2);
    CHECK(game_number(builtin_graph("figure1"), Variant::surround).number == 3);
    CHECK(robber_wins(builtin_graph("mcgee"), 3, Variant::surround));
}

TEST_CASE("capture never exceeds surround") {
    std::mt19937 rng(5150);
    for (int rep = 0; rep < 25; ++rep) {
        Graph g = testhelp::random_connected(rng, 4 + static_cast<int>(rng() % 5),
                                             0.2 + 0.1 * (rep % 7));
        const int sigma = game_number(g, Variant::surround).number;
        const int c = game_number(g, Variant::capture).number;
        CHECK(c <= sigma);
    }
}

TEST_CASE("cop wins are monotone in the cop count") {
    for (const Graph& g : testhelp::connected_corpus(5)) {
        bool won = false;
        for (int k = 1; k <= 4; ++k) {
            const bool win = !robber_wins(g, k, Variant::surround);
            if (won) CHECK(win);    // once winning, always winning with more cops
            won = win;
        }
    }
}

TEST_CASE("connected graphs empty all at once") {
    SolveOptions so;
    for (const Graph& g : testhelp::connected_corpus(5)) {
        for (int k = 1; k <= 2; ++k) {
            for (Variant v : {Variant::surround, Variant::capture}) {
                PsiMap pm = init_psi(g, k, v, so);
                refine_to_fixpoint(pm, so);
                CHECK(pm.any_empty() == pm.all_empty());
            }
        }
    }
}

TEST_CASE("faithful sweeps and the worklist reach the same fixed point") {
    SolveOptions wl;
    SolveOptions fa;
    fa.mode = RefineMode::faithful;
    for (const Graph& g : testhelp::connected_corpus(5)) {
        for (int k = 1; k <= 2; ++k) {
            for (Variant v : {Variant::surround, Variant::capture}) {
                PsiMap a = init_psi(g, k, v, wl);
                refine_to_fixpoint(a, wl);
                PsiMap b = init_psi(g, k, v, fa);
                refine_to_fixpoint(b, fa);
                CHECK(psi_equal(a, b));
            }
        }
    }
}

TEST_CASE("error conditions") {
    CHECK_THROWS_AS(game_number(Graph::from_edges(4, {{0, 1}, {2, 3}}), Variant::surround),
                    disconnected_error);
    CHECK_THROWS_AS(robber_wins(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1, Variant::surround),
                    disconnected_error);

    SolveOptions tiny;
    tiny.config_budget = 10;
    CHECK_THROWS_AS(robber_wins(path_graph(10), 5, Variant::surround, tiny), budget_error);
    try {
        robber_wins(path_graph(10), 5, Variant::surround, tiny);
    } catch (const budget_error& e) {
        CHECK(e.required() == 2002);    // multisets of size 5 over 10 vertices
    }

    SolveOptions ops;
    ops.op_budget = 5;
    CHECK_THROWS_AS(robber_wins(builtin_graph("petersen"), 2, Variant::surround, ops),
                    budget_error);

    CHECK_THROWS_AS(init_psi(path_graph(3), 0, Variant::surround, SolveOptions{}), parse_error);
    CHECK_THROWS_AS(init_psi(path_graph(3), 4, Variant::surround, SolveOptions{}), parse_error);
}

TEST_CASE("trials record the scan") {
    GameNumberResult r = game_number(generalized_petersen(7, 2), Variant::surround);
    CHECK(r.number == 4);
    CHECK(r.bracket.lo == 3);
    REQUIRE(r.trials.size() == 2);
    CHECK(r.trials[0].k == 3);
    CHECK(r.trials[0].robber_wins);
    CHECK(r.trials[1].k == 4);
    CHECK_FALSE(r.trials[1].robber_wins);
    CHECK_FALSE(r.pinned_by_bounds);
}
