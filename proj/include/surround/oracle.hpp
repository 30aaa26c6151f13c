#pragma once

#include <cstdint>

#include "surround/graph.hpp"
#include "surround/solver.hpp"

namespace surround {

// Deliberately naive reference solver used to validate the production one.
// Works on raw ordered cop tuples (no canonicalization, no worklist): full
// alternating-reachability over (tuple, robber, mover) states, iterated to a
// fixed point by whole-table sweeps. Shares only the Graph type with the
// solver. States are capped at n^k * n * 2 <= 2 * state_budget.
bool naive_robber_wins(const Graph& g, int k, Variant variant,
                       std::uint64_t state_budget = 10'000'000);

int naive_game_number(const Graph& g, Variant variant,
                      std::uint64_t state_budget = 10'000'000);

}  // namespace surround
