#pragma once

#include <optional>

#include "surround/graph.hpp"

namespace surround {

inline constexpr long long kDefaultCliqueNodeBudget = 10'000'000;

// Lower bounds on the surrounding number of a connected graph: minimum
// degree, clique number minus one, and (for girth >= 7 with min degree >= 3)
// min degree plus one. `exact` is false when the clique search hit its node
// budget; the reported clique size is then still a valid (loose) bound.
struct LowerBounds {
    int min_degree = 0;
    int clique_minus_one = 0;
    std::optional<int> girth_rule;
    bool exact = true;

    int best() const;
};

// Upper bounds: vertex cover size |V| - alpha(G) and greedy elimination width
// plus one (a treewidth surrogate, never claimed exact). `exact` flags the
// independence-number search completing within budget.
struct UpperBounds {
    int vertex_cover = 0;
    int elim_width_plus_one = 0;
    bool exact = true;

    int best() const;
};

struct Bracket {
    int lo = 0;
    int hi = 0;
};

LowerBounds lower_bounds(const Graph& g, long long node_budget = kDefaultCliqueNodeBudget);
UpperBounds upper_bounds(const Graph& g, long long node_budget = kDefaultCliqueNodeBudget);

// Combined bracket lo <= sigma(G) <= hi. Asserts lo <= hi; a violation is a
// bug, not an input condition.
Bracket sigma_bracket(const Graph& g, long long node_budget = kDefaultCliqueNodeBudget);

// Exact-by-default subroutines, exposed for tests and the bounds command.
// On budget exhaustion they return the best certificate found so far (a valid
// one-sided bound) and set exact=false.
int max_clique(const Graph& g, long long node_budget, bool& exact);
int max_independent_set(const Graph& g, long long node_budget, bool& exact);

// Best width over min-degree and min-fill greedy elimination orders.
int elimination_width(const Graph& g);

}  // namespace surround
