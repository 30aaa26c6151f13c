#include "surround/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "surround/errors.hpp"

namespace surround {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

}  // namespace

bool naive_robber_wins(const Graph& g, int k, Variant variant, std::uint64_t state_budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("graph is empty");
    if (k < 1) throw std::invalid_argument("cop count must be at least 1");

    // Ordered tuples, no canonicalization: n^k of them, times robber vertex,
    // times whose turn it is.
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples = sat_mul(tuples, static_cast<std::uint64_t>(n));
    const std::uint64_t states = sat_mul(sat_mul(tuples, static_cast<std::uint64_t>(n)), 2);
    if (states > state_budget) {
        throw budget_error("oracle state budget exceeded: " + std::to_string(states) +
                               " states required, budget " + std::to_string(state_budget),
                           states);
    }

    std::vector<std::vector<int>> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        closed[static_cast<std::size_t>(v)] = g.neighbor_list(v);
        closed[static_cast<std::size_t>(v)].push_back(v);
        std::sort(closed[static_cast<std::size_t>(v)].begin(),
                  closed[static_cast<std::size_t>(v)].end());
    }

    const std::uint64_t un = static_cast<std::uint64_t>(n);
    auto state_id = [un](std::uint64_t t, int r, int mover) {
        return (t * un + static_cast<std::uint64_t>(r)) * 2 +
               static_cast<std::uint64_t>(mover);
    };

    std::vector<char> won(states, 0);
    std::vector<char> occ(static_cast<std::size_t>(n), 0);
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    std::vector<std::size_t> ptr(static_cast<std::size_t>(k), 0);

    auto decode = [&](std::uint64_t t) {
        for (int i = 0; i < k; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(t % un);
            t /= un;
        }
    };
    auto mark = [&](char value) {
        for (int i = 0; i < k; ++i) occ[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])] = value;
    };
    auto lost = [&](int r) {
        if (variant == Variant::capture) return occ[static_cast<std::size_t>(r)] != 0;
        for (int u : g.neighbor_list(r)) {
            if (!occ[static_cast<std::size_t>(u)]) return false;
        }
        return true;
    };

    // Seed with the positions that are already lost for the robber, no matter
    // whose turn it is.
    for (std::uint64_t t = 0; t < tuples; ++t) {
        decode(t);
        mark(1);
        for (int r = 0; r < n; ++r) {
            if (lost(r)) {
                won[state_id(t, r, 0)] = 1;
                won[state_id(t, r, 1)] = 1;
            }
        }
        mark(0);
    }

    // Whole-table sweeps until nothing changes. Cop-to-move states win when
    // some simultaneous cop move reaches a winning state; robber-to-move
    // states win when every legal robber move does (a robber with no legal
    // move has lost, which the seeding above already covers).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t t = 0; t < tuples; ++t) {
            decode(t);
            mark(1);
            for (int r = 0; r < n; ++r) {
                if (!won[state_id(t, r, 0)]) {
                    std::fill(ptr.begin(), ptr.end(), 0);
                    bool found = false;
                    for (;;) {
                        std::uint64_t succ = 0;
                        std::uint64_t mul = 1;
                        for (int i = 0; i < k; ++i) {
                            const auto& choices =
                                closed[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
                            succ += static_cast<std::uint64_t>(choices[ptr[static_cast<std::size_t>(i)]]) * mul;
                            mul *= un;
                        }
                        if (won[state_id(succ, r, 1)]) {
                            found = true;
                            break;
                        }
                        int i = 0;
                        while (i < k) {
                            const auto& choices =
                                closed[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
                            if (++ptr[static_cast<std::size_t>(i)] < choices.size()) break;
                            ptr[static_cast<std::size_t>(i)] = 0;
                            ++i;
                        }
                        if (i == k) break;
                    }
                    if (found) {
                        won[state_id(t, r, 0)] = 1;
                        changed = true;
                    }
                }
                if (!won[state_id(t, r, 1)]) {
                    bool all_won = true;
                    for (int rp : closed[static_cast<std::size_t>(r)]) {
                        if (occ[static_cast<std::size_t>(rp)]) continue;
                        if (!won[state_id(t, rp, 0)]) {
                            all_won = false;
                            break;
                        }
                    }
                    if (all_won) {
                        won[state_id(t, r, 1)] = 1;
                        changed = true;
                    }
                }
            }
            mark(0);
        }
    }

    // Cops pick the opening; the robber then picks any unoccupied vertex and
    // the cops move first. The robber wins the game when every opening leaves
    // at least one surviving placement.
    for (std::uint64_t t = 0; t < tuples; ++t) {
        decode(t);
        mark(1);
        bool survives = false;
        for (int r = 0; r < n; ++r) {
            if (!occ[static_cast<std::size_t>(r)] && !won[state_id(t, r, 0)]) {
                survives = true;
                break;
            }
        }
        mark(0);
        if (!survives) return false;
    }
    return true;
}

int naive_game_number(const Graph& g, Variant variant, std::uint64_t state_budget) {
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        if (!naive_robber_wins(g, k, variant, state_budget)) return k;
    }
    // One cop per vertex leaves the robber nowhere to stand, so the scan
    // above always terminates.
    throw std::logic_error("robber survived with one cop per vertex");
}

}  // namespace surround
