#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "surround/bounds.hpp"
#include "surround/config_space.hpp"
#include "surround/graph.hpp"

namespace surround {

// surround: cops win by occupying every neighbor of the robber's vertex.
// capture: cops win by occupying the robber's vertex itself (the classic
// game), recovered here by swapping the safe-set initialization.
enum class Variant { surround, capture };

enum class RefineMode { worklist, faithful };

struct SolveOptions {
    std::uint64_t config_budget = 5'000'000;
    RefineMode mode = RefineMode::worklist;
    // game_number: consult degree/clique/cover bounds to pin or bracket the
    // search. Disable to drive the solver alone from k = 1.
    bool use_bounds = true;
    // Upper limit on successor-enumeration work during refinement; 0 means
    // unlimited. Exceeding it raises budget_error.
    std::uint64_t op_budget = 0;
    // Successor lists are cached (CSR) when their total length fits here
    // (entries are 4 bytes each, so the default tops out near 256 MB).
    std::uint64_t adjacency_cache_entries = 64'000'000;
};

// Can cops at `c` occupy all of N(v) in a single simultaneous move? Decided
// by maximum bipartite matching between the neighbors of v and the cop
// tokens (a token at p can take target u when u is in N[p]).
bool surroundable_in_one(const Graph& g, const CopConfig& c, int v);

// Is `to` reachable from `from` in one simultaneous cop move? (Perfect
// matching between tokens with each pair within a closed neighborhood.)
bool config_move_legal(const Graph& g, const CopConfig& from, const CopConfig& to);

// Per-config safe vertex sets for the robber, over the multiset config
// space. psi starts at V minus (occupied, already surrounded, surroundable
// in one move) and only ever shrinks.
class PsiMap {
public:
    PsiMap(const Graph& g, int k, Variant variant, const SolveOptions& opts);

    const Graph& graph() const { return *g_; }
    ConfigSpace& space() { return space_; }
    const ConfigSpace& space() const { return space_; }
    int cops() const { return space_.cops(); }
    Variant variant() const { return variant_; }
    std::uint64_t config_count() const { return space_.count(); }

    std::span<std::uint64_t> psi(std::uint64_t cfg) { return row(psi_, cfg); }
    std::span<const std::uint64_t> psi(std::uint64_t cfg) const { return row(psi_, cfg); }
    std::span<const std::uint64_t> occupied(std::uint64_t cfg) const { return row(occ_, cfg); }
    std::span<const std::uint64_t> surrounded_now(std::uint64_t cfg) const { return row(b_, cfg); }
    std::span<const std::uint64_t> one_move_surround(std::uint64_t cfg) const { return row(c_, cfg); }

    VertexSet psi_set(const CopConfig& c) const;
    VertexSet occupied_set(const CopConfig& c) const;
    VertexSet surrounded_now_set(const CopConfig& c) const;
    VertexSet one_move_surround_set(const CopConfig& c) const;

    bool any_empty() const;
    bool all_empty() const;

    // out |= union of closed neighborhoods over the members of `set`.
    void closed_neighborhood_of(std::span<const std::uint64_t> set,
                                std::span<std::uint64_t> out) const;

    std::size_t words() const { return words_; }

private:
    friend PsiMap init_psi(const Graph&, int, Variant, const SolveOptions&);

    std::span<std::uint64_t> row(std::vector<std::uint64_t>& a, std::uint64_t cfg) {
        return {a.data() + cfg * words_, words_};
    }
    std::span<const std::uint64_t> row(const std::vector<std::uint64_t>& a,
                                       std::uint64_t cfg) const {
        return {a.data() + cfg * words_, words_};
    }

    const Graph* g_;
    Variant variant_;
    ConfigSpace space_;
    std::size_t words_;
    std::vector<std::uint64_t> psi_, occ_, b_, c_;
};

// PsiMap constructed and populated, before any refinement.
PsiMap init_psi(const Graph& g, int k, Variant variant, const SolveOptions& opts = {});

// Runs the edge constraints psi(T) <- psi(T) intersect N[psi(T')] to the
// greatest fixed point. worklist requeues only shrunk configs; faithful
// literally re-sweeps every product edge until a full sweep changes nothing.
// Both reach the same fixed point.
void refine_to_fixpoint(PsiMap& pm, const SolveOptions& opts = {});

// True when the robber has a winning evasion strategy against k cops, i.e.
// the refined psi is nonempty everywhere. Uses the connected-graph
// all-or-nothing property to stop early once any psi empties.
bool robber_wins(const Graph& g, int k, Variant variant, const SolveOptions& opts = {});

struct KTrial {
    int k = 0;
    bool robber_wins = false;
    double seconds = 0.0;
};

struct GameNumberResult {
    int number = 0;
    Bracket bracket;
    bool pinned_by_bounds = false;
    std::vector<KTrial> trials;
};

// Least k for which the cops win, searched upward from the bracket's lower
// end (surround) or from 1 (capture). Rejects disconnected graphs.
GameNumberResult game_number(const Graph& g, Variant variant, const SolveOptions& opts = {});

}  // namespace surround
