#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "surround/config_space.hpp"
#include "surround/graph.hpp"
#include "surround/solver.hpp"

namespace surround {

struct StrategyOptions {
    std::uint64_t config_budget = 5'000'000;
    std::uint64_t state_budget = 20'000'000;
    std::uint64_t adjacency_cache_entries = 64'000'000;
};

// Winning cop strategy computed by backward induction over
// (config, robber vertex, side to move) states, independent of the safe-set
// solver. Ranks count plies to the win; every stored cop move strictly
// decreases the rank against all robber replies.
class StrategyTable {
public:
    StrategyTable(const Graph& g, int k, Variant variant, const StrategyOptions& opts);

    static constexpr std::uint32_t kNoRank = 0xFFFFFFFFu;

    const Graph& graph() const { return *g_; }
    ConfigSpace& space() { return space_; }
    const ConfigSpace& space() const { return space_; }
    int cops() const { return space_.cops(); }
    Variant variant() const { return variant_; }
    std::uint64_t config_count() const { return space_.count(); }
    std::uint64_t state_count() const { return static_cast<std::uint64_t>(rank_.size()); }

    // mover: 0 = cops to move, 1 = robber to move.
    std::uint32_t rank(std::uint64_t cfg, int r, int mover) const {
        return rank_[state_id(cfg, r, mover)];
    }
    bool cop_win(std::uint64_t cfg, int r, int mover) const {
        return rank(cfg, r, mover) != kNoRank;
    }

    // Successor config chosen at a winning cop-to-move state; kNoMove for
    // terminal or losing states.
    static constexpr std::uint32_t kNoMove = 0xFFFFFFFFu;
    std::uint32_t cop_move(std::uint64_t cfg, int r) const {
        return cop_move_[static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n_) +
                         static_cast<std::size_t>(r)];
    }

    bool occupied(std::uint64_t cfg, int v) const {
        return setops::test(occ_row(cfg), v);
    }
    std::span<const std::uint64_t> occ_row(std::uint64_t cfg) const {
        return {occ_.data() + cfg * words_, words_};
    }

    // Game-over tests for the table's variant.
    bool robber_lost(std::uint64_t cfg, int r) const;

    // Legal robber moves from r under config cfg: (N(r) u {r}) minus occupied.
    std::vector<int> robber_moves(std::uint64_t cfg, int r) const;

    // Chosen initial config and the worst-case rank over robber placements.
    std::uint64_t initial_config() const { return initial_; }
    std::uint32_t initial_rank() const { return initial_rank_; }
    // True when the initial config leaves the robber no placement at all.
    bool immediate_win() const { return immediate_win_; }

    bool solved_for_cops() const { return solved_; }

private:
    std::size_t state_id(std::uint64_t cfg, int r, int mover) const {
        return (static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(r)) * 2 + static_cast<std::size_t>(mover);
    }

    void build();

    const Graph* g_;
    Variant variant_;
    ConfigSpace space_;
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> occ_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::uint32_t> cop_move_;
    std::uint64_t initial_ = 0;
    std::uint32_t initial_rank_ = kNoRank;
    bool immediate_win_ = false;
    bool solved_ = false;
};

// Full backward induction; returns the table when some initial config wins
// against every robber placement, nullopt when the robber wins. An
// independent check of the safe-set solver's verdict.
std::optional<StrategyTable> solve_positions(const Graph& g, int k, Variant variant,
                                             const StrategyOptions& opts = {});

struct SimulateOutcome {
    bool ok = false;
    std::string failure;
    std::uint64_t states_checked = 0;
    std::uint32_t rank_bound = 0;
    bool immediate_win = false;
};

// Plays the table's cop strategy against an exhaustive robber (every legal
// placement, every legal reply, memoized): verifies each branch ends
// surrounded/captured with strictly decreasing rank along the way.
SimulateOutcome simulate_exhaustive(const StrategyTable& table);

// Robber evasion policy read off a refined everywhere-nonempty psi: place on
// the lowest safe vertex, answer a cop move into T' from the lowest vertex of
// N[v] intersect psi(T'). Rejects psi maps with any empty entry.
class RobberPolicy {
public:
    explicit RobberPolicy(const PsiMap& pm);

    const PsiMap& psi() const { return *pm_; }
    int place(std::uint64_t cfg) const;
    int reply(int v, std::uint64_t to_cfg) const;

private:
    const PsiMap* pm_;
};

struct EvasionOutcome {
    bool ok = false;
    std::string failure;
    std::uint64_t states_checked = 0;
};

// Drives the policy against exhaustive cop play (every initial config, every
// legal cop move, repetition-detected): verifies the robber is never
// surrounded/captured and always has a legal reply. Takes the map mutably to
// build its successor cache.
EvasionOutcome verify_evasion(PsiMap& pm, std::uint64_t state_budget = 20'000'000);

}  // namespace surround
