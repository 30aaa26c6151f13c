#include "surround/strategy.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "surround/errors.hpp"

namespace surround {

StrategyTable::StrategyTable(const Graph& g, int k, Variant variant, const StrategyOptions& opts)
    : g_(&g),
      variant_(variant),
      space_(g, k, opts.config_budget),
      n_(g.order()),
      words_(g.words_per_set()) {
    const std::uint64_t states = space_.count() * static_cast<std::uint64_t>(n_) * 2;
    if (states > opts.state_budget || states > std::numeric_limits<std::uint32_t>::max()) {
        std::ostringstream os;
        os << "strategy state budget exceeded: " << states << " states required";
        throw budget_error(os.str(), states);
    }
    if (!space_.build_adjacency_cache(opts.adjacency_cache_entries)) {
        std::ostringstream os;
        os << "strategy requires the successor cache; entry budget "
           << opts.adjacency_cache_entries << " is too small";
        throw budget_error(os.str());
    }

    occ_.assign(space_.count() * words_, 0);
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (std::uint64_t cfg = 0; cfg < space_.count(); ++cfg) {
        space_.unrank(cfg, pos);
        auto row = std::span<std::uint64_t>{occ_.data() + cfg * words_, words_};
        for (int p : pos) row[static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);
    }
    rank_.assign(static_cast<std::size_t>(states), kNoRank);
    cop_move_.assign(static_cast<std::size_t>(space_.count()) * static_cast<std::size_t>(n_),
                     kNoMove);
    build();
}

bool StrategyTable::robber_lost(std::uint64_t cfg, int r) const {
    if (variant_ == Variant::capture) return occupied(cfg, r);
    auto nb = g_->open_neighbors(r).words();
    auto occ = occ_row(cfg);
    for (std::size_t w = 0; w < nb.size(); ++w)
        if (nb[w] & ~occ[w]) return false;
    return true;
}

std::vector<int> StrategyTable::robber_moves(std::uint64_t cfg, int r) const {
    std::vector<int> out;
    if (!occupied(cfg, r)) out.push_back(r);
    for (int w : g_->neighbor_list(r))
        if (!occupied(cfg, w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

void StrategyTable::build() {
    const std::uint64_t count = space_.count();
    const int n = n_;

    // Escapes left per robber-to-move state; a state whose counter empties is
    // cop-won because every robber reply is.
    std::vector<std::uint16_t> escapes(static_cast<std::size_t>(count) *
                                       static_cast<std::size_t>(n));
    std::deque<std::uint32_t> queue;

    auto push_won = [&](std::uint64_t cfg, int r, int mover, std::uint32_t rk) {
        std::size_t id = state_id(cfg, r, mover);
        rank_[id] = rk;
        queue.push_back(static_cast<std::uint32_t>(id));
    };

    for (std::uint64_t cfg = 0; cfg < count; ++cfg) {
        for (int r = 0; r < n; ++r) {
            bool lost = robber_lost(cfg, r);
            std::size_t moves = robber_moves(cfg, r).size();
            escapes[static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(r)] = static_cast<std::uint16_t>(moves);
            if (lost || moves == 0) {
                // A robber with no legal move is treated as caught (for the
                // surround game this coincides with being surrounded).
                push_won(cfg, r, 0, 0);
                push_won(cfg, r, 1, 0);
            }
        }
    }

    while (!queue.empty()) {
        std::uint32_t id = queue.front();
        queue.pop_front();
        const int mover = static_cast<int>(id & 1);
        const std::uint64_t cfg_r = id >> 1;
        const int r = static_cast<int>(cfg_r % static_cast<std::uint64_t>(n));
        const std::uint64_t cfg = cfg_r / static_cast<std::uint64_t>(n);
        const std::uint32_t rk = rank_[id];

        if (mover == 1) {
            // Robber-to-move state, reached by a cop move into cfg: every
            // adjacent config (pass included) yields a cop-to-move
            // predecessor with the same robber vertex.
            for (std::uint32_t pcfg : space_.cached_row(cfg)) {
                std::size_t pid = state_id(pcfg, r, 0);
                if (rank_[pid] != kNoRank) continue;
                rank_[pid] = rk + 1;
                queue.push_back(static_cast<std::uint32_t>(pid));
            }
        } else {
            // Cop-to-move state, reached by a robber move to r (which
            // requires r unoccupied under cfg).
            if (occupied(cfg, r)) continue;
            for (int rp : g_->neighbor_list(r)) {
                std::size_t pid = state_id(cfg, rp, 1);
                if (rank_[pid] != kNoRank) continue;
                auto& left = escapes[static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n) +
                                     static_cast<std::size_t>(rp)];
                if (--left == 0) {
                    rank_[pid] = rk + 1;
                    queue.push_back(static_cast<std::uint32_t>(pid));
                }
            }
            // The pass edge r -> r.
            std::size_t pid = state_id(cfg, r, 1);
            if (rank_[pid] == kNoRank) {
                auto& left = escapes[static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n) +
                                     static_cast<std::size_t>(r)];
                if (--left == 0) {
                    rank_[pid] = rk + 1;
                    queue.push_back(static_cast<std::uint32_t>(pid));
                }
            }
        }
    }

    // Deterministic move selection: lowest (reply rank, successor config).
    for (std::uint64_t cfg = 0; cfg < count; ++cfg) {
        for (int r = 0; r < n; ++r) {
            std::size_t id = state_id(cfg, r, 0);
            if (rank_[id] == kNoRank || rank_[id] == 0) continue;
            std::uint32_t best_rank = kNoRank;
            std::uint32_t best_cfg = kNoMove;
            for (std::uint32_t scfg : space_.cached_row(cfg)) {
                std::uint32_t rk = rank_[state_id(scfg, r, 1)];
                if (rk == kNoRank) continue;
                if (rk < best_rank || (rk == best_rank && scfg < best_cfg)) {
                    best_rank = rk;
                    best_cfg = scfg;
                }
            }
            cop_move_[static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(r)] = best_cfg;
        }
    }

    // Initial config: minimize the worst-case rank over legal placements;
    // ties go to the lowest config rank. A config leaving no placement wins
    // outright.
    initial_rank_ = kNoRank;
    for (std::uint64_t cfg = 0; cfg < count; ++cfg) {
        std::uint32_t worst = 0;
        bool all_won = true;
        bool any_placement = false;
        for (int r = 0; r < n && all_won; ++r) {
            if (occupied(cfg, r)) continue;
            any_placement = true;
            std::uint32_t rk = rank_[state_id(cfg, r, 0)];
            if (rk == kNoRank)
                all_won = false;
            else
                worst = std::max(worst, rk);
        }
        if (!all_won) continue;
        if (!any_placement) worst = 0;
        if (initial_rank_ == kNoRank || worst < initial_rank_) {
            initial_rank_ = worst;
            initial_ = cfg;
            immediate_win_ = !any_placement;
        }
    }
    solved_ = initial_rank_ != kNoRank;
}

std::optional<StrategyTable> solve_positions(const Graph& g, int k, Variant variant,
                                             const StrategyOptions& opts) {
    if (!g.connected()) throw disconnected_error("strategy requires a connected graph");
    if (k < 1 || k > g.order()) {
        std::ostringstream os;
        os << "cop count " << k << " outside [1," << g.order() << "]";
        throw parse_error(os.str());
    }
    StrategyTable table(g, k, variant, opts);
    if (!table.solved_for_cops()) return std::nullopt;
    return table;
}

SimulateOutcome simulate_exhaustive(const StrategyTable& table) {
    SimulateOutcome out;
    out.rank_bound = table.initial_rank();
    out.immediate_win = table.immediate_win();
    if (!table.solved_for_cops()) {
        out.failure = "table does not certify a cop win";
        return out;
    }

    const Graph& g = table.graph();
    const int n = g.order();
    const std::uint64_t cfg0 = table.initial_config();

    auto fail = [&](std::uint64_t cfg, int r, const std::string& why) {
        std::ostringstream os;
        os << "state (config " << cfg << ", robber " << g.label(r) << "): " << why;
        out.failure = os.str();
        return out;
    };

    std::vector<char> visited(static_cast<std::size_t>(table.config_count()) *
                                  static_cast<std::size_t>(n),
                              0);
    std::deque<std::pair<std::uint64_t, int>> queue;

    for (int r = 0; r < n; ++r) {
        if (table.occupied(cfg0, r)) continue;
        if (!table.cop_win(cfg0, r, 0))
            return fail(cfg0, r, "placement escapes the initial config");
        queue.emplace_back(cfg0, r);
        visited[static_cast<std::size_t>(cfg0) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(r)] = 1;
    }

    while (!queue.empty()) {
        auto [cfg, r] = queue.front();
        queue.pop_front();
        ++out.states_checked;

        std::uint32_t rk = table.rank(cfg, r, 0);
        if (rk == StrategyTable::kNoRank) return fail(cfg, r, "reached a losing state");
        if (table.robber_lost(cfg, r)) continue;  // game over before the cop move

        std::uint32_t mv = table.cop_move(cfg, r);
        if (mv == StrategyTable::kNoMove) return fail(cfg, r, "no stored cop move");
        std::uint32_t rk_after = table.rank(mv, r, 1);
        if (rk_after == StrategyTable::kNoRank || rk_after >= rk)
            return fail(cfg, r, "cop move does not reduce rank");
        if (table.robber_lost(mv, r)) continue;  // surrounded by the move itself

        auto moves = table.robber_moves(mv, r);
        if (moves.empty()) continue;  // stuck robber counts as caught
        for (int r2 : moves) {
            std::uint32_t rk2 = table.rank(mv, r2, 0);
            if (rk2 == StrategyTable::kNoRank || rk2 >= rk_after)
                return fail(mv, r2, "robber reply does not reduce rank");
            std::size_t vid = static_cast<std::size_t>(mv) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(r2);
            if (!visited[vid]) {
                visited[vid] = 1;
                queue.emplace_back(mv, r2);
            }
        }
    }
    out.ok = true;
    return out;
}

RobberPolicy::RobberPolicy(const PsiMap& pm) : pm_(&pm) {
    for (std::uint64_t cfg = 0; cfg < pm.config_count(); ++cfg)
        if (setops::is_empty(pm.psi(cfg)))
            throw std::invalid_argument("robber policy needs psi nonempty everywhere");
}

int RobberPolicy::place(std::uint64_t cfg) const {
    auto row = pm_->psi(cfg);
    int v = -1;
    setops::for_each(row, [&](int u) {
        if (v < 0) v = u;
    });
    return v;
}

int RobberPolicy::reply(int v, std::uint64_t to_cfg) const {
    auto safe = pm_->psi(to_cfg);
    const auto& reach = pm_->graph().closed_neighbors(v);
    int best = -1;
    setops::for_each(safe, [&](int u) {
        if (best < 0 && reach.test(u)) best = u;
    });
    return best;
}

EvasionOutcome verify_evasion(PsiMap& pm, std::uint64_t state_budget) {
    EvasionOutcome out;
    RobberPolicy policy(pm);
    const Graph& g = pm.graph();
    const int n = g.order();
    const std::uint64_t count = pm.config_count();

    ConfigSpace& space = pm.space();
    if (!space.build_adjacency_cache(64'000'000)) {
        out.failure = "successor cache too large for evasion check";
        return out;
    }

    auto fail = [&](std::uint64_t cfg, int v, const std::string& why) {
        std::ostringstream os;
        os << "config " << cfg << ", robber " << g.label(v) << ": " << why;
        out.failure = os.str();
        return out;
    };

    std::vector<char> visited(static_cast<std::size_t>(count) * static_cast<std::size_t>(n), 0);
    std::deque<std::pair<std::uint64_t, int>> queue;
    auto push = [&](std::uint64_t cfg, int v) {
        std::size_t id = static_cast<std::size_t>(cfg) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(v);
        if (!visited[id]) {
            visited[id] = 1;
            queue.emplace_back(cfg, v);
        }
    };

    for (std::uint64_t cfg = 0; cfg < count; ++cfg) {
        int v = policy.place(cfg);
        if (v < 0) return fail(cfg, 0, "no placement");
        if (setops::test(pm.occupied(cfg), v)) return fail(cfg, v, "placed on a cop");
        push(cfg, v);
    }

    auto robber_caught = [&](std::uint64_t cfg, int v) {
        if (pm.variant() == Variant::capture) return setops::test(pm.occupied(cfg), v);
        auto nb = g.open_neighbors(v).words();
        auto occ = pm.occupied(cfg);
        for (std::size_t w = 0; w < nb.size(); ++w)
            if (nb[w] & ~occ[w]) return false;
        return true;
    };

    while (!queue.empty()) {
        auto [cfg, v] = queue.front();
        queue.pop_front();
        if (++out.states_checked > state_budget) {
            out.failure = "evasion state budget exceeded";
            return out;
        }
        if (robber_caught(cfg, v)) return fail(cfg, v, "robber caught on his own turn");

        for (std::uint32_t to : space.cached_row(cfg)) {
            if (robber_caught(to, v)) return fail(to, v, "cop move catches the policy robber");
            int v2 = policy.reply(v, to);
            if (v2 < 0) return fail(to, v, "policy has no reply");
            if (!g.closed_neighbors(v).test(v2)) return fail(to, v, "reply is not adjacent");
            if (setops::test(pm.occupied(to), v2)) return fail(to, v2, "reply lands on a cop");
            push(to, v2);
        }
    }
    out.ok = true;
    return out;
}

}  // namespace surround
