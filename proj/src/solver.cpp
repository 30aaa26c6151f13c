#include "surround/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "surround/errors.hpp"

namespace surround {

namespace {

// Kuhn augmenting-path matching: can the tokens cover every target, each
// token used at most once? Token i may take target j when cover(i, j).
template <class Cover>
bool saturates(int targets, int tokens, Cover cover) {
    if (targets > tokens) return false;
    std::vector<int> owner(static_cast<std::size_t>(tokens), -1);
    std::vector<char> tried(static_cast<std::size_t>(tokens));
    auto augment = [&](auto&& self, int j) -> bool {
        for (int i = 0; i < tokens; ++i) {
            if (tried[static_cast<std::size_t>(i)] || !cover(i, j)) continue;
            tried[static_cast<std::size_t>(i)] = 1;
            if (owner[static_cast<std::size_t>(i)] < 0 || self(self, owner[static_cast<std::size_t>(i)])) {
                owner[static_cast<std::size_t>(i)] = j;
                return true;
            }
        }
        return false;
    };
    for (int j = 0; j < targets; ++j) {
        std::fill(tried.begin(), tried.end(), 0);
        if (!augment(augment, j)) return false;
    }
    return true;
}

bool surroundable_in_one_impl(const Graph& g, std::span<const int> cops, int v) {
    const auto& targets = g.neighbor_list(v);
    return saturates(static_cast<int>(targets.size()), static_cast<int>(cops.size()),
                     [&](int i, int j) {
                         return g.closed_neighbors(cops[static_cast<std::size_t>(i)])
                             .test(targets[static_cast<std::size_t>(j)]);
                     });
}

}  // namespace

bool surroundable_in_one(const Graph& g, const CopConfig& c, int v) {
    return surroundable_in_one_impl(g, c.positions, v);
}

bool config_move_legal(const Graph& g, const CopConfig& from, const CopConfig& to) {
    if (from.positions.size() != to.positions.size()) return false;
    for (int p : to.positions)
        if (p < 0 || p >= g.order()) return false;
    return saturates(static_cast<int>(to.positions.size()), static_cast<int>(from.positions.size()),
                     [&](int i, int j) {
                         return g.closed_neighbors(from.positions[static_cast<std::size_t>(i)])
                             .test(to.positions[static_cast<std::size_t>(j)]);
                     });
}

PsiMap::PsiMap(const Graph& g, int k, Variant variant, const SolveOptions& opts)
    : g_(&g), variant_(variant), space_(g, k, opts.config_budget), words_(g.words_per_set()) {
    const std::uint64_t count = space_.count();
    psi_.assign(count * words_, 0);
    occ_.assign(count * words_, 0);
    b_.assign(count * words_, 0);
    c_.assign(count * words_, 0);
}

VertexSet PsiMap::psi_set(const CopConfig& c) const {
    VertexSet out(g_->order());
    auto r = psi(space_.rank(c.positions));
    std::copy(r.begin(), r.end(), out.words().begin());
    return out;
}

VertexSet PsiMap::occupied_set(const CopConfig& c) const {
    VertexSet out(g_->order());
    auto r = occupied(space_.rank(c.positions));
    std::copy(r.begin(), r.end(), out.words().begin());
    return out;
}

VertexSet PsiMap::surrounded_now_set(const CopConfig& c) const {
    VertexSet out(g_->order());
    auto r = surrounded_now(space_.rank(c.positions));
    std::copy(r.begin(), r.end(), out.words().begin());
    return out;
}

VertexSet PsiMap::one_move_surround_set(const CopConfig& c) const {
    VertexSet out(g_->order());
    auto r = one_move_surround(space_.rank(c.positions));
    std::copy(r.begin(), r.end(), out.words().begin());
    return out;
}

bool PsiMap::any_empty() const {
    for (std::uint64_t cfg = 0; cfg < config_count(); ++cfg)
        if (setops::is_empty(psi(cfg))) return true;
    return false;
}

bool PsiMap::all_empty() const {
    for (std::uint64_t cfg = 0; cfg < config_count(); ++cfg)
        if (!setops::is_empty(psi(cfg))) return false;
    return true;
}

void PsiMap::closed_neighborhood_of(std::span<const std::uint64_t> set,
                                    std::span<std::uint64_t> out) const {
    setops::clear(out);
    setops::for_each(set, [&](int v) { setops::or_into(out, g_->closed_neighbors(v).words()); });
}

PsiMap init_psi(const Graph& g, int k, Variant variant, const SolveOptions& opts) {
    if (!g.connected()) throw disconnected_error("solver requires a connected graph");
    if (k < 1 || k > g.order()) {
        std::ostringstream os;
        os << "cop count " << k << " outside [1," << g.order() << "]";
        throw parse_error(os.str());
    }

    PsiMap pm(g, k, variant, opts);
    const int n = g.order();
    const std::uint64_t count = pm.config_count();
    std::vector<int> pos(static_cast<std::size_t>(k));

    for (std::uint64_t cfg = 0; cfg < count; ++cfg) {
        pm.space().unrank(cfg, pos);
        auto occ = pm.row(pm.occ_, cfg);
        for (int p : pos) occ[static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);

        auto b = pm.row(pm.b_, cfg);
        auto c = pm.row(pm.c_, cfg);
        if (variant == Variant::surround) {
            for (int v = 0; v < n; ++v) {
                auto nb = g.open_neighbors(v).words();
                bool inside = true;
                for (std::size_t w = 0; w < nb.size(); ++w)
                    if (nb[w] & ~occ[w]) {
                        inside = false;
                        break;
                    }
                if (inside) b[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
                if (g.degree(v) <= k && surroundable_in_one_impl(g, pos, v))
                    c[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
            }
        } else {
            // capture: standing on the robber is the win, so the unsafe zone
            // is the occupied set and everything reachable by one cop step.
            std::copy(occ.begin(), occ.end(), b.begin());
            pm.closed_neighborhood_of(occ, c);
        }

        auto psi = pm.row(pm.psi_, cfg);
        for (int v = 0; v < n; ++v)
            psi[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
        for (std::size_t w = 0; w < psi.size(); ++w) psi[w] &= ~(occ[w] | b[w] | c[w]);
    }
    return pm;
}

namespace {

struct RefineOutcome {
    bool emptied = false;
};

class OpCounter {
public:
    explicit OpCounter(std::uint64_t budget) : budget_(budget) {}
    void charge(std::uint64_t n) {
        if (budget_ == 0) return;
        used_ += n;
        if (used_ > budget_) {
            std::ostringstream os;
            os << "refinement op budget exceeded: " << used_ << " > " << budget_;
            throw budget_error(os.str(), used_);
        }
    }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

RefineOutcome refine_worklist(PsiMap& pm, const SolveOptions& opts, bool stop_on_empty) {
    const std::uint64_t count = pm.config_count();
    RefineOutcome out;
    if (stop_on_empty && pm.any_empty()) {
        out.emptied = true;
        return out;
    }

    ConfigSpace& space = pm.space();
    space.build_adjacency_cache(opts.adjacency_cache_entries);
    OpCounter ops(opts.op_budget);

    std::deque<std::uint32_t> queue;
    std::vector<std::uint8_t> queued(static_cast<std::size_t>(count), 1);
    for (std::uint64_t cfg = 0; cfg < count; ++cfg) queue.push_back(static_cast<std::uint32_t>(cfg));

    std::vector<std::uint64_t> reach(pm.words());
    std::vector<std::uint64_t> nbrs;

    auto filter_neighbor = [&](std::uint32_t src, std::uint64_t t) -> bool {
        if (t == src) return false;
        if (!setops::and_into(pm.psi(t), reach)) return false;
        if (stop_on_empty && setops::is_empty(pm.psi(t))) return true;
        if (!queued[static_cast<std::size_t>(t)]) {
            queued[static_cast<std::size_t>(t)] = 1;
            queue.push_back(static_cast<std::uint32_t>(t));
        }
        return false;
    };

    while (!queue.empty()) {
        std::uint32_t src = queue.front();
        queue.pop_front();
        queued[src] = 0;

        pm.closed_neighborhood_of(pm.psi(src), reach);
        if (space.adjacency_cached()) {
            auto row = space.cached_row(src);
            ops.charge(row.size() + 1);
            for (std::uint32_t t : row)
                if (filter_neighbor(src, t)) {
                    out.emptied = true;
                    return out;
                }
        } else {
            // Uncached: the enumeration walk is the real cost, and it can
            // vastly exceed the deduplicated successor count, so bill it
            // before walking.
            ops.charge(space.enumeration_cost(src) + 1);
            space.successors(src, nbrs);
            for (std::uint64_t t : nbrs)
                if (filter_neighbor(src, t)) {
                    out.emptied = true;
                    return out;
                }
        }
    }
    out.emptied = pm.any_empty();
    return out;
}

RefineOutcome refine_faithful(PsiMap& pm, const SolveOptions& opts, bool stop_on_empty) {
    const std::uint64_t count = pm.config_count();
    RefineOutcome out;
    if (stop_on_empty && pm.any_empty()) {
        out.emptied = true;
        return out;
    }

    ConfigSpace& space = pm.space();
    space.build_adjacency_cache(opts.adjacency_cache_entries);
    OpCounter ops(opts.op_budget);

    std::vector<std::uint64_t> reach(pm.words());
    std::vector<std::uint64_t> nbrs;

    // Literal repeat-until-unchanged sweeps; each product edge is visited
    // once per sweep (from its lower-ranked endpoint) and both endpoint
    // updates run in place.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t t1 = 0; t1 < count; ++t1) {
            if (!space.adjacency_cached()) ops.charge(space.enumeration_cost(t1));
            space.successors(t1, nbrs);
            ops.charge(nbrs.size() + 1);
            for (std::uint64_t t2 : nbrs) {
                if (t2 <= t1) continue;
                pm.closed_neighborhood_of(pm.psi(t2), reach);
                changed |= setops::and_into(pm.psi(t1), reach);
                pm.closed_neighborhood_of(pm.psi(t1), reach);
                changed |= setops::and_into(pm.psi(t2), reach);
                if (stop_on_empty &&
                    (setops::is_empty(pm.psi(t1)) || setops::is_empty(pm.psi(t2)))) {
                    out.emptied = true;
                    return out;
                }
            }
        }
    }
    out.emptied = pm.any_empty();
    return out;
}

RefineOutcome refine(PsiMap& pm, const SolveOptions& opts, bool stop_on_empty) {
    return opts.mode == RefineMode::worklist ? refine_worklist(pm, opts, stop_on_empty)
                                             : refine_faithful(pm, opts, stop_on_empty);
}

}  // namespace

void refine_to_fixpoint(PsiMap& pm, const SolveOptions& opts) { refine(pm, opts, false); }

bool robber_wins(const Graph& g, int k, Variant variant, const SolveOptions& opts) {
    PsiMap pm = init_psi(g, k, variant, opts);
    RefineOutcome out = refine(pm, opts, true);
    return !out.emptied;
}

GameNumberResult game_number(const Graph& g, Variant variant, const SolveOptions& opts) {
    if (!g.connected()) throw disconnected_error("game number requires a connected graph");

    GameNumberResult res;
    if (opts.use_bounds) {
        res.bracket = sigma_bracket(g);
    } else {
        res.bracket = Bracket{1, g.order()};
    }

    const bool surround_game = variant == Variant::surround;
    if (opts.use_bounds) {
        if (surround_game && res.bracket.lo == res.bracket.hi) {
            res.number = res.bracket.lo;
            res.pinned_by_bounds = true;
            return res;
        }
        if (!surround_game && res.bracket.hi == 1) {
            // c <= sigma <= 1 forces one cop.
            res.number = 1;
            res.pinned_by_bounds = true;
            return res;
        }
    }

    int k = surround_game ? res.bracket.lo : 1;
    for (; k <= res.bracket.hi; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        bool rw = robber_wins(g, k, variant, opts);
        auto t1 = std::chrono::steady_clock::now();
        res.trials.push_back(KTrial{k, rw, std::chrono::duration<double>(t1 - t0).count()});
        if (!rw) {
            res.number = k;
            return res;
        }
    }
    throw std::logic_error("robber survived at the proven upper bound; solver or bounds bug");
}

}  // namespace surround
