#include "surround/config_space.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "surround/errors.hpp"

namespace surround {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? kSat : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

}  // namespace

std::vector<CopConfig> config_successors(const Graph& g, const CopConfig& c) {
    const int k = static_cast<int>(c.positions.size());
    std::vector<CopConfig> out;
    std::vector<int> moved(static_cast<std::size_t>(k));
    // Odometer over each cop's closed neighborhood.
    std::vector<int> digit(static_cast<std::size_t>(k), 0);
    for (;;) {
        for (int i = 0; i < k; ++i) {
            const auto& choices = g.neighbor_list(c.positions[static_cast<std::size_t>(i)]);
            int d = digit[static_cast<std::size_t>(i)];
            moved[static_cast<std::size_t>(i)] =
                d == 0 ? c.positions[static_cast<std::size_t>(i)] : choices[static_cast<std::size_t>(d - 1)];
        }
        CopConfig succ{moved};
        std::sort(succ.positions.begin(), succ.positions.end());
        out.push_back(std::move(succ));

        int i = k - 1;
        while (i >= 0) {
            int limit = g.degree(c.positions[static_cast<std::size_t>(i)]) + 1;
            if (++digit[static_cast<std::size_t>(i)] < limit) break;
            digit[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ConfigSpace::ConfigSpace(const Graph& g, int k, std::uint64_t config_budget)
    : g_(&g), k_(k), n_(g.order()) {
    if (k < 1) throw parse_error("cop count must be at least 1");

    binom_cols_ = k_ + 2;
    int rows = n_ + k_ + 1;
    binom_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(binom_cols_), 0);
    for (int i = 0; i < rows; ++i) {
        binom_[static_cast<std::size_t>(i) * static_cast<std::size_t>(binom_cols_)] = 1;
        for (int j = 1; j < binom_cols_ && j <= i; ++j) {
            std::uint64_t up = binom(i - 1, j);
            std::uint64_t diag = binom(i - 1, j - 1);
            binom_[static_cast<std::size_t>(i) * static_cast<std::size_t>(binom_cols_) +
                   static_cast<std::size_t>(j)] = sat_add(up, diag);
        }
    }

    count_ = binom(n_ + k_ - 1, k_);
    if (count_ > config_budget) {
        std::ostringstream os;
        os << "config budget exceeded: " << count_ << " configs required, budget "
           << config_budget;
        throw budget_error(os.str(), count_);
    }
    scratch_.resize(static_cast<std::size_t>(k_));
}

std::uint64_t ConfigSpace::binom(int n, int k) const {
    if (k < 0 || k >= binom_cols_ || n < 0) return 0;
    if (k > n) return 0;
    return binom_[static_cast<std::size_t>(n) * static_cast<std::size_t>(binom_cols_) +
                  static_cast<std::size_t>(k)];
}

// Colex ranking through the standard multiset-to-combination shift: the
// sorted multiset (v_0 <= ... <= v_{k-1}) maps to the strictly increasing
// combination w_i = v_i + i, whose colex rank is sum C(w_i, i+1).
std::uint64_t ConfigSpace::rank(std::span<const int> sorted_positions) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i)
        r += binom(sorted_positions[static_cast<std::size_t>(i)] + i, i + 1);
    return r;
}

void ConfigSpace::unrank(std::uint64_t rank, std::span<int> out) const {
    std::uint64_t rem = rank;
    int w = n_ + k_ - 1;
    for (int i = k_ - 1; i >= 0; --i) {
        while (binom(w, i + 1) > rem) --w;
        rem -= binom(w, i + 1);
        out[static_cast<std::size_t>(i)] = w - i;
    }
}

std::uint64_t ConfigSpace::enumeration_cost(std::uint64_t rank) const {
    unrank(rank, scratch_);
    std::uint64_t cost = 1;
    for (int i = 0; i < k_;) {
        int j = i;
        while (j < k_ && scratch_[static_cast<std::size_t>(j)] == scratch_[static_cast<std::size_t>(i)]) ++j;
        int cnt = j - i;
        int choices = g_->degree(scratch_[static_cast<std::size_t>(i)]) + 1;
        cost = sat_mul(cost, binom(choices + cnt - 1, cnt));
        i = j;
    }
    return cost;
}

void ConfigSpace::enumerate_from(std::span<const int> positions,
                                 std::vector<std::uint64_t>& out) const {
    if (stamp_.empty()) stamp_.assign(static_cast<std::size_t>(count_), 0);
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }

    // Group stacked cops; each group walks combinations-with-repetition over
    // its vertex's closed neighborhood, recursing across groups.
    struct Group {
        const std::vector<int>* choices;  // sorted closed neighborhood
        int count;
    };
    std::vector<Group> groups;
    std::vector<std::vector<int>> closed_lists;
    for (int i = 0; i < k_;) {
        int j = i;
        while (j < k_ && positions[static_cast<std::size_t>(j)] == positions[static_cast<std::size_t>(i)]) ++j;
        closed_lists.push_back(
            g_->closed_neighbors(positions[static_cast<std::size_t>(i)]).to_vector());
        groups.push_back(Group{nullptr, j - i});
        i = j;
    }
    for (std::size_t gi = 0; gi < groups.size(); ++gi) groups[gi].choices = &closed_lists[gi];

    std::vector<int> buf(static_cast<std::size_t>(k_));
    std::vector<int> sorted(static_cast<std::size_t>(k_));

    auto emit = [&] {
        sorted.assign(buf.begin(), buf.end());
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t r = rank(sorted);
        if (stamp_[static_cast<std::size_t>(r)] != epoch_) {
            stamp_[static_cast<std::size_t>(r)] = epoch_;
            out.push_back(r);
        }
    };

    // DFS over (group, slot-within-group) with non-decreasing choice indices
    // inside each group, so within-group permutations are never generated.
    auto rec = [&](auto&& self, std::size_t gi, int slot, int min_choice, int pos) -> void {
        if (gi == groups.size()) {
            emit();
            return;
        }
        const Group& grp = groups[gi];
        const auto& choices = *grp.choices;
        for (int ci = min_choice; ci < static_cast<int>(choices.size()); ++ci) {
            buf[static_cast<std::size_t>(pos)] = choices[static_cast<std::size_t>(ci)];
            if (slot + 1 == grp.count)
                self(self, gi + 1, 0, 0, pos + 1);
            else
                self(self, gi, slot + 1, ci, pos + 1);
        }
    };
    rec(rec, 0, 0, 0, 0);
}

void ConfigSpace::successors(std::uint64_t rank_in, std::vector<std::uint64_t>& out) const {
    out.clear();
    if (csr_built_) {
        std::uint64_t beg = csr_offsets_[static_cast<std::size_t>(rank_in)];
        std::uint64_t end = csr_offsets_[static_cast<std::size_t>(rank_in) + 1];
        out.assign(csr_entries_.begin() + static_cast<std::ptrdiff_t>(beg),
                   csr_entries_.begin() + static_cast<std::ptrdiff_t>(end));
        return;
    }
    unrank(rank_in, scratch_);
    enumerate_from(scratch_, out);
}

bool ConfigSpace::build_adjacency_cache(std::uint64_t max_entries) {
    if (csr_built_) return true;
    if (count_ > std::numeric_limits<std::uint32_t>::max()) return false;
    // Every row holds at least the all-stay successor, so this refusal is
    // certain without enumerating anything.
    if (count_ > max_entries) return false;
    // The enumeration walk visits every per-group combination before leaf
    // deduplication, so its cost can dwarf the deduplicated entry count on
    // dense graphs with many cops. Refuse to spend an unbounded walk on a
    // cache that may be abandoned anyway.
    constexpr std::uint64_t kMaxBuildWalk = 2'000'000'000;
    std::uint64_t walk = 0;
    for (std::uint64_t r = 0; r < count_; ++r) {
        walk = sat_add(walk, enumeration_cost(r));
        if (walk > kMaxBuildWalk) return false;
    }
    csr_offsets_.assign(static_cast<std::size_t>(count_) + 1, 0);
    csr_entries_.clear();
    std::vector<std::uint64_t> row;
    for (std::uint64_t r = 0; r < count_; ++r) {
        unrank(r, scratch_);
        row.clear();
        enumerate_from(scratch_, row);
        if (csr_entries_.size() + row.size() > max_entries) {
            // The cap is on true deduplicated entries; give the memory back
            // and let callers fall through to on-the-fly enumeration.
            csr_offsets_.clear();
            csr_offsets_.shrink_to_fit();
            csr_entries_.clear();
            csr_entries_.shrink_to_fit();
            return false;
        }
        for (std::uint64_t s : row) csr_entries_.push_back(static_cast<std::uint32_t>(s));
        csr_offsets_[static_cast<std::size_t>(r) + 1] = csr_entries_.size();
    }
    csr_built_ = true;
    return true;
}

}  // namespace surround
