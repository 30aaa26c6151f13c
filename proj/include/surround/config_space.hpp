#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "surround/graph.hpp"

namespace surround {

// A cop configuration is a sorted multiset of k vertices (cops may stack).
struct CopConfig {
    std::vector<int> positions;  // non-decreasing

    bool operator==(const CopConfig&) const = default;
    auto operator<=>(const CopConfig&) const = default;
};

// Reference successor enumeration straight from the definition: every cop
// independently stays or moves along an edge; results are canonicalized and
// deduplicated, and include the all-stay transition (the config itself).
// Small inputs only; the solver uses ConfigSpace's grouped enumeration.
std::vector<CopConfig> config_successors(const Graph& g, const CopConfig& c);

// Indexes the C(n+k-1, k) sorted multisets of k vertices by colexicographic
// rank and enumerates one-move successors without materializing duplicate
// tuples: cops stacked on a vertex contribute a combination-with-repetition
// over that vertex's closed neighborhood, and cross-group products are
// deduplicated with an epoch stamp per config. Not thread-safe per instance.
class ConfigSpace {
public:
    // Throws budget_error when C(n+k-1, k) exceeds config_budget.
    ConfigSpace(const Graph& g, int k, std::uint64_t config_budget);

    const Graph& graph() const { return *g_; }
    int cops() const { return k_; }
    std::uint64_t count() const { return count_; }

    void unrank(std::uint64_t rank, std::span<int> out) const;
    std::uint64_t rank(std::span<const int> sorted_positions) const;

    // Distinct successor configs of `rank` (including rank itself), in
    // deterministic first-discovery order.
    void successors(std::uint64_t rank, std::vector<std::uint64_t>& out) const;

    // Builds the successor adjacency once (CSR) when the total deduplicated
    // entry count fits the cap, abandoning the build the moment the cap is
    // provably exceeded; afterwards successors() serves from it. Returns
    // whether the cache is active.
    bool build_adjacency_cache(std::uint64_t max_entries);
    bool adjacency_cached() const { return csr_built_; }

    // Direct view into the cached successor row; only valid while
    // adjacency_cached().
    std::span<const std::uint32_t> cached_row(std::uint64_t rank) const {
        std::uint64_t beg = csr_offsets_[static_cast<std::size_t>(rank)];
        std::uint64_t end = csr_offsets_[static_cast<std::size_t>(rank) + 1];
        return {csr_entries_.data() + beg, static_cast<std::size_t>(end - beg)};
    }

    // Exact number of leaves the successor enumeration walks for this
    // config (per-group combination counts multiplied across groups),
    // saturating. Leaf deduplication happens after the walk, so this is the
    // real cost of successors() when no cache is active and can vastly
    // exceed the deduplicated successor count.
    std::uint64_t enumeration_cost(std::uint64_t rank) const;

private:
    std::uint64_t binom(int n, int k) const;
    void enumerate_from(std::span<const int> positions, std::vector<std::uint64_t>& out) const;

    const Graph* g_;
    int k_;
    int n_;
    std::uint64_t count_;
    std::vector<std::uint64_t> binom_;  // (n_+k_+1) x (k_+2), saturating
    int binom_cols_;

    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t epoch_ = 0;
    mutable std::vector<int> scratch_;

    bool csr_built_ = false;
    std::vector<std::uint64_t> csr_offsets_;
    std::vector<std::uint32_t> csr_entries_;
};

}  // namespace surround
