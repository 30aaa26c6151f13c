// Shared test utilities: a connected-graph corpus up to isomorphism,
// brute-force reference computations, seeded random graphs, and an
// independent graph6 decoder. Everything here is deliberately simple and
// slow so it can serve as ground truth for the production code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surround/graph.hpp"

namespace testhelp {

// ---------------------------------------------------------------------------
// Connected graphs on n <= 6 vertices, one representative per isomorphism
// class. Enumerates every labeled graph as an edge bitmask and canonizes by
// minimizing over all vertex permutations.

inline std::vector<std::pair<int, int>> mask_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

inline bool mask_connected(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int comps = n;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (!(mask >> b & 1u)) continue;
        int ra = find(pairs[b].first), rb = find(pairs[b].second);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --comps;
        }
    }
    return comps == 1;
}

// Canonical edge masks of all connected graphs on exactly n vertices.
inline const std::vector<std::uint32_t>& connected_corpus_masks(int n) {
    static std::map<int, std::vector<std::uint32_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const auto pairs = mask_pairs(n);
    const int m = static_cast<int>(pairs.size());
    // bit index lookup for remapping under a permutation
    std::vector<std::vector<int>> bit_of(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int b = 0; b < m; ++b) {
        bit_of[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].first)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].second)] = b;
        bit_of[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].second)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].first)] = b;
    }
    // precompute, for every permutation, where each bit goes
    std::vector<std::vector<int>> perm_maps;
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> bm(static_cast<std::size_t>(m));
            for (int b = 0; b < m; ++b) {
                const auto [i, j] = pairs[static_cast<std::size_t>(b)];
                bm[static_cast<std::size_t>(b)] =
                    bit_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            }
            perm_maps.push_back(std::move(bm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::set<std::uint32_t> seen;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (!mask_connected(n, mask, pairs)) continue;
        std::uint32_t canon = mask;
        for (const auto& bm : perm_maps) {
            std::uint32_t remapped = 0;
            std::uint32_t rest = mask;
            while (rest) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                remapped |= 1u << bm[static_cast<std::size_t>(b)];
            }
            canon = std::min(canon, remapped);
        }
        if (seen.insert(canon).second) out.push_back(canon);
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
}

inline surround::Graph graph_from_mask(int n, std::uint32_t mask) {
    const auto pairs = mask_pairs(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1u) edges.push_back(pairs[b]);
    }
    return surround::Graph::from_edges(n, edges);
}

inline std::vector<surround::Graph> connected_corpus(int n) {
    std::vector<surround::Graph> out;
    for (std::uint32_t mask : connected_corpus_masks(n)) out.push_back(graph_from_mask(n, mask));
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force references.

inline int brute_clique(const surround::Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(s >> i & 1u)) continue;
            for (int j = i + 1; j < n && ok; ++j) {
                if ((s >> j & 1u) && !g.adjacent(i, j)) ok = false;
            }
        }
        if (ok) best = size;
    }
    return best;
}

inline int brute_independent(const surround::Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(s >> i & 1u)) continue;
            for (int j = i + 1; j < n && ok; ++j) {
                if ((s >> j & 1u) && g.adjacent(i, j)) ok = false;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Shortest cycle via edge deletion: for every edge uv, the shortest u-v path
// avoiding that edge plus the edge itself is a candidate cycle.
inline std::optional<int> brute_girth(const surround::Graph& g) {
    const int n = g.order();
    int best = -1;
    for (const auto& [u, v] : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbor_list(x)) {
                if (x == u && y == v) continue;    // skip the deleted edge
                if (x == v && y == u) continue;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    q.push(y);
                }
            }
        }
        if (dist[static_cast<std::size_t>(v)] >= 0) {
            const int cyc = dist[static_cast<std::size_t>(v)] + 1;
            if (best < 0 || cyc < best) best = cyc;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Seeded random graphs.

// Random spanning tree (uniform attachment) plus each extra pair with
// probability p: always connected, density controlled by p.
inline surround::Graph random_connected(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<std::uint32_t>(v));
        edges.emplace_back(u, v);
        have.insert({u, v});
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (have.count({i, j})) continue;
            if (unit(rng) < p) edges.emplace_back(i, j);
        }
    }
    return surround::Graph::from_edges(n, edges);
}

inline surround::Graph random_tree(std::mt19937& rng, int n) {
    return random_connected(rng, n, 0.0);
}

inline bool is_star(const surround::Graph& g) {
    if (g.order() <= 2) return true;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1 && g.edge_count() == g.order() - 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Independent graph6 decoder (clean-room, bit-list based).

inline surround::Graph reference_parse_graph6(const std::string& s) {
    std::size_t pos = 0;
    long long n = 0;
    if (!s.empty() && s[0] == '~') {
        n = ((s.at(1) - 63LL) << 12) | ((s.at(2) - 63LL) << 6) | (s.at(3) - 63LL);
        pos = 4;
    } else {
        n = s.at(0) - 63;
        pos = 1;
    }
    std::vector<bool> bits;
    for (std::size_t i = pos; i < s.size(); ++i) {
        const int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b & 1) != 0);
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            if (bits.at(idx)) edges.emplace_back(i, j);
        }
    }
    return surround::Graph::from_edges(static_cast<int>(n), edges);
}

inline bool same_edges(const surround::Graph& a, const surround::Graph& b) {
    return a.order() == b.order() && a.edges() == b.edges();
}

}  // namespace testhelp
