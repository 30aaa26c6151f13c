#include "surround/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace surround {

namespace {

// Branch-and-bound maximum clique with greedy-coloring pruning. Candidates
// are explored in reverse color order so high-bound branches are cut early.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, long long node_budget)
        : g_(g), budget_(node_budget) {}

    int run(bool& exact) {
        const int n = g_.order();
        best_ = 0;
        exhausted_ = false;
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        VertexSet cand = VertexSet::full(n);
        std::vector<int> clique;
        expand(cand, clique);
        exact = !exhausted_;
        return best_;
    }

private:
    void expand(const VertexSet& cand, std::vector<int>& clique) {
        if (exhausted_) return;
        if (--budget_ < 0) {
            exhausted_ = true;
            return;
        }
        if (cand.empty()) {
            best_ = std::max(best_, static_cast<int>(clique.size()));
            return;
        }

        // Greedy coloring of the candidate set; color index bounds the clique
        // extension possible from each vertex.
        std::vector<int> verts;
        std::vector<int> color;
        VertexSet uncolored = cand;
        int ncolors = 0;
        while (!uncolored.empty()) {
            ++ncolors;
            VertexSet cls = uncolored;
            while (!cls.empty()) {
                int v = cls.first();
                verts.push_back(v);
                color.push_back(ncolors);
                uncolored.reset(v);
                cls.reset(v);
                cls.subtract(g_.open_neighbors(v));
            }
        }

        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(clique.size()) + color[static_cast<std::size_t>(i)] <= best_)
                return;  // remaining vertices all have color <= this one
            int v = verts[static_cast<std::size_t>(i)];
            clique.push_back(v);
            VertexSet next = cand;
            next &= g_.open_neighbors(v);
            for (int j = i; j < static_cast<int>(verts.size()); ++j)
                next.reset(verts[static_cast<std::size_t>(j)]);
            if (static_cast<int>(clique.size()) > best_) best_ = static_cast<int>(clique.size());
            expand(next, clique);
            clique.pop_back();
            if (exhausted_) return;
        }
    }

    const Graph& g_;
    long long budget_;
    int best_ = 0;
    bool exhausted_ = false;
};

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Width of the greedy elimination order chosen by `pick`, simulated on a
// mutable adjacency copy with fill-in applied as vertices are eliminated.
template <class Pick>
int greedy_elimination_width(const Graph& g, Pick pick) {
    const int n = g.order();
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj.push_back(g.open_neighbors(v));
    VertexSet alive = VertexSet::full(n);
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int v = pick(adj, alive);
        VertexSet nbrs = adj[static_cast<std::size_t>(v)];
        nbrs &= alive;
        width = std::max(width, nbrs.count());
        nbrs.for_each([&](int a) {
            nbrs.for_each([&](int b) {
                if (a < b) {
                    adj[static_cast<std::size_t>(a)].set(b);
                    adj[static_cast<std::size_t>(b)].set(a);
                }
            });
        });
        alive.reset(v);
    }
    return width;
}

int live_degree(const std::vector<VertexSet>& adj, const VertexSet& alive, int v) {
    VertexSet s = adj[static_cast<std::size_t>(v)];
    s &= alive;
    return s.count();
}

int fill_cost(const std::vector<VertexSet>& adj, const VertexSet& alive, int v) {
    VertexSet nbrs = adj[static_cast<std::size_t>(v)];
    nbrs &= alive;
    int missing = 0;
    nbrs.for_each([&](int a) {
        VertexSet other = nbrs;
        other.subtract(adj[static_cast<std::size_t>(a)]);
        other.reset(a);
        missing += other.count();
    });
    return missing / 2;
}

}  // namespace

int max_clique(const Graph& g, long long node_budget, bool& exact) {
    CliqueSearch search(g, node_budget);
    return search.run(exact);
}

int max_independent_set(const Graph& g, long long node_budget, bool& exact) {
    return max_clique(complement(g), node_budget, exact);
}

int elimination_width(const Graph& g) {
    int by_degree = greedy_elimination_width(g, [](const auto& adj, const VertexSet& alive) {
        int best = -1, best_deg = 0;
        alive.for_each([&](int v) {
            int d = live_degree(adj, alive, v);
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        });
        return best;
    });
    int by_fill = greedy_elimination_width(g, [](const auto& adj, const VertexSet& alive) {
        int best = -1, best_fill = 0;
        alive.for_each([&](int v) {
            int f = fill_cost(adj, alive, v);
            if (best < 0 || f < best_fill) {
                best = v;
                best_fill = f;
            }
        });
        return best;
    });
    return std::min(by_degree, by_fill);
}

int LowerBounds::best() const {
    int lo = std::max({1, min_degree, clique_minus_one});
    if (girth_rule) lo = std::max(lo, *girth_rule);
    return lo;
}

int UpperBounds::best() const {
    // A one-cop team suffices on K_1, the only connected graph whose vertex
    // cover is empty; everywhere else the raw bounds are already >= 1.
    return std::max(1, std::min(vertex_cover, elim_width_plus_one));
}

LowerBounds lower_bounds(const Graph& g, long long node_budget) {
    LowerBounds lb;
    GraphStats stats = graph_stats(g);
    lb.min_degree = stats.min_degree;
    int omega = max_clique(g, node_budget, lb.exact);
    lb.clique_minus_one = omega - 1;
    if (stats.girth && *stats.girth >= 7 && stats.min_degree >= 3)
        lb.girth_rule = stats.min_degree + 1;
    return lb;
}

UpperBounds upper_bounds(const Graph& g, long long node_budget) {
    UpperBounds ub;
    int alpha = max_independent_set(g, node_budget, ub.exact);
    ub.vertex_cover = g.order() - alpha;
    ub.elim_width_plus_one = elimination_width(g) + 1;
    return ub;
}

Bracket sigma_bracket(const Graph& g, long long node_budget) {
    Bracket b;
    b.lo = lower_bounds(g, node_budget).best();
    b.hi = upper_bounds(g, node_budget).best();
    if (b.lo > b.hi) throw std::logic_error("bound bracket inverted: lo > hi");
    return b;
}

}  // namespace surround
