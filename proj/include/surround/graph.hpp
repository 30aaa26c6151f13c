#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surround/vertex_set.hpp"

namespace surround {

// Immutable simple undirected graph on vertices 0..order-1 with adjacency
// stored as bit rows. Optional per-vertex display labels survive through the
// generators so interactive output can talk about "a3" instead of "4".
class Graph {
public:
    Graph() = default;

    // Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

    bool adjacent(int u, int v) const { return open_[static_cast<std::size_t>(u)].test(v); }

    const VertexSet& open_neighbors(int v) const { return open_[static_cast<std::size_t>(v)]; }
    const VertexSet& closed_neighbors(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    // Sorted neighbor list (ascending), handy for move enumeration.
    const std::vector<int>& neighbor_list(int v) const {
        return nbr_list_[static_cast<std::size_t>(v)];
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;
    // Index of the vertex with this label (or parse as an index); -1 if unknown.
    int vertex_by_label(const std::string& name) const;

    // Edge list with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;

    std::size_t words_per_set() const {
        return order_ == 0 ? 0 : open_[0].word_count();
    }

private:
    int order_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> open_;
    std::vector<VertexSet> closed_;
    std::vector<std::vector<int>> nbr_list_;
    std::vector<int> degree_;
    std::vector<std::string> labels_;
};

struct GraphStats {
    int order = 0;
    int edge_count = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    std::optional<int> girth;  // nullopt for forests
    int degeneracy = 0;
};

GraphStats graph_stats(const Graph& g);

// graph6: standard 6-bit packed upper-triangle encoding, header-less variant.
// Round trips are bit exact.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list text: one "u v" pair per line, optional leading "n <order>" line,
// '#' starts a comment. Vertex labels, when present, are emitted as
// "# label <index> <name>" comments and read back in.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace surround
