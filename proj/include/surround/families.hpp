#pragma once

#include <string>
#include <vector>

#include "surround/graph.hpp"

namespace surround {

// Parameterized graph families. Sizes are total vertex counts: wheel(n) is a
// hub joined to a cycle on n-1 vertices, star(n) is K_{1,n-1}.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph wheel_graph(int n);

// Generalized Petersen graph GP(n,k), n > 2k >= 2: outer cycle a_0..a_{n-1}
// (indices 0..n-1), inner vertices b_i (indices n+i), spokes a_i b_i, inner
// steps b_i b_{i+k mod n}.
Graph generalized_petersen(int n, int k);

// Named one-off graphs: petersen, figure1, mcgee, c8_chords, c8_chords_plus_e.
Graph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

// Vertex per edge of g (edges ordered with u < v, lexicographically);
// adjacency = shared endpoint. Labels record the endpoint pair.
Graph line_graph(const Graph& g);

enum class ProductKind { cartesian, strong, lexicographic };

// Vertex (u,v) of the product gets index u*|V(h)| + v.
Graph product(const Graph& g, const Graph& h, ProductKind kind);

// Textual family spec as used by the CLI: e.g. "path 7", "gp 5 2",
// "mcgee". Throws parse_error on unknown names or bad parameters.
struct FamilySpec {
    std::string name;
    std::vector<int> params;

    static FamilySpec parse(const std::vector<std::string>& tokens);
    std::string to_string() const;
};

Graph make_family(const FamilySpec& spec);

}  // namespace surround
