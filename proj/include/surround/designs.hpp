#pragma once

#include <string>
#include <vector>

#include "surround/graph.hpp"

namespace surround {

// 2-(v, k, lambda) block design: every block has exactly k distinct points,
// every point pair lies in exactly lambda blocks. Validation also pins the
// replication count r = lambda (v-1) / (k-1), which must be integral.
struct Design {
    int points = 0;
    int block_size = 0;
    int lambda = 0;
    int replication = 0;
    std::vector<std::vector<int>> blocks;              // each sorted ascending
    std::vector<std::vector<int>> resolution_classes;  // indices into blocks; may be empty
};

// Validates and fills in replication; throws parse_error with the first
// violated condition.
Design make_design(int v, int k, int lambda, std::vector<std::vector<int>> blocks,
                   std::vector<std::vector<int>> resolution_classes = {});

// Text format: header "v k lambda", then one block per line as point indices;
// '#' starts a comment.
Design parse_design(std::string_view text);
std::string format_design(const Design& d);

// fano: the (7,3,1) projective plane. ag23: the (9,3,1) affine plane with its
// resolution into four parallel classes.
Design builtin_design(const std::string& name);
std::vector<std::string> builtin_design_names();

// Bipartite point/block incidence graph: points 0..v-1, block j at v+j.
Graph incidence_graph(const Design& d);

// One vertex per block, adjacent when the blocks share a point.
Graph block_intersection_graph(const Design& d);

}  // namespace surround
