#include "surround/designs.hpp"

#include <algorithm>
#include <sstream>

#include "surround/errors.hpp"

namespace surround {

Design make_design(int v, int k, int lambda, std::vector<std::vector<int>> blocks,
                   std::vector<std::vector<int>> resolution_classes) {
    if (k < 2) throw parse_error("design: block size must be at least 2");
    if (v <= k) throw parse_error("design: point count must exceed block size");
    if (lambda < 1) throw parse_error("design: lambda must be positive");
    if (blocks.empty()) throw parse_error("design: no blocks");

    for (auto& block : blocks) {
        std::sort(block.begin(), block.end());
        if (static_cast<int>(block.size()) != k) {
            std::ostringstream os;
            os << "design: block has " << block.size() << " points, expected " << k;
            throw parse_error(os.str());
        }
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw parse_error("design: block repeats a point");
        for (int p : block)
            if (p < 0 || p >= v) {
                std::ostringstream os;
                os << "design: point " << p << " out of range [0," << v << ")";
                throw parse_error(os.str());
            }
    }

    std::vector<int> pair_count(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0);
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                ++pair_count[static_cast<std::size_t>(block[i]) * static_cast<std::size_t>(v) +
                             static_cast<std::size_t>(block[j])];
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            int c = pair_count[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
                               static_cast<std::size_t>(b)];
            if (c != lambda) {
                std::ostringstream os;
                os << "design: pair {" << a << "," << b << "} covered " << c
                   << " times, expected " << lambda;
                throw parse_error(os.str());
            }
        }

    long long r_num = static_cast<long long>(lambda) * (v - 1);
    if (r_num % (k - 1) != 0)
        throw parse_error("design: replication lambda(v-1)/(k-1) is not integral");

    if (!resolution_classes.empty()) {
        std::vector<int> seen(blocks.size(), 0);
        for (const auto& cls : resolution_classes) {
            std::vector<bool> covered(static_cast<std::size_t>(v), false);
            for (int bi : cls) {
                if (bi < 0 || bi >= static_cast<int>(blocks.size()))
                    throw parse_error("design: resolution class references a missing block");
                ++seen[static_cast<std::size_t>(bi)];
                for (int p : blocks[static_cast<std::size_t>(bi)]) {
                    if (covered[static_cast<std::size_t>(p)])
                        throw parse_error("design: resolution class blocks overlap");
                    covered[static_cast<std::size_t>(p)] = true;
                }
            }
            if (std::find(covered.begin(), covered.end(), false) != covered.end())
                throw parse_error("design: resolution class does not cover all points");
        }
        for (int c : seen)
            if (c != 1) throw parse_error("design: resolution does not partition the blocks");
    }

    Design d;
    d.points = v;
    d.block_size = k;
    d.lambda = lambda;
    d.replication = static_cast<int>(r_num / (k - 1));
    d.blocks = std::move(blocks);
    d.resolution_classes = std::move(resolution_classes);
    return d;
}

Design parse_design(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int v = -1, k = -1, lambda = -1;
    std::vector<std::vector<int>> blocks;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<int> nums;
        int x = 0;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) {
            std::ostringstream os;
            os << "design line " << lineno << ": non-integer token";
            throw parse_error(os.str());
        }
        if (nums.empty()) continue;
        if (v < 0) {
            if (nums.size() != 3) {
                std::ostringstream os;
                os << "design line " << lineno << ": header must be 'v k lambda'";
                throw parse_error(os.str());
            }
            v = nums[0];
            k = nums[1];
            lambda = nums[2];
        } else {
            blocks.push_back(std::move(nums));
        }
    }
    if (v < 0) throw parse_error("design: missing 'v k lambda' header");
    return make_design(v, k, lambda, std::move(blocks));
}

std::string format_design(const Design& d) {
    std::ostringstream os;
    os << d.points << " " << d.block_size << " " << d.lambda << "\n";
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) os << " ";
            os << block[i];
        }
        os << "\n";
    }
    return os.str();
}

Design builtin_design(const std::string& name) {
    if (name == "fano") {
        return make_design(7, 3, 1,
                           {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}});
    }
    if (name == "ag23") {
        // Affine plane of order 3 on points 3x+y for (x,y) in Z_3 x Z_3; the
        // four parallel classes collect the lines of each slope.
        std::vector<std::vector<int>> blocks = {
            {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // x = const
            {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // y = const
            {0, 4, 8}, {1, 5, 6}, {2, 3, 7},  // y = x + c
            {0, 5, 7}, {1, 3, 8}, {2, 4, 6},  // y = 2x + c
        };
        std::vector<std::vector<int>> classes = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
        return make_design(9, 3, 1, std::move(blocks), std::move(classes));
    }
    throw parse_error("unknown builtin design '" + name + "'");
}

std::vector<std::string> builtin_design_names() { return {"fano", "ag23"}; }

Graph incidence_graph(const Design& d) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(d.points) + d.blocks.size());
    for (int p = 0; p < d.points; ++p) labels.push_back("p" + std::to_string(p));
    for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        std::string name = "B";
        for (std::size_t i = 0; i < d.blocks[j].size(); ++i)
            name += (i ? "." : "") + std::to_string(d.blocks[j][i]);
        labels.push_back(name);
        for (int p : d.blocks[j]) edges.emplace_back(p, d.points + static_cast<int>(j));
    }
    return Graph::from_edges(d.points + static_cast<int>(d.blocks.size()), edges,
                             std::move(labels));
}

Graph block_intersection_graph(const Design& d) {
    const int m = static_cast<int>(d.blocks.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& a = d.blocks[static_cast<std::size_t>(i)];
            const auto& b = d.blocks[static_cast<std::size_t>(j)];
            bool meet = false;
            for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
                if (a[x] == b[y]) {
                    meet = true;
                    break;
                }
                if (a[x] < b[y])
                    ++x;
                else
                    ++y;
            }
            if (meet) edges.emplace_back(i, j);
        }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (const auto& block : d.blocks) {
        std::string name = "B";
        for (std::size_t i = 0; i < block.size(); ++i)
            name += (i ? "." : "") + std::to_string(block[i]);
        labels.push_back(name);
    }
    return Graph::from_edges(m, edges, std::move(labels));
}

}  // namespace surround
