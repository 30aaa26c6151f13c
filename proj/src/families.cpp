#include "surround/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "surround/errors.hpp"

namespace surround {

namespace {

[[noreturn]] void bad_param(const std::string& what) { throw parse_error(what); }

std::vector<std::string> index_labels(const std::string& prefix, int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace

Graph path_graph(int n) {
    if (n < 1) bad_param("path: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) bad_param("cycle: order must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) bad_param("star: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) bad_param("complete: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) bad_param("complete_bipartite: both sides must be nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

Graph wheel_graph(int n) {
    if (n < 4) bad_param("wheel: order must be at least 4");
    std::vector<std::pair<int, int>> edges;
    const int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph::from_edges(n, edges);
}

Graph generalized_petersen(int n, int k) {
    if (k < 1 || n <= 2 * k) bad_param("gp: requires n > 2k >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);          // outer cycle
        edges.emplace_back(i, n + i);                // spoke
        edges.emplace_back(n + i, n + (i + k) % n);  // inner step
    }
    std::vector<std::string> labels = index_labels("a", n);
    auto inner = index_labels("b", n);
    labels.insert(labels.end(), inner.begin(), inner.end());
    return Graph::from_edges(2 * n, edges, std::move(labels));
}

namespace {

Graph figure1_graph() {
    // Cubic bipartite graph of order 16 and girth 6 on which three cops are
    // needed: two degree-3 "hubs" a, b with private neighbors a1..a3 / b1..b3
    // meeting in a 6-vertex middle layer y1..y6 closed off by x1, x2.
    std::vector<std::string> labels = {"a",  "b",  "a1", "a2", "a3", "b1", "b2", "b3",
                                       "y1", "y2", "y3", "y4", "y5", "y6", "x1", "x2"};
    const int a = 0, b = 1, a1 = 2, a2 = 3, a3 = 4, b1 = 5, b2 = 6, b3 = 7;
    const int y1 = 8, y2 = 9, y3 = 10, y4 = 11, y5 = 12, y6 = 13, x1 = 14, x2 = 15;
    std::vector<std::pair<int, int>> edges = {
        {a, a1},  {a, a2},  {a, a3},  {b, b1},  {b, b2},  {b, b3},
        {a1, y1}, {a1, y2}, {a2, y3}, {a2, y4}, {a3, y5}, {a3, y6},
        {b1, y1}, {b1, y3}, {b2, y2}, {b2, y5}, {b3, y4}, {b3, y6},
        {x2, y2}, {x2, y3}, {x2, y6}, {x1, y1}, {x1, y4}, {x1, y5},
    };
    return Graph::from_edges(16, edges, std::move(labels));
}

Graph mcgee_graph() {
    // Smallest cubic graph of girth 7: Hamiltonian cycle on 24 vertices plus
    // chords +12, +7, -7 repeating around the cycle.
    const int lcf[3] = {12, 7, -7};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 24; ++i) {
        edges.emplace_back(i, (i + 1) % 24);
        int j = ((i + lcf[i % 3]) % 24 + 24) % 24;
        if (i < j) edges.emplace_back(i, j);
    }
    return Graph::from_edges(24, edges);
}

Graph c8_chords_graph(bool plus_e) {
    // 8-cycle with chords {1,7} and {3,5}; the optional extra edge {1,5}
    // drops the surrounding number from 3 to 2.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
    edges.emplace_back(1, 7);
    edges.emplace_back(3, 5);
    if (plus_e) edges.emplace_back(1, 5);
    return Graph::from_edges(8, edges);
}

}  // namespace

Graph builtin_graph(const std::string& name) {
    if (name == "petersen") return generalized_petersen(5, 2);
    if (name == "figure1") return figure1_graph();
    if (name == "mcgee") return mcgee_graph();
    if (name == "c8_chords") return c8_chords_graph(false);
    if (name == "c8_chords_plus_e") return c8_chords_graph(true);
    throw parse_error("unknown builtin graph '" + name + "'");
}

std::vector<std::string> builtin_graph_names() {
    return {"petersen", "figure1", "mcgee", "c8_chords", "c8_chords_plus_e"};
}

Graph line_graph(const Graph& g) {
    auto base_edges = g.edges();
    const int m = static_cast<int>(base_edges.size());
    if (m == 0) bad_param("line_graph: base graph has no edges");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = base_edges[static_cast<std::size_t>(i)];
            auto [c, d] = base_edges[static_cast<std::size_t>(j)];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (auto [u, v] : base_edges) labels.push_back(g.label(u) + "-" + g.label(v));
    return Graph::from_edges(m, edges, std::move(labels));
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    const int ng = g.order();
    const int nh = h.order();
    auto idx = [nh](int u, int v) { return u * nh + v; };
    std::vector<std::pair<int, int>> edges;
    for (int u1 = 0; u1 < ng; ++u1)
        for (int v1 = 0; v1 < nh; ++v1)
            for (int u2 = u1; u2 < ng; ++u2)
                for (int v2 = 0; v2 < nh; ++v2) {
                    if (idx(u2, v2) <= idx(u1, v1)) continue;
                    bool adj = false;
                    switch (kind) {
                        case ProductKind::cartesian:
                            adj = (u1 == u2 && h.adjacent(v1, v2)) ||
                                  (v1 == v2 && g.adjacent(u1, u2));
                            break;
                        case ProductKind::strong:
                            adj = (u1 == u2 && h.adjacent(v1, v2)) ||
                                  (v1 == v2 && g.adjacent(u1, u2)) ||
                                  (g.adjacent(u1, u2) && h.adjacent(v1, v2));
                            break;
                        case ProductKind::lexicographic:
                            adj = g.adjacent(u1, u2) || (u1 == u2 && h.adjacent(v1, v2));
                            break;
                    }
                    if (adj) edges.emplace_back(idx(u1, v1), idx(u2, v2));
                }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) labels.push_back("(" + g.label(u) + "," + h.label(v) + ")");
    return Graph::from_edges(ng * nh, edges, std::move(labels));
}

FamilySpec FamilySpec::parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw parse_error("family: empty spec");
    FamilySpec spec;
    spec.name = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw parse_error("family: parameter '" + tok + "' is not an integer");
        spec.params.push_back(value);
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << name;
    if (!params.empty()) {
        os << "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i];
        }
        os << ")";
    }
    return os.str();
}

Graph make_family(const FamilySpec& spec) {
    auto arity = [&](std::size_t want) {
        if (spec.params.size() != want) {
            std::ostringstream os;
            os << "family " << spec.name << ": expected " << want << " parameter(s), got "
               << spec.params.size();
            throw parse_error(os.str());
        }
    };
    if (spec.name == "path") {
        arity(1);
        return path_graph(spec.params[0]);
    }
    if (spec.name == "cycle") {
        arity(1);
        return cycle_graph(spec.params[0]);
    }
    if (spec.name == "star") {
        arity(1);
        return star_graph(spec.params[0]);
    }
    if (spec.name == "complete") {
        arity(1);
        return complete_graph(spec.params[0]);
    }
    if (spec.name == "complete_bipartite") {
        arity(2);
        return complete_bipartite_graph(spec.params[0], spec.params[1]);
    }
    if (spec.name == "wheel") {
        arity(1);
        return wheel_graph(spec.params[0]);
    }
    if (spec.name == "gp") {
        arity(2);
        return generalized_petersen(spec.params[0], spec.params[1]);
    }
    auto names = builtin_graph_names();
    if (std::find(names.begin(), names.end(), spec.name) != names.end()) {
        arity(0);
        return builtin_graph(spec.name);
    }
    throw parse_error("unknown family '" + spec.name + "'");
}

}  // namespace surround
