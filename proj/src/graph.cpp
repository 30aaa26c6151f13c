#include "surround/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "surround/errors.hpp"

namespace surround {

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (order <= 0) throw parse_error("graph order must be positive");
    if (!labels.empty() && static_cast<int>(labels.size()) != order)
        throw parse_error("label count does not match graph order");

    Graph g;
    g.order_ = order;
    g.open_.assign(static_cast<std::size_t>(order), VertexSet(order));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") out of range for order " << order;
            throw parse_error(os.str());
        }
        if (u == v) {
            std::ostringstream os;
            os << "self-loop at vertex " << u;
            throw parse_error(os.str());
        }
        g.open_[static_cast<std::size_t>(u)].set(v);
        g.open_[static_cast<std::size_t>(v)].set(u);
    }

    g.closed_ = g.open_;
    g.degree_.resize(static_cast<std::size_t>(order));
    g.nbr_list_.resize(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) {
        auto sv = static_cast<std::size_t>(v);
        g.closed_[sv].set(v);
        g.degree_[sv] = g.open_[sv].count();
        g.nbr_list_[sv] = g.open_[sv].to_vector();
        g.edge_count_ += g.degree_[sv];
    }
    g.edge_count_ /= 2;
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::label(int v) const {
    if (!labels_.empty()) return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

int Graph::vertex_by_label(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    int v = -1;
    auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
    if (ec == std::errc{} && p == name.data() + name.size() && v >= 0 && v < order_) return v;
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u)
        for (int v : nbr_list_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (order_ == 0) return false;
    VertexSet seen(order_);
    std::deque<int> queue{0};
    seen.set(0);
    int visited = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : neighbor_list(u)) {
            if (!seen.test(v)) {
                seen.set(v);
                ++visited;
                queue.push_back(v);
            }
        }
    }
    return visited == order_;
}

namespace {

// Shortest cycle through BFS trees rooted at every vertex; exact for simple
// graphs. A non-tree edge seen from root r at depths d(u), d(w) witnesses a
// closed walk of length d(u)+d(w)+1, and the minimum over all roots and edges
// is the girth.
std::optional<int> compute_girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbor_list(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int cand = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

int compute_degeneracy(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        degeneracy = std::max(degeneracy, deg[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = true;
        for (int w : g.neighbor_list(best))
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    return degeneracy;
}

}  // namespace

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.order = g.order();
    s.edge_count = g.edge_count();
    s.min_degree = g.order() > 0 ? g.degree(0) : 0;
    s.max_degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.connected = g.connected();
    s.girth = compute_girth(g);
    s.degeneracy = compute_degeneracy(g);
    return s;
}

namespace {

constexpr int kG6Bias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw parse_error("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of printable range");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw parse_error("graph6: order above 258047 not supported");
        if (s.size() < 4) throw parse_error("graph6: truncated length header");
        n = (static_cast<long long>(s[1] - kG6Bias) << 12) |
            (static_cast<long long>(s[2] - kG6Bias) << 6) |
            static_cast<long long>(s[3] - kG6Bias);
        if (n < 63) throw parse_error("graph6: malformed length header");
        pos = 4;
    } else {
        n = s[0] - kG6Bias;
        pos = 1;
    }
    if (n == 0) throw parse_error("graph6: order must be positive");

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need) throw parse_error("graph6: truncated adjacency data");
    if (s.size() - pos > need) throw parse_error("graph6: trailing garbage");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int ch = s[pos + static_cast<std::size_t>(bit / 6)] - kG6Bias;
            if ((ch >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits in the final character must be zero.
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int ch = s[pos + static_cast<std::size_t>(b / 6)] - kG6Bias;
        if ((ch >> (5 - b % 6)) & 1) throw parse_error("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
        out.push_back(static_cast<char>((n & 63) + kG6Bias));
    } else {
        throw parse_error("graph6: order above 258047 not supported");
    }

    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Bias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Bias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> label_entries;
    long long declared = -1;
    long long max_index = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        if (auto hash = body.find('#'); hash != std::string::npos) {
            std::istringstream cs(body.substr(hash + 1));
            std::string tag;
            if (cs >> tag && tag == "label") {
                int idx = -1;
                std::string name;
                if (cs >> idx >> name) label_entries.emplace_back(idx, name);
            }
            body.resize(hash);
        }
        std::istringstream ls(body);
        std::string a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line

        if (first_content && a == "n") {
            first_content = false;
            if (!(ls >> declared) || declared <= 0) {
                std::ostringstream os;
                os << "edge list line " << lineno << ": bad order declaration";
                throw parse_error(os.str());
            }
            std::string extra;
            if (ls >> extra) {
                std::ostringstream os;
                os << "edge list line " << lineno << ": unexpected token '" << extra << "'";
                throw parse_error(os.str());
            }
            continue;
        }
        first_content = false;

        std::string extra;
        if (!(ls >> b) || (ls >> extra)) {
            std::ostringstream os;
            os << "edge list line " << lineno << ": expected 'u v'";
            throw parse_error(os.str());
        }
        long long u = 0, v = 0;
        auto parse_int = [&](const std::string& tok, long long& out_val) {
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out_val);
            if (ec != std::errc{} || p != tok.data() + tok.size() || out_val < 0) {
                std::ostringstream os;
                os << "edge list line " << lineno << ": '" << tok << "' is not a vertex index";
                throw parse_error(os.str());
            }
        };
        parse_int(a, u);
        parse_int(b, v);
        max_index = std::max({max_index, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (declared < 0 && max_index < 0) throw parse_error("edge list: no vertices");
    long long order = declared >= 0 ? declared : max_index + 1;
    if (declared >= 0 && max_index >= declared) {
        std::ostringstream os;
        os << "edge list: vertex " << max_index << " exceeds declared order " << declared;
        throw parse_error(os.str());
    }

    std::vector<std::string> labels;
    if (!label_entries.empty()) {
        labels.assign(static_cast<std::size_t>(order), "");
        for (auto& [idx, name] : label_entries)
            if (idx >= 0 && idx < order) labels[static_cast<std::size_t>(idx)] = name;
        for (long long v = 0; v < order; ++v)
            if (labels[static_cast<std::size_t>(v)].empty())
                labels[static_cast<std::size_t>(v)] = std::to_string(v);
    }
    return Graph::from_edges(static_cast<int>(order), edges, std::move(labels));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.order(); ++v) os << "# label " << v << " " << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace surround
