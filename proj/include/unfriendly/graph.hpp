#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unfriendly {

using Vertex = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kUnreachable = -1;

// Immutable undirected simple graph in adjacency-list form.
// Adjacency lists are sorted ascending; symmetry, absence of loops and
// duplicates, and the degree bound are established at construction.
class FiniteGraph {
public:
    FiniteGraph() = default;

    Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    std::int64_t max_degree() const { return max_degree_; }

    const std::vector<Vertex>& neighbors(Vertex x) const {
        check_vertex(x);
        return adjacency_[static_cast<std::size_t>(x)];
    }
    std::int64_t degree(Vertex x) const {
        return static_cast<std::int64_t>(neighbors(x).size());
    }
    bool has_edge(Vertex x, Vertex y) const {
        const auto& nx = neighbors(x);
        return std::binary_search(nx.begin(), nx.end(), y);
    }

    // Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : adjacency_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(Vertex x) const {
        if (x < 0 || x >= vertex_count())
            throw std::out_of_range("graph: vertex id " + std::to_string(x) +
                                    " out of range [0, " +
                                    std::to_string(vertex_count()) + ")");
    }

    friend FiniteGraph validate_graph(Vertex n, const std::vector<Edge>& raw_edges);

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::int64_t edge_count_ = 0;
    std::int64_t max_degree_ = 0;
};

// Canonicalizes a raw edge list: symmetrizes, deduplicates, sorts.
// Rejects self-loops and out-of-range ids.
inline FiniteGraph validate_graph(Vertex n, const std::vector<Edge>& raw_edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    FiniteGraph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : raw_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("graph: edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range [0, " +
                                    std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " +
                                        std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        g.edge_count_ += static_cast<std::int64_t>(adj.size());
        g.max_degree_ = std::max(g.max_degree_, static_cast<std::int64_t>(adj.size()));
    }
    g.edge_count_ /= 2;
    return g;
}

// Breadth-first distances from x; kUnreachable outside x's component.
inline std::vector<Vertex> graph_distance(const FiniteGraph& g, Vertex x) {
    g.check_vertex(x);
    std::vector<Vertex> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(x)] = 0;
    frontier.push(x);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

// Text format: first line "n m", then m lines "u v", 0-based undirected.
// Writes are byte-deterministic (edges sorted, u < v).
inline void write_graph(std::ostream& os, const FiniteGraph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline FiniteGraph read_graph(std::istream& is) {
    Vertex n = 0;
    std::int64_t m = 0;
    if (!(is >> n >> m)) throw std::runtime_error("graph file: bad header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        Vertex u, v;
        if (!(is >> u >> v))
            throw std::runtime_error("graph file: truncated edge list");
        edges.emplace_back(u, v);
    }
    return validate_graph(n, edges);
}

inline std::string graph_to_string(const FiniteGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace unfriendly
