#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radiolab {

// Undirected edge, stored with u < v. Vertices are 1-based throughout.
using Edge = std::pair<int, int>;

struct VertexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DisconnectedGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple connected graph with precomputed all-pairs hop
/// distances. Construct through build_graph(); safe for shared
/// concurrent reads afterwards.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int diameter() const { return diam_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const;

    int dist(int u, int v) const;
    bool has_edge(int u, int v) const;

    friend Graph build_graph(int n, std::vector<Edge> edges);

private:
    int n_ = 0;
    int diam_ = 0;
    std::vector<Edge> edges_;            // sorted, deduplicated
    std::vector<std::vector<int>> adj_;  // adj_[v], 1-based
    std::vector<int> dist_;              // flat n*n

    void check_vertex(int v) const;
};

/// Builds the graph and computes distances by BFS from every vertex.
/// Throws VertexOutOfRange for bad indices, std::invalid_argument for
/// self-loops, DisconnectedGraph if any pair is unreachable.
Graph build_graph(int n, std::vector<Edge> edges);

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Shortest-path hop count.
int distance(const Graph& g, int u, int v);

/// If deleting `cut` leaves exactly two connected components, returns
/// their sizes (V1 <= V2); otherwise nullopt. `cut` must be a subset of
/// the graph's edges.
std::optional<std::pair<int, int>> edge_cut_components(const Graph& g,
                                                       const std::vector<Edge>& cut);

// --- serialization ------------------------------------------------------

// {"n": <int>, "edges": [[u,v], ...]}, 1-based vertices.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// graph { u -- v; ... }
std::string graph_to_dot(const Graph& g);

}  // namespace radiolab
