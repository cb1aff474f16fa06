#include "radiolab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace radiolab {

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range 1.." +
                               std::to_string(n_));
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
}

int Graph::dist(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return dist_[static_cast<size_t>(u - 1) * n_ + (v - 1)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && dist_[static_cast<size_t>(u - 1) * n_ + (v - 1)] == 1;
}

Graph build_graph(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");

    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw VertexOutOfRange("edge endpoint out of range 1.." + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);

    g.adj_.assign(n + 1, {});
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    const int kUnreached = -1;
    g.dist_.assign(static_cast<size_t>(n) * n, kUnreached);
    for (int src = 1; src <= n; ++src) {
        auto* row = &g.dist_[static_cast<size_t>(src - 1) * n];
        row[src - 1] = 0;
        std::queue<int> queue;
        queue.push(src);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.adj_[u]) {
                if (row[w - 1] == kUnreached) {
                    row[w - 1] = row[u - 1] + 1;
                    queue.push(w);
                }
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (row[v - 1] == kUnreached)
                throw DisconnectedGraph("vertex " + std::to_string(v) +
                                        " unreachable from " + std::to_string(src));
            g.diam_ = std::max(g.diam_, row[v - 1]);
        }
    }
    return g;
}

int distance(const Graph& g, int u, int v) { return g.dist(u, v); }

std::optional<std::pair<int, int>> edge_cut_components(const Graph& g,
                                                       const std::vector<Edge>& cut) {
    std::vector<Edge> removed;
    removed.reserve(cut.size());
    for (const auto& [u, v] : cut) {
        Edge e = make_edge(u, v);
        if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
            throw std::invalid_argument("cut edge not in graph");
        removed.push_back(e);
    }
    std::sort(removed.begin(), removed.end());

    const int n = g.order();
    std::vector<int> comp(n + 1, 0);
    int ncomp = 0;
    for (int src = 1; src <= n; ++src) {
        if (comp[src] != 0) continue;
        ++ncomp;
        std::queue<int> queue;
        queue.push(src);
        comp[src] = ncomp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (comp[w] != 0) continue;
                if (std::binary_search(removed.begin(), removed.end(), make_edge(u, w)))
                    continue;
                comp[w] = ncomp;
                queue.push(w);
            }
        }
    }
    if (ncomp != 2) return std::nullopt;
    int v1 = static_cast<int>(std::count(comp.begin() + 1, comp.end(), 1));
    int v2 = n - v1;
    if (v1 > v2) std::swap(v1, v2);
    return std::make_pair(v1, v2);
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(n, std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    std::vector<bool> seen(g.order() + 1, false);
    for (const auto& [u, v] : g.edges()) seen[u] = seen[v] = true;
    for (int v = 1; v <= g.order(); ++v)
        if (!seen[v]) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace radiolab
