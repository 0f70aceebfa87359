#include "resolvedim/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace resolvedim {

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidParam("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_matrix_.assign(static_cast<size_t>(n) * n, 0);
    g.adj_list_.assign(n, {});
    g.labels_.assign(n, std::nullopt);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidVertex("edge endpoint out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw SelfLoopRejected("self-loop at vertex " + std::to_string(u));
        size_t idx = static_cast<size_t>(u) * n + v;
        if (g.adj_matrix_[idx]) continue; // dedup
        g.adj_matrix_[idx] = 1;
        g.adj_matrix_[static_cast<size_t>(v) * n + u] = 1;
        ++g.edge_count_;
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v)
            if (g.adj_matrix_[static_cast<size_t>(u) * n + v]) g.adj_list_[u].push_back(v);
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_list_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// BFS from src into dist (dist must be pre-sized, filled with -1).
void bfs(const Graph& g, int src, std::vector<int>& dist) {
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

} // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> dist(n, -1);
    bfs(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
    d_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int src = 0; src < n_; ++src) {
        std::vector<int> dist(n_, -1);
        bfs(g, src, dist);
        for (int v = 0; v < n_; ++v) {
            if (dist[v] < 0) throw DisconnectedGraph("graph is not connected");
            d_[static_cast<size_t>(src) * n_ + v] = dist[v];
            diameter_ = std::max(diameter_, dist[v]);
        }
    }
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("empty edge-list input");
    std::istringstream hs(header);
    long long n = -1, e = -1;
    if (!(hs >> n >> e) || n < 0 || e < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'n e'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(e));
    for (long long i = 0; i < e; ++i) {
        std::string el;
        if (!next_line(el))
            throw ParseError("unexpected end of input: expected " + std::to_string(e) +
                             " edges, got " + std::to_string(i));
        std::istringstream es(el);
        long long u, v;
        if (!(es >> u >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop rejected");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace resolvedim
