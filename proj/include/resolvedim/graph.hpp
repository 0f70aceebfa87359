#ifndef RESOLVEDIM_GRAPH_HPP
#define RESOLVEDIM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolvedim/errors.hpp"

namespace resolvedim {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph over vertices 0..n-1.
/// Construct via build_graph(); no mutation after that.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return adj_matrix_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }
    int degree(int v) const { return static_cast<int>(adj_list_[v].size()); }

    /// Edges as sorted (u < v) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    const std::optional<std::string>& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<uint8_t> adj_matrix_;        // n*n, symmetric, zero diagonal
    std::vector<std::vector<int>> adj_list_; // sorted neighbor lists
    std::vector<std::optional<std::string>> labels_;
};

/// Validates endpoints, rejects self-loops, deduplicates parallel/reversed edges.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// All-pairs BFS hop distances for a connected graph.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g); // throws DisconnectedGraph

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int diameter() const { return diameter_; }

private:
    int n_ = 0;
    int diameter_ = 0;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g);

/// Two-colorability check (BFS).
bool is_bipartite(const Graph& g);

/// Edge-list text format: header "n e", then e lines "u v"; '#' starts a comment line.
Graph read_edge_list(std::istream& in);  // throws ParseError with line numbers
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace resolvedim

#endif
