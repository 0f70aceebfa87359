#ifndef RESOLVEDIM_RESOLVING_HPP
#define RESOLVEDIM_RESOLVING_HPP

#include <span>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

/// Ordered set of distinct vertex indices.
using VertexSet = std::vector<int>;

/// Representation vector: distances (metric) or {0,1,2} codes (adjacency),
/// one coordinate per member of the witness set, in listed order.
using RepVector = std::vector<int>;

RepVector metric_representation(const DistanceMatrix& dm, int v, std::span<const int> w);

/// True iff all vertices outside w have pairwise-distinct metric representations.
bool is_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> w);

/// x,y doubly resolve u,v iff d(u,x) - d(u,y) != d(v,x) - d(v,y).
bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v);

/// Every vertex pair must be doubly resolved by some pair from z. Requires |z| >= 2
/// and a graph of order >= 2.
bool is_doubly_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> z);

/// w strongly resolves u,v iff one of them lies on a shortest path between the
/// other and w (distance identity form).
bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v);

bool is_strong_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> s);

/// Coordinates: 0 if v == w_i, 1 if adjacent, 2 otherwise.
RepVector adjacency_representation(const Graph& g, int v, std::span<const int> w);

/// True iff adjacency representations of ALL vertices are pairwise distinct.
bool is_adjacency_resolving_set(const Graph& g, std::span<const int> w);

/// Full-V variant of is_resolving_set; same truth value, kept as a test oracle.
bool is_resolving_set_full(const Graph& g, const DistanceMatrix& dm, std::span<const int> w);

} // namespace resolvedim

#endif
