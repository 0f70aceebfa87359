#ifndef RESOLVEDIM_SOLVERS_HPP
#define RESOLVEDIM_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <string>

#include "resolvedim/resolving.hpp"

namespace resolvedim {

enum class InvariantKind { MetricDim, DoublyDim, StrongDim, AdjacencyDim };
enum class SolveMethod { BruteForce, PrunedSearch, MmdVertexCover };

std::string to_string(InvariantKind k);
std::string to_string(SolveMethod m);
InvariantKind invariant_from_string(const std::string& s); // throws ParseError

struct SolveResult {
    InvariantKind invariant;
    int value = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::PrunedSearch;
    uint64_t nodes_explored = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Worker count for candidate evaluation. 0 or 1 = sequential.
/// Defaults to the RESOLVEDIM_THREADS env var, falling back to the OpenMP default.
int resolve_thread_count();

/// Minimum-cardinality searches. Candidates are enumerated in increasing
/// cardinality, lexicographic order; the first success wins, so the witness is
/// the lexicographically smallest optimum regardless of worker count.
SolveResult min_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads = -1);
SolveResult min_doubly_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads = -1);
SolveResult min_strong_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads = -1);
SolveResult min_adjacency_resolving_set(const Graph& g, int threads = -1);

/// Strong metric dimension via the mutually-maximally-distant pair graph:
/// sdim equals the minimum vertex cover of that graph.
SolveResult min_strong_resolving_via_mmd(const Graph& g, const DistanceMatrix& dm);

/// Unpruned, sequential enumeration; ground truth for solver validation.
/// Guarded to n <= 14. dm may be null only for AdjacencyDim.
SolveResult naive_minimum(const Graph& g, const DistanceMatrix* dm, InvariantKind kind);

/// Pairs u,v where no neighbor of u is farther from v and vice versa.
std::vector<Edge> mmd_pairs(const Graph& g, const DistanceMatrix& dm);

/// Exact minimum vertex cover (branch and bound, degree-1 reduction).
/// Guarded to 40 vertices.
VertexSet minimum_vertex_cover(const Graph& g);

/// Classes of vertices sharing an open or closed neighborhood. Any resolving,
/// adjacency-resolving, strong-resolving, or doubly-resolving set must contain
/// all but one member of each class.
std::vector<std::vector<int>> twin_classes(const Graph& g);

} // namespace resolvedim

#endif
