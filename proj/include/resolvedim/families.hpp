#ifndef RESOLVEDIM_FAMILIES_HPP
#define RESOLVEDIM_FAMILIES_HPP

#include <string>

#include "resolvedim/graph.hpp"

namespace resolvedim {

enum class FamilyKind { Cycle, Complete, Jellyfish, CocktailParty, CayleyZn, CayleyDihedral };

/// Parametric family instance. CLI syntax: cycle:n, complete:n, jfg:n,m,
/// cp:r, cayley-zn:n,k, cayley-d2n:n.
struct FamilySpec {
    FamilyKind kind;
    int p1 = 0;
    int p2 = 0; // used by Jellyfish (m) and CayleyZn (k)

    static FamilySpec parse(const std::string& text); // throws ParseError / InvalidParam
    std::string to_string() const;
    Graph build() const;
};

Graph gen_cycle(int n);
Graph gen_complete(int n);

/// Cycle C_n with m pendant leaves per cycle vertex.
/// Cycle vertex i -> index i; leaf j (1-based) of support i -> n + i*m + (j-1).
Graph gen_jellyfish(int n, int m);

/// K_{2r} minus the perfect matching {2t, 2t+1}.
Graph gen_cocktail_party(int r);

/// Circulant: x ~ y iff (y-x) mod n in {1..k} u {n-k..n-1}.
Graph gen_cayley_zn(int n, int k);

/// Cayley graph on the dihedral group of order 2n with connection set
/// {a,...,a^{n-1}, ab,...,a^{n-1}b}. Vertex order: a^0..a^{n-1}, b, ab, ..., a^{n-1}b.
Graph gen_cayley_dihedral(int n);

/// Backtracking isomorphism test with degree pruning. Guarded to small graphs
/// (default 16 vertices, enough for every family claim checked here).
bool are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices = 16);

} // namespace resolvedim

#endif
