#ifndef RESOLVEDIM_CLOSED_FORMS_HPP
#define RESOLVEDIM_CLOSED_FORMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "resolvedim/solvers.hpp"

namespace resolvedim {

// Closed-form values for the jellyfish graph, valid for n >= 3, m >= 2.
int jfg_beta(int n, int m);     // nm - n
int jfg_psi(int n, int m);      // nm
int jfg_sdim(int n, int m);     // nm - 1
int jfg_adjdim(int n, int m);   // nm - 1
int jfg_diameter(int n, int m); // floor(n/2) + 2, valid for n >= 3, m >= 1

// Shared value of beta, psi and sdim on Cay(Z_n, S_{n/2-1}) for even n >= 8.
int cp_dimensions(int n); // n / 2

// Witness constructions under the generator labeling (0-based).
VertexSet jfg_beta_witness(int n, int m); // all leaves except the last per support
VertexSet jfg_psi_witness(int n, int m);  // all nm leaves
VertexSet jfg_sdim_witness(int n, int m); // all leaves except the very last
VertexSet cp_witness(int n);              // first n/2 vertices of Cay(Z_n, S_{n/2-1})

// Additional positive resolving-set fixtures: all leaves minus one (size nm-1)
// and all leaves (size nm).
std::vector<VertexSet> jfg_extra_resolving_fixtures(int n, int m);

struct NegativeWitness {
    VertexSet set;
    InvariantKind predicate;
    std::string source; // short label of the failing construction
};

/// The explicitly constructed non-resolving sets for JFG(n, m).
std::vector<NegativeWitness> negative_witnesses(int n, int m);

/// The explicitly constructed non-resolving sets for Cay(Z_n, S_{n/2-1}).
std::vector<NegativeWitness> cp_negative_witnesses(int n);

struct TheoremClaim {
    std::string id;
    std::string guard_text;
    std::string formula_text;
    /// Runs the claim's full check at desk-scale defaults; returns per-instance
    /// messages via `detail` and overall pass/fail.
    std::function<bool(std::vector<std::string>& detail)> check;
};

/// All registered claims, fixed order.
const std::vector<TheoremClaim>& theorem_registry();

} // namespace resolvedim

#endif
