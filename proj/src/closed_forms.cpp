#include "resolvedim/closed_forms.hpp"

#include <numeric>

#include "resolvedim/families.hpp"

namespace resolvedim {

namespace {

void check_jfg_guard(int n, int m) {
    if (n < 3 || m < 2) throw GuardViolated("jellyfish theorems require n >= 3 and m >= 2");
}

void check_cp_guard(int n) {
    if (n < 8 || n % 2 != 0) throw GuardViolated("cocktail party theorems require even n >= 8");
}

} // namespace

int jfg_beta(int n, int m) {
    check_jfg_guard(n, m);
    return n * m - n;
}

int jfg_psi(int n, int m) {
    check_jfg_guard(n, m);
    return n * m;
}

int jfg_sdim(int n, int m) {
    check_jfg_guard(n, m);
    return n * m - 1;
}

int jfg_adjdim(int n, int m) {
    check_jfg_guard(n, m);
    return n * m - 1;
}

int jfg_diameter(int n, int m) {
    if (n < 3 || m < 1) throw GuardViolated("jellyfish diameter requires n >= 3 and m >= 1");
    return n / 2 + 2;
}

int cp_dimensions(int n) {
    check_cp_guard(n);
    return n / 2;
}

VertexSet jfg_beta_witness(int n, int m) {
    check_jfg_guard(n, m);
    // Leaf v_{i,j} (1-based j) has index n + i*m + (j-1); drop the last leaf of
    // each support.
    VertexSet w;
    w.reserve(static_cast<size_t>(n) * (m - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m - 1; ++j) w.push_back(n + i * m + j);
    return w;
}

VertexSet jfg_psi_witness(int n, int m) {
    check_jfg_guard(n, m);
    VertexSet z(static_cast<size_t>(n) * m);
    std::iota(z.begin(), z.end(), n);
    return z;
}

VertexSet jfg_sdim_witness(int n, int m) {
    check_jfg_guard(n, m);
    VertexSet s(static_cast<size_t>(n) * m - 1);
    std::iota(s.begin(), s.end(), n);
    return s;
}

VertexSet cp_witness(int n) {
    check_cp_guard(n);
    VertexSet w(n / 2);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

std::vector<VertexSet> jfg_extra_resolving_fixtures(int n, int m) {
    check_jfg_guard(n, m);
    return {jfg_sdim_witness(n, m), jfg_psi_witness(n, m)};
}

std::vector<NegativeWitness> negative_witnesses(int n, int m) {
    check_jfg_guard(n, m);
    std::vector<NegativeWitness> out;

    VertexSet cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    out.push_back({cycle, InvariantKind::MetricDim, "all cycle vertices"});

    VertexSet no_first_support(static_cast<size_t>(n - 1) * m);
    std::iota(no_first_support.begin(), no_first_support.end(), n + m);
    out.push_back({no_first_support, InvariantKind::MetricDim, "leaves of supports 2..n"});

    VertexSet missing_two; // all leaves except the last support's first two
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (!(i == n - 1 && j < 2)) missing_two.push_back(n + i * m + j);
    out.push_back({missing_two, InvariantKind::MetricDim, "leaves minus two of one support"});

    out.push_back({jfg_beta_witness(n, m), InvariantKind::DoublyDim,
                   "leaves minus the last per support"});
    out.push_back({jfg_sdim_witness(n, m), InvariantKind::DoublyDim, "leaves minus the last leaf"});
    out.push_back({jfg_beta_witness(n, m), InvariantKind::StrongDim,
                   "leaves minus the last per support"});
    out.push_back({jfg_beta_witness(n, m), InvariantKind::AdjacencyDim,
                   "leaves minus the last per support"});
    return out;
}

std::vector<NegativeWitness> cp_negative_witnesses(int n) {
    check_cp_guard(n);
    int k = n / 2 - 1;
    VertexSet clique_k(k);
    std::iota(clique_k.begin(), clique_k.end(), 0);
    std::vector<NegativeWitness> out;
    out.push_back({clique_k, InvariantKind::MetricDim, "clique of size k"});
    VertexSet with_antipode = clique_k;
    with_antipode.push_back(k + 1); // the unique vertex at distance 2 from vertex 0
    out.push_back({with_antipode, InvariantKind::MetricDim, "clique of size k plus its antipode"});
    return out;
}

namespace {

bool passes(const Graph& g, const DistanceMatrix& dm, std::span<const int> set,
            InvariantKind kind) {
    switch (kind) {
    case InvariantKind::MetricDim: return is_resolving_set(g, dm, set);
    case InvariantKind::DoublyDim: return is_doubly_resolving_set(g, dm, set);
    case InvariantKind::StrongDim: return is_strong_resolving_set(g, dm, set);
    case InvariantKind::AdjacencyDim: return is_adjacency_resolving_set(g, set);
    }
    return false;
}

struct CheckLog {
    std::vector<std::string>& detail;
    bool ok = true;
    void expect(bool cond, const std::string& msg) {
        detail.push_back(std::string(cond ? "  ok: " : "  FAIL: ") + msg);
        ok = ok && cond;
    }
};

constexpr int kJfgBetaGrid[][2] = {{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
constexpr int kJfgSmallGrid[][2] = {{3, 2}, {4, 2}, {3, 3}};
constexpr int kCpSizes[] = {8, 10, 12};

std::string jfg_tag(int n, int m) {
    return "JFG(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

} // namespace

const std::vector<TheoremClaim>& theorem_registry() {
    static const std::vector<TheoremClaim> registry = {
        {"JFG-beta", "n >= 3, m >= 2", "beta = nm - n",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (auto [n, m] : kJfgBetaGrid) {
                 Graph g = gen_jellyfish(n, m);
                 DistanceMatrix dm(g);
                 auto res = min_resolving_set(g, dm);
                 log.expect(res.value == jfg_beta(n, m),
                            jfg_tag(n, m) + " solver beta = " + std::to_string(res.value));
                 log.expect(is_resolving_set(g, dm, jfg_beta_witness(n, m)),
                            jfg_tag(n, m) + " constructed witness resolves");
                 for (const auto& fixture : jfg_extra_resolving_fixtures(n, m))
                     log.expect(is_resolving_set(g, dm, fixture),
                                jfg_tag(n, m) + " larger leaf set of size " +
                                    std::to_string(fixture.size()) + " resolves");
                 for (const auto& neg : negative_witnesses(n, m)) {
                     if (neg.predicate != InvariantKind::MetricDim) continue;
                     log.expect(!passes(g, dm, neg.set, neg.predicate),
                                jfg_tag(n, m) + " " + neg.source + " is not resolving");
                 }
             }
             return log.ok;
         }},
        {"JFG-psi", "n >= 3, m >= 2", "psi = nm",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (auto [n, m] : kJfgSmallGrid) {
                 Graph g = gen_jellyfish(n, m);
                 DistanceMatrix dm(g);
                 auto res = min_doubly_resolving_set(g, dm);
                 log.expect(res.value == jfg_psi(n, m),
                            jfg_tag(n, m) + " solver psi = " + std::to_string(res.value));
                 log.expect(is_doubly_resolving_set(g, dm, jfg_psi_witness(n, m)),
                            jfg_tag(n, m) + " all-leaves witness doubly resolves");
                 for (const auto& neg : negative_witnesses(n, m)) {
                     if (neg.predicate != InvariantKind::DoublyDim) continue;
                     log.expect(!passes(g, dm, neg.set, neg.predicate),
                                jfg_tag(n, m) + " " + neg.source + " is not doubly resolving");
                 }
             }
             return log.ok;
         }},
        {"JFG-sdim", "n >= 3, m >= 2", "sdim = nm - 1",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (auto [n, m] : kJfgSmallGrid) {
                 Graph g = gen_jellyfish(n, m);
                 DistanceMatrix dm(g);
                 auto res = min_strong_resolving_set(g, dm);
                 auto via_mmd = min_strong_resolving_via_mmd(g, dm);
                 log.expect(res.value == jfg_sdim(n, m),
                            jfg_tag(n, m) + " solver sdim = " + std::to_string(res.value));
                 log.expect(via_mmd.value == res.value,
                            jfg_tag(n, m) + " vertex-cover route agrees");
                 log.expect(is_strong_resolving_set(g, dm, jfg_sdim_witness(n, m)),
                            jfg_tag(n, m) + " constructed witness strongly resolves");
                 for (const auto& neg : negative_witnesses(n, m)) {
                     if (neg.predicate != InvariantKind::StrongDim) continue;
                     log.expect(!passes(g, dm, neg.set, neg.predicate),
                                jfg_tag(n, m) + " " + neg.source + " is not strong resolving");
                 }
             }
             return log.ok;
         }},
        {"JFG-adjdim", "n >= 3, m >= 2", "adjdim = nm - 1",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (auto [n, m] : kJfgSmallGrid) {
                 Graph g = gen_jellyfish(n, m);
                 DistanceMatrix dm(g);
                 auto res = min_adjacency_resolving_set(g);
                 log.expect(res.value == jfg_adjdim(n, m),
                            jfg_tag(n, m) + " solver adjdim = " + std::to_string(res.value));
                 log.expect(is_adjacency_resolving_set(g, jfg_sdim_witness(n, m)),
                            jfg_tag(n, m) + " constructed witness adjacency-resolves");
                 for (const auto& neg : negative_witnesses(n, m)) {
                     if (neg.predicate != InvariantKind::AdjacencyDim) continue;
                     log.expect(!passes(g, dm, neg.set, neg.predicate),
                                jfg_tag(n, m) + " " + neg.source + " is not adjacency resolving");
                 }
             }
             return log.ok;
         }},
        {"JFG-diam", "n >= 3, m >= 1", "diam = floor(n/2) + 2",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n = 3; n <= 8; ++n) {
                 for (int m = 1; m <= 3; ++m) {
                     DistanceMatrix dm(gen_jellyfish(n, m));
                     log.expect(dm.diameter() == jfg_diameter(n, m),
                                jfg_tag(n, m) + " diameter = " + std::to_string(dm.diameter()));
                 }
             }
             return log.ok;
         }},
        {"CP-beta", "even n >= 8, k = n/2 - 1", "beta = k + 1",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n : kCpSizes) {
                 Graph g = gen_cayley_zn(n, n / 2 - 1);
                 DistanceMatrix dm(g);
                 log.expect(dm.diameter() == 2, "Cay(Z_" + std::to_string(n) + ") diameter 2");
                 auto res = min_resolving_set(g, dm);
                 log.expect(res.value == cp_dimensions(n),
                            "Cay(Z_" + std::to_string(n) + ") solver beta = " +
                                std::to_string(res.value));
                 log.expect(is_resolving_set(g, dm, cp_witness(n)),
                            "Cay(Z_" + std::to_string(n) + ") clique witness resolves");
                 for (const auto& neg : cp_negative_witnesses(n))
                     log.expect(!passes(g, dm, neg.set, neg.predicate),
                                "Cay(Z_" + std::to_string(n) + ") " + neg.source +
                                    " is not resolving");
                 auto adj = min_adjacency_resolving_set(g);
                 log.expect(adj.value == res.value,
                            "Cay(Z_" + std::to_string(n) + ") adjdim = beta (diameter 2)");
             }
             return log.ok;
         }},
        {"CP-psi", "even n >= 8, k = n/2 - 1", "psi = k + 1",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n : kCpSizes) {
                 Graph g = gen_cayley_zn(n, n / 2 - 1);
                 DistanceMatrix dm(g);
                 auto res = min_doubly_resolving_set(g, dm);
                 log.expect(res.value == cp_dimensions(n),
                            "Cay(Z_" + std::to_string(n) + ") solver psi = " +
                                std::to_string(res.value));
                 log.expect(is_doubly_resolving_set(g, dm, cp_witness(n)),
                            "Cay(Z_" + std::to_string(n) + ") clique witness doubly resolves");
             }
             return log.ok;
         }},
        {"CP-sdim", "even n >= 8, k = n/2 - 1", "sdim = k + 1",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n : kCpSizes) {
                 Graph g = gen_cayley_zn(n, n / 2 - 1);
                 DistanceMatrix dm(g);
                 auto res = min_strong_resolving_set(g, dm);
                 auto via_mmd = min_strong_resolving_via_mmd(g, dm);
                 log.expect(res.value == cp_dimensions(n),
                            "Cay(Z_" + std::to_string(n) + ") solver sdim = " +
                                std::to_string(res.value));
                 log.expect(via_mmd.value == res.value,
                            "Cay(Z_" + std::to_string(n) + ") vertex-cover route agrees");
                 log.expect(is_strong_resolving_set(g, dm, cp_witness(n)),
                            "Cay(Z_" + std::to_string(n) + ") clique witness strongly resolves");
             }
             return log.ok;
         }},
        {"CP-iso-zn", "even n >= 8, k = n/2 - 1", "Cay(Z_n, S_k) ~ CP(n/2)",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n : kCpSizes)
                 log.expect(are_isomorphic(gen_cayley_zn(n, n / 2 - 1), gen_cocktail_party(n / 2)),
                            "Cay(Z_" + std::to_string(n) + ") ~ CP(" + std::to_string(n / 2) + ")");
             return log.ok;
         }},
        {"CP-iso-d2n", "n >= 2", "Cay(D_2n, Omega) ~ CP(n)",
         [](std::vector<std::string>& detail) {
             CheckLog log{detail};
             for (int n = 2; n <= 6; ++n)
                 log.expect(are_isomorphic(gen_cayley_dihedral(n), gen_cocktail_party(n)),
                            "Cay(D_" + std::to_string(2 * n) + ") ~ CP(" + std::to_string(n) + ")");
             return log.ok;
         }},
    };
    return registry;
}

} // namespace resolvedim
