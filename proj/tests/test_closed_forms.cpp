#include <doctest.h>

#include "resolvedim/closed_forms.hpp"
#include "resolvedim/families.hpp"

using namespace resolvedim;

TEST_CASE("closed-form values") {
    CHECK(jfg_beta(3, 2) == 3);
    CHECK(jfg_beta(4, 3) == 8);
    CHECK(jfg_beta(5, 2) == 5);
    CHECK(jfg_psi(3, 2) == 6);
    CHECK(jfg_psi(4, 2) == 8);
    CHECK(jfg_psi(3, 3) == 9);
    CHECK(jfg_sdim(3, 2) == 5);
    CHECK(jfg_sdim(4, 2) == 7);
    CHECK(jfg_sdim(3, 3) == 8);
    CHECK(jfg_adjdim(3, 2) == 5);
    CHECK(jfg_adjdim(4, 2) == 7);
    CHECK(jfg_adjdim(5, 2) == 9);
    CHECK(jfg_diameter(3, 2) == 3);
    CHECK(jfg_diameter(4, 2) == 4);
    CHECK(jfg_diameter(8, 1) == 6);
    CHECK(cp_dimensions(8) == 4);
    CHECK(cp_dimensions(10) == 5);
    CHECK(cp_dimensions(12) == 6);
}

TEST_CASE("guards reject out-of-hypothesis parameters") {
    CHECK_THROWS_AS(jfg_beta(3, 1), GuardViolated);
    CHECK_THROWS_AS(jfg_psi(2, 2), GuardViolated);
    CHECK_THROWS_AS(jfg_diameter(2, 1), GuardViolated);
    CHECK_THROWS_AS(cp_dimensions(7), GuardViolated);
    CHECK_THROWS_AS(cp_dimensions(6), GuardViolated);
    CHECK_THROWS_AS(cp_witness(6), GuardViolated);
}

TEST_CASE("witness constructions name the documented indices") {
    CHECK(jfg_beta_witness(3, 2) == VertexSet{3, 5, 7});
    CHECK(jfg_beta_witness(3, 3) == VertexSet{3, 4, 6, 7, 9, 10});
    CHECK(jfg_psi_witness(3, 2) == VertexSet{3, 4, 5, 6, 7, 8});
    CHECK(jfg_psi_witness(4, 2) == VertexSet{4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(jfg_sdim_witness(3, 2) == VertexSet{3, 4, 5, 6, 7});
    CHECK(jfg_sdim_witness(4, 2) == VertexSet{4, 5, 6, 7, 8, 9, 10});
    CHECK(cp_witness(8) == VertexSet{0, 1, 2, 3});
    CHECK(cp_witness(10) == VertexSet{0, 1, 2, 3, 4});
    for (int n = 3; n <= 5; ++n) {
        for (int m = 2; m <= 3; ++m) {
            CHECK(static_cast<int>(jfg_beta_witness(n, m).size()) == n * m - n);
            CHECK(static_cast<int>(jfg_psi_witness(n, m).size()) == n * m);
            CHECK(static_cast<int>(jfg_sdim_witness(n, m).size()) == n * m - 1);
        }
    }
}

TEST_CASE("positive witnesses pass their predicates") {
    for (auto [n, m] : {std::pair{3, 2}, {4, 2}, {3, 3}, {5, 2}}) {
        Graph g = gen_jellyfish(n, m);
        DistanceMatrix dm(g);
        CHECK(is_resolving_set(g, dm, jfg_beta_witness(n, m)));
        CHECK(is_doubly_resolving_set(g, dm, jfg_psi_witness(n, m)));
        CHECK(is_strong_resolving_set(g, dm, jfg_sdim_witness(n, m)));
        CHECK(is_adjacency_resolving_set(g, jfg_sdim_witness(n, m)));
        for (const auto& fixture : jfg_extra_resolving_fixtures(n, m))
            CHECK(is_resolving_set(g, dm, fixture));
    }
    for (int n : {8, 10, 12}) {
        Graph g = gen_cayley_zn(n, n / 2 - 1);
        DistanceMatrix dm(g);
        auto w = cp_witness(n);
        CHECK(is_resolving_set(g, dm, w));
        CHECK(is_doubly_resolving_set(g, dm, w));
        CHECK(is_strong_resolving_set(g, dm, w));
    }
}

TEST_CASE("negative witnesses fail their stated predicates") {
    for (auto [n, m] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
        Graph g = gen_jellyfish(n, m);
        DistanceMatrix dm(g);
        for (const auto& neg : negative_witnesses(n, m)) {
            INFO(neg.source);
            switch (neg.predicate) {
            case InvariantKind::MetricDim: CHECK(!is_resolving_set(g, dm, neg.set)); break;
            case InvariantKind::DoublyDim: CHECK(!is_doubly_resolving_set(g, dm, neg.set)); break;
            case InvariantKind::StrongDim: CHECK(!is_strong_resolving_set(g, dm, neg.set)); break;
            case InvariantKind::AdjacencyDim: CHECK(!is_adjacency_resolving_set(g, neg.set)); break;
            }
        }
    }
    for (int n : {8, 10, 12}) {
        Graph g = gen_cayley_zn(n, n / 2 - 1);
        DistanceMatrix dm(g);
        for (const auto& neg : cp_negative_witnesses(n)) {
            INFO(neg.source);
            CHECK(!is_resolving_set(g, dm, neg.set));
        }
    }
}

TEST_CASE("specific negative constructions") {
    auto negs = negative_witnesses(3, 2);
    // cycle set, leaves of supports 2..n, leaves minus two of one support
    CHECK(negs[0].set == VertexSet{0, 1, 2});
    CHECK(negs[1].set == VertexSet{5, 6, 7, 8});
    CHECK(negs[2].set == VertexSet{3, 4, 5, 6});
    auto cp_negs = cp_negative_witnesses(8);
    CHECK(cp_negs[0].set == VertexSet{0, 1, 2});
    CHECK(cp_negs[1].set == VertexSet{0, 1, 2, 4});
}

TEST_CASE("theorem registry enumerates all claims and passes") {
    const auto& registry = theorem_registry();
    std::vector<std::string> ids;
    for (const auto& claim : registry) ids.push_back(claim.id);
    CHECK(ids == std::vector<std::string>{"JFG-beta", "JFG-psi", "JFG-sdim", "JFG-adjdim",
                                          "JFG-diam", "CP-beta", "CP-psi", "CP-sdim", "CP-iso-zn",
                                          "CP-iso-d2n"});
    // run the cheap claims here; the full registry runs in the acceptance suite
    for (const auto& claim : registry) {
        if (claim.id != "JFG-diam" && claim.id != "CP-iso-zn" && claim.id != "CP-iso-d2n")
            continue;
        std::vector<std::string> detail;
        INFO(claim.id);
        CHECK(claim.check(detail));
    }
}
