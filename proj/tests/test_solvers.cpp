#include <doctest.h>

#include "resolvedim/families.hpp"
#include "resolvedim/solvers.hpp"

using namespace resolvedim;

TEST_CASE("twin classes group jellyfish leaves by support") {
    auto classes = twin_classes(gen_jellyfish(3, 2));
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{3, 4});
    CHECK(classes[1] == std::vector<int>{5, 6});
    CHECK(classes[2] == std::vector<int>{7, 8});
}

TEST_CASE("twin classes pair cocktail party partners, K_n is one class") {
    auto cp = twin_classes(gen_cocktail_party(3));
    REQUIRE(cp.size() == 3); // non-adjacent partners share a neighborhood
    CHECK(cp[0] == std::vector<int>{0, 1});
    auto kn = twin_classes(gen_complete(5));
    REQUIRE(kn.size() == 1);
    CHECK(kn[0].size() == 5);
}

TEST_CASE("min_resolving_set values") {
    auto check = [](const Graph& g, int expected) {
        DistanceMatrix dm(g);
        auto res = min_resolving_set(g, dm);
        CHECK(res.value == expected);
        CHECK(static_cast<int>(res.witness.size()) == expected);
        CHECK(is_resolving_set(g, dm, res.witness));
    };
    check(gen_jellyfish(3, 2), 3);
    check(gen_complete(5), 4);
    check(gen_cycle(6), 2);
}

TEST_CASE("witness is the lexicographically smallest optimum") {
    Graph g = gen_cycle(6);
    DistanceMatrix dm(g);
    CHECK(min_resolving_set(g, dm).witness == VertexSet{0, 1});
}

TEST_CASE("min_doubly_resolving_set values") {
    {
        Graph g = gen_jellyfish(3, 2);
        DistanceMatrix dm(g);
        auto res = min_doubly_resolving_set(g, dm);
        CHECK(res.value == 6);
        CHECK(is_doubly_resolving_set(g, dm, res.witness));
    }
    {
        Graph g = gen_cayley_zn(8, 3);
        DistanceMatrix dm(g);
        CHECK(min_doubly_resolving_set(g, dm).value == 4);
    }
    {
        Graph g = gen_complete(2);
        DistanceMatrix dm(g);
        auto res = min_doubly_resolving_set(g, dm);
        CHECK(res.value == 2);
        CHECK(res.witness == VertexSet{0, 1});
    }
}

TEST_CASE("min_strong_resolving_set values") {
    {
        Graph g = gen_jellyfish(3, 2);
        DistanceMatrix dm(g);
        auto res = min_strong_resolving_set(g, dm);
        CHECK(res.value == 5);
        CHECK(is_strong_resolving_set(g, dm, res.witness));
    }
    {
        Graph g = gen_cayley_zn(8, 3);
        DistanceMatrix dm(g);
        CHECK(min_strong_resolving_set(g, dm).value == 4);
    }
    for (int n = 2; n <= 6; ++n) {
        Graph g = gen_complete(n);
        DistanceMatrix dm(g);
        CHECK(min_strong_resolving_set(g, dm).value == n - 1);
        CHECK(naive_minimum(g, &dm, InvariantKind::StrongDim).value == n - 1);
    }
}

TEST_CASE("mmd pair structure drives the vertex-cover route") {
    {
        // JFG(3,2): the six leaves are pairwise MMD, so the MMD graph is K_6
        Graph g = gen_jellyfish(3, 2);
        DistanceMatrix dm(g);
        auto pairs = mmd_pairs(g, dm);
        CHECK(pairs.size() == 15);
        for (auto [u, v] : pairs) {
            CHECK(u >= 3);
            CHECK(v >= 3);
        }
        auto res = min_strong_resolving_via_mmd(g, dm);
        CHECK(res.value == 5);
        CHECK(res.method == SolveMethod::MmdVertexCover);
        CHECK(is_strong_resolving_set(g, dm, res.witness));
    }
    {
        // CP(r): MMD graph is the perfect matching of partner pairs
        Graph g = gen_cocktail_party(4);
        DistanceMatrix dm(g);
        auto pairs = mmd_pairs(g, dm);
        CHECK(pairs.size() == 4);
        CHECK(min_strong_resolving_via_mmd(g, dm).value == 4);
    }
    {
        // path P_3: only the endpoints are MMD
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        DistanceMatrix dm(p3);
        auto pairs = mmd_pairs(p3, dm);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == Edge{0, 2});
        CHECK(min_strong_resolving_via_mmd(p3, dm).value == 1);
    }
}

TEST_CASE("mmd route agrees with subset search on assorted graphs") {
    std::vector<Graph> graphs;
    graphs.push_back(gen_cycle(7));
    graphs.push_back(gen_jellyfish(4, 2));
    graphs.push_back(gen_cocktail_party(5));
    graphs.push_back(gen_cayley_dihedral(4));
    graphs.push_back(build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}}));
    for (const auto& g : graphs) {
        DistanceMatrix dm(g);
        CHECK(min_strong_resolving_set(g, dm).value == min_strong_resolving_via_mmd(g, dm).value);
    }
}

TEST_CASE("min_adjacency_resolving_set values") {
    Graph g = gen_jellyfish(3, 2);
    auto res = min_adjacency_resolving_set(g);
    CHECK(res.value == 5);
    CHECK(is_adjacency_resolving_set(g, res.witness));
    CHECK(min_adjacency_resolving_set(gen_cayley_zn(8, 3)).value == 4);
    CHECK(min_adjacency_resolving_set(gen_complete(3)).value == 2);
}

TEST_CASE("adjacency solver accepts disconnected graphs") {
    Graph g = build_graph(4, {{0, 1}, {2, 3}});
    auto res = min_adjacency_resolving_set(g);
    CHECK(is_adjacency_resolving_set(g, res.witness));
    CHECK(res.value == 2);
}

TEST_CASE("naive oracle examples and guard") {
    {
        Graph g = gen_jellyfish(3, 2);
        DistanceMatrix dm(g);
        CHECK(naive_minimum(g, &dm, InvariantKind::MetricDim).value == 3);
    }
    {
        Graph g = gen_cycle(4);
        DistanceMatrix dm(g);
        CHECK(naive_minimum(g, &dm, InvariantKind::MetricDim).value == 2);
    }
    {
        Graph g = gen_complete(2);
        DistanceMatrix dm(g);
        CHECK(naive_minimum(g, &dm, InvariantKind::StrongDim).value == 1);
    }
    Graph big = gen_cycle(15);
    DistanceMatrix dm(big);
    CHECK_THROWS_AS(naive_minimum(big, &dm, InvariantKind::MetricDim), TooLargeForOracle);
}

TEST_CASE("results are identical for any worker count") {
    Graph g = gen_jellyfish(4, 2);
    DistanceMatrix dm(g);
    for (auto solver : {&min_resolving_set, &min_doubly_resolving_set, &min_strong_resolving_set}) {
        auto serial = solver(g, dm, 1);
        auto parallel = solver(g, dm, 4);
        CHECK(serial.value == parallel.value);
        CHECK(serial.witness == parallel.witness);
        CHECK(serial.nodes_explored == parallel.nodes_explored);
    }
    auto a1 = min_adjacency_resolving_set(g, 1);
    auto a4 = min_adjacency_resolving_set(g, 4);
    CHECK(a1.witness == a4.witness);
    CHECK(a1.nodes_explored == a4.nodes_explored);
}

TEST_CASE("solvers reject trivial graphs") {
    Graph one = build_graph(1, {});
    CHECK_THROWS_AS(min_adjacency_resolving_set(one), InvalidParam);
}

TEST_CASE("RESOLVEDIM_THREADS caps the worker count") {
    setenv("RESOLVEDIM_THREADS", "0", 1);
    CHECK(resolve_thread_count() == 1);
    setenv("RESOLVEDIM_THREADS", "3", 1);
    CHECK(resolve_thread_count() == 3);
    unsetenv("RESOLVEDIM_THREADS");
    CHECK(resolve_thread_count() >= 1);
}

TEST_CASE("invariant kind names round trip") {
    for (auto k : {InvariantKind::MetricDim, InvariantKind::DoublyDim, InvariantKind::StrongDim,
                   InvariantKind::AdjacencyDim})
        CHECK(invariant_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(invariant_from_string("bogus"), ParseError);
}
