// Benchmark: pruned subset search with parallel candidate evaluation vs the
// sequential path vs the unpruned serial oracle, on a few family instances.

#include <algorithm>
#include <cstdio>

#include "resolvedim/families.hpp"
#include "resolvedim/solvers.hpp"

using namespace resolvedim;

namespace {

void bench_instance(const char* name, const Graph& g, InvariantKind kind) {
    DistanceMatrix dm(g);
    auto run = [&](int threads) {
        switch (kind) {
        case InvariantKind::MetricDim: return min_resolving_set(g, dm, threads);
        case InvariantKind::DoublyDim: return min_doubly_resolving_set(g, dm, threads);
        case InvariantKind::StrongDim: return min_strong_resolving_set(g, dm, threads);
        case InvariantKind::AdjacencyDim: return min_adjacency_resolving_set(g, threads);
        }
        throw std::logic_error("unreachable");
    };

    auto serial = run(1);
    auto parallel = run(std::max(resolve_thread_count(), 4));
    std::printf("%-12s %-7s value=%-3d nodes=%-10llu serial=%9.2fms parallel=%9.2fms  %s\n", name,
                to_string(kind).c_str(), serial.value,
                static_cast<unsigned long long>(serial.nodes_explored), serial.elapsed.count(),
                parallel.elapsed.count(),
                serial.value == parallel.value && serial.witness == parallel.witness
                    ? "agree"
                    : "MISMATCH");

    if (g.vertex_count() <= 14) {
        auto oracle = naive_minimum(g, &dm, kind);
        std::printf("%-12s %-7s oracle value=%-3d nodes=%-10llu elapsed=%9.2fms  %s\n", name,
                    to_string(kind).c_str(), oracle.value,
                    static_cast<unsigned long long>(oracle.nodes_explored),
                    oracle.elapsed.count(), oracle.value == serial.value ? "agree" : "MISMATCH");
    }
}

} // namespace

int main() {
    std::printf("workers: %d\n", resolve_thread_count());
    bench_instance("jfg:3,2", gen_jellyfish(3, 2), InvariantKind::MetricDim);
    bench_instance("jfg:4,3", gen_jellyfish(4, 3), InvariantKind::MetricDim);
    bench_instance("jfg:5,3", gen_jellyfish(5, 3), InvariantKind::MetricDim);
    bench_instance("jfg:3,3", gen_jellyfish(3, 3), InvariantKind::DoublyDim);
    bench_instance("jfg:4,2", gen_jellyfish(4, 2), InvariantKind::StrongDim);
    bench_instance("cp:6", gen_cocktail_party(6), InvariantKind::MetricDim);
    bench_instance("cayley-zn:12", gen_cayley_zn(12, 5), InvariantKind::DoublyDim);
    return 0;
}
