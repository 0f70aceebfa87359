#include "resolvedim/resolving.hpp"

#include <algorithm>

namespace resolvedim {

RepVector metric_representation(const DistanceMatrix& dm, int v, std::span<const int> w) {
    RepVector rep;
    rep.reserve(w.size());
    for (int wi : w) rep.push_back(dm.at(v, wi));
    return rep;
}

namespace {

bool all_distinct(std::vector<RepVector>& reps) {
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

} // namespace

bool is_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> w) {
    int n = g.vertex_count();
    std::vector<bool> in_w(n, false);
    for (int wi : w) in_w[wi] = true;
    std::vector<RepVector> reps;
    reps.reserve(n - w.size());
    for (int v = 0; v < n; ++v)
        if (!in_w[v]) reps.push_back(metric_representation(dm, v, w));
    return all_distinct(reps);
}

bool is_resolving_set_full(const Graph& g, const DistanceMatrix& dm, std::span<const int> w) {
    int n = g.vertex_count();
    std::vector<RepVector> reps;
    reps.reserve(n);
    for (int v = 0; v < n; ++v) reps.push_back(metric_representation(dm, v, w));
    return all_distinct(reps);
}

bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v) {
    return dm.at(u, x) - dm.at(u, y) != dm.at(v, x) - dm.at(v, y);
}

bool is_doubly_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> z) {
    if (z.size() < 2) throw SetTooSmall("doubly resolving set needs at least 2 vertices");
    if (g.vertex_count() < 2) throw InvalidParam("doubly resolving needs a graph of order >= 2");
    int n = g.vertex_count();
    // u,v are doubly resolved iff the difference vector (d(u,z_i) - d(v,z_i))_i
    // is not constant over z.
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int first = dm.at(u, z[0]) - dm.at(v, z[0]);
            bool resolved = false;
            for (size_t i = 1; i < z.size(); ++i) {
                if (dm.at(u, z[i]) - dm.at(v, z[i]) != first) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v) {
    int duv = dm.at(u, v);
    return dm.at(v, w) == duv + dm.at(u, w) || dm.at(u, w) == duv + dm.at(v, w);
}

bool is_strong_resolving_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> s) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool resolved = false;
            for (int w : s) {
                if (strongly_resolves(dm, w, u, v)) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

RepVector adjacency_representation(const Graph& g, int v, std::span<const int> w) {
    RepVector rep;
    rep.reserve(w.size());
    for (int wi : w) rep.push_back(v == wi ? 0 : (g.adjacent(v, wi) ? 1 : 2));
    return rep;
}

bool is_adjacency_resolving_set(const Graph& g, std::span<const int> w) {
    int n = g.vertex_count();
    std::vector<RepVector> reps;
    reps.reserve(n);
    for (int v = 0; v < n; ++v) reps.push_back(adjacency_representation(g, v, w));
    return all_distinct(reps);
}

} // namespace resolvedim
