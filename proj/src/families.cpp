#include "resolvedim/families.hpp"

#include <algorithm>
#include <sstream>

namespace resolvedim {

Graph gen_cycle(int n) {
    if (n < 3) throw InvalidParam("cycle requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph gen_complete(int n) {
    if (n < 1) throw InvalidParam("complete graph requires n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph gen_jellyfish(int n, int m) {
    if (n < 3 || m < 1) throw InvalidParam("jellyfish requires n >= 3 and m >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (m + 1));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) edges.emplace_back(i, n + i * m + j);
    Graph g = build_graph(n * (m + 1), edges);
    for (int i = 0; i < n; ++i) {
        g.set_label(i, "c" + std::to_string(i));
        for (int j = 0; j < m; ++j)
            g.set_label(n + i * m + j, "v" + std::to_string(i) + "_" + std::to_string(j + 1));
    }
    return g;
}

Graph gen_cocktail_party(int r) {
    if (r < 2) throw InvalidParam("cocktail party requires r >= 2");
    int n = 2 * r;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v); // 2t <-> 2t+1 are partners
    return build_graph(n, edges);
}

Graph gen_cayley_zn(int n, int k) {
    if (n < 4 || k < 1 || k > n / 2 - 1) throw InvalidParam("cayley-zn requires n >= 4 and 1 <= k <= n/2 - 1");
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x) {
        for (int s = 1; s <= k; ++s) {
            int y = (x + s) % n;
            if (x < y)
                edges.emplace_back(x, y);
            else
                edges.emplace_back(y, x);
        }
    }
    return build_graph(n, edges);
}

namespace {

// Dihedral element a^i b^eps packed as eps*n + i.
struct Dihedral {
    int n;
    int mul(int x, int y) const {
        int xi = x % n, xe = x / n;
        int yi = y % n, ye = y / n;
        int i = xe ? (xi - yi % n + 2 * n) % n : (xi + yi) % n;
        return ((xe + ye) % 2) * n + i;
    }
    int inv(int x) const {
        int xi = x % n, xe = x / n;
        return xe ? x : (n - xi) % n;
    }
};

} // namespace

Graph gen_cayley_dihedral(int n) {
    if (n < 2) throw InvalidParam("cayley-d2n requires n >= 2");
    Dihedral grp{n};
    int order = 2 * n;
    // Connection set: everything except the identity and b.
    auto in_omega = [&](int g) { return g != 0 && g != n; };
    std::vector<Edge> edges;
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (in_omega(grp.mul(grp.inv(x), y))) edges.emplace_back(x, y);
    return build_graph(order, edges);
}

namespace {

bool extend_mapping(const Graph& g1, const Graph& g2, std::vector<int>& map,
                    std::vector<bool>& used, int next) {
    int n = g1.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || g2.degree(cand) != g1.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (g1.adjacent(next, prev) != g2.adjacent(cand, map[prev])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_mapping(g1, g2, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices) {
    if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices)
        throw TooLargeForIso("isomorphism check guarded to " + std::to_string(max_vertices) +
                             " vertices");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    auto degree_sequence = [](const Graph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_sequence(g1) != degree_sequence(g2)) return false;
    std::vector<int> map(g1.vertex_count(), -1);
    std::vector<bool> used(g1.vertex_count(), false);
    return extend_mapping(g1, g2, map, used, 0);
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("family spec needs 'kind:params': " + text);
    std::string kind = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    std::vector<int> nums;
    std::istringstream ps(params);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            nums.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer parameter '" + tok + "' in family spec: " + text);
        }
    }
    auto expect = [&](size_t count, FamilyKind k) {
        if (nums.size() != count)
            throw ParseError("family '" + kind + "' expects " + std::to_string(count) +
                             " parameter(s): " + text);
        FamilySpec s{k, nums[0], count > 1 ? nums[1] : 0};
        s.build(); // validate parameter guards eagerly
        return s;
    };
    if (kind == "cycle") return expect(1, FamilyKind::Cycle);
    if (kind == "complete") return expect(1, FamilyKind::Complete);
    if (kind == "jfg") return expect(2, FamilyKind::Jellyfish);
    if (kind == "cp") return expect(1, FamilyKind::CocktailParty);
    if (kind == "cayley-zn") return expect(2, FamilyKind::CayleyZn);
    if (kind == "cayley-d2n") return expect(1, FamilyKind::CayleyDihedral);
    throw ParseError("unknown family kind: " + kind);
}

std::string FamilySpec::to_string() const {
    switch (kind) {
    case FamilyKind::Cycle: return "cycle:" + std::to_string(p1);
    case FamilyKind::Complete: return "complete:" + std::to_string(p1);
    case FamilyKind::Jellyfish: return "jfg:" + std::to_string(p1) + "," + std::to_string(p2);
    case FamilyKind::CocktailParty: return "cp:" + std::to_string(p1);
    case FamilyKind::CayleyZn: return "cayley-zn:" + std::to_string(p1) + "," + std::to_string(p2);
    case FamilyKind::CayleyDihedral: return "cayley-d2n:" + std::to_string(p1);
    }
    return "?";
}

Graph FamilySpec::build() const {
    switch (kind) {
    case FamilyKind::Cycle: return gen_cycle(p1);
    case FamilyKind::Complete: return gen_complete(p1);
    case FamilyKind::Jellyfish: return gen_jellyfish(p1, p2);
    case FamilyKind::CocktailParty: return gen_cocktail_party(p1);
    case FamilyKind::CayleyZn: return gen_cayley_zn(p1, p2);
    case FamilyKind::CayleyDihedral: return gen_cayley_dihedral(p1);
    }
    throw InvalidParam("unreachable family kind");
}

} // namespace resolvedim
