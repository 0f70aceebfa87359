#include "resolvedim/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resolvedim {

std::string to_string(InvariantKind k) {
    switch (k) {
    case InvariantKind::MetricDim: return "beta";
    case InvariantKind::DoublyDim: return "psi";
    case InvariantKind::StrongDim: return "sdim";
    case InvariantKind::AdjacencyDim: return "adjdim";
    }
    return "?";
}

std::string to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::BruteForce: return "brute";
    case SolveMethod::PrunedSearch: return "pruned";
    case SolveMethod::MmdVertexCover: return "mmd";
    }
    return "?";
}

InvariantKind invariant_from_string(const std::string& s) {
    if (s == "beta") return InvariantKind::MetricDim;
    if (s == "psi") return InvariantKind::DoublyDim;
    if (s == "sdim") return InvariantKind::StrongDim;
    if (s == "adjdim") return InvariantKind::AdjacencyDim;
    throw ParseError("unknown invariant: " + s + " (expected beta|psi|sdim|adjdim)");
}

int resolve_thread_count() {
    if (const char* env = std::getenv("RESOLVEDIM_THREADS")) {
        int t = std::atoi(env);
        return t <= 1 ? 1 : t;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    int n = g.vertex_count();
    // u,v are twins when N(u) = N(v) (non-adjacent) or N[u] = N[v] (adjacent).
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto same_neighborhood = [&](int u, int v, bool closed) {
        for (int x = 0; x < n; ++x) {
            if (x == u || x == v) continue;
            if (g.adjacent(u, x) != g.adjacent(v, x)) return false;
        }
        return closed == g.adjacent(u, v);
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (same_neighborhood(u, v, true) || same_neighborhood(u, v, false))
                parent[find(u)] = find(v);
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& c : by_root)
        if (c.size() >= 2) classes.push_back(std::move(c));
    std::sort(classes.begin(), classes.end());
    return classes;
}

namespace {

// Lower-bound structure for pruned subset enumeration: per-class minimum
// member counts plus individually mandatory vertices.
struct Constraint {
    int n = 0;
    std::vector<int> class_of;              // -1 = unconstrained
    std::vector<int> required;              // per class
    std::vector<std::vector<int>> members;  // per class, ascending
    std::vector<uint8_t> mandatory;
    std::vector<int> mandatory_suffix;      // [pos] = # mandatory in pos..n-1

    static Constraint none(int n) {
        Constraint c;
        c.n = n;
        c.class_of.assign(n, -1);
        c.mandatory.assign(n, 0);
        c.mandatory_suffix.assign(n + 1, 0);
        return c;
    }

    void add_twin_classes(const std::vector<std::vector<int>>& classes) {
        for (const auto& cls : classes) {
            int id = static_cast<int>(required.size());
            for (int v : cls) class_of[v] = id;
            required.push_back(static_cast<int>(cls.size()) - 1);
            members.push_back(cls);
        }
    }

    void mark_mandatory(int v) { mandatory[v] = 1; }

    void finish() {
        for (int pos = n - 1; pos >= 0; --pos)
            mandatory_suffix[pos] = mandatory_suffix[pos + 1] + mandatory[pos];
    }

    int available_in_suffix(int cls, int pos) const {
        const auto& m = members[cls];
        return static_cast<int>(m.end() - std::lower_bound(m.begin(), m.end(), pos));
    }

    int lower_bound() const {
        int total = 0;
        for (int r : required) total += r;
        return std::max(total, mandatory_suffix[0]);
    }
};

using Predicate = std::function<bool(std::span<const int>)>;

// Enumerates card-subsets of 0..n-1 in lexicographic order, pruning by the
// constraint, evaluating candidates in blocks (OpenMP-parallel when threads
// > 1). First success in enumeration order wins; nodes counts candidates up
// to and including the winner, identically for any worker count.
class SubsetSearch {
public:
    SubsetSearch(const Constraint& con, Predicate pred, int threads)
        : con_(con), pred_(std::move(pred)), threads_(threads) {}

    std::optional<VertexSet> find_first(int card, uint64_t& nodes) {
        card_ = card;
        chosen_.clear();
        chosen_class_.assign(con_.required.size(), 0);
        block_.clear();
        winner_.reset();
        nodes_ = 0;
        enumerate(0);
        if (!winner_) flush();
        nodes += nodes_;
        return winner_;
    }

private:
    // Returns true when the search should stop (winner found).
    bool enumerate(int pos) {
        int depth = static_cast<int>(chosen_.size());
        if (depth == card_) {
            emit();
            return winner_.has_value();
        }
        int slots_left = card_ - depth;
        // Feasibility: class deficits must be fillable from the suffix, and
        // every remaining mandatory vertex still needs a slot.
        int total_deficit = 0;
        for (size_t c = 0; c < con_.required.size(); ++c) {
            int deficit = con_.required[c] - chosen_class_[c];
            if (deficit <= 0) continue;
            if (deficit > con_.available_in_suffix(static_cast<int>(c), pos)) return false;
            total_deficit += deficit;
        }
        if (std::max(total_deficit, con_.mandatory_suffix[pos]) > slots_left) return false;

        for (int v = pos; v <= con_.n - slots_left; ++v) {
            chosen_.push_back(v);
            int cls = con_.class_of[v];
            if (cls >= 0) ++chosen_class_[cls];
            bool stop = enumerate(v + 1);
            chosen_.pop_back();
            if (cls >= 0) --chosen_class_[cls];
            if (stop) return true;
            if (con_.mandatory[v]) break; // a mandatory vertex cannot be skipped
        }
        return false;
    }

    void emit() {
        block_.insert(block_.end(), chosen_.begin(), chosen_.end());
        if (static_cast<int>(block_.size()) >= card_ * kBlockCandidates) flush();
    }

    void flush() {
        int count = card_ > 0 ? static_cast<int>(block_.size()) / card_ : 0;
        if (count == 0) return;
        int winner_idx = count;
#ifdef _OPENMP
        if (threads_ > 1) {
#pragma omp parallel for num_threads(threads_) schedule(dynamic, 8) reduction(min : winner_idx)
            for (int i = 0; i < count; ++i) {
                std::span<const int> cand(block_.data() + static_cast<size_t>(i) * card_, card_);
                if (pred_(cand)) winner_idx = std::min(winner_idx, i);
            }
        } else
#endif
        {
            for (int i = 0; i < count; ++i) {
                std::span<const int> cand(block_.data() + static_cast<size_t>(i) * card_, card_);
                if (pred_(cand)) {
                    winner_idx = i;
                    break;
                }
            }
        }
        if (winner_idx < count) {
            nodes_ += winner_idx + 1;
            const int* p = block_.data() + static_cast<size_t>(winner_idx) * card_;
            winner_ = VertexSet(p, p + card_);
        } else {
            nodes_ += count;
        }
        block_.clear();
    }

    static constexpr int kBlockCandidates = 4096;

    const Constraint& con_;
    Predicate pred_;
    int threads_;
    int card_ = 0;
    VertexSet chosen_;
    std::vector<int> chosen_class_;
    std::vector<int> block_;
    std::optional<VertexSet> winner_;
    uint64_t nodes_ = 0;
};

SolveResult run_search(InvariantKind kind, SolveMethod method, int n, int card_min, int card_max,
                       const Constraint& con, Predicate pred, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult result;
    result.invariant = kind;
    result.method = method;
    SubsetSearch search(con, std::move(pred), threads);
    for (int card = std::max(card_min, con.lower_bound()); card <= card_max; ++card) {
        if (auto witness = search.find_first(card, result.nodes_explored)) {
            result.value = card;
            result.witness = std::move(*witness);
            result.elapsed = std::chrono::steady_clock::now() - t0;
            return result;
        }
    }
    throw std::logic_error("no set of any cardinality passes the predicate");
}

int effective_threads(int threads) { return threads < 0 ? resolve_thread_count() : std::max(threads, 1); }

void require_solvable(const Graph& g) {
    if (g.vertex_count() < 2) throw InvalidParam("solver requires a graph of order >= 2");
}

} // namespace

SolveResult min_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads) {
    require_solvable(g);
    Constraint con = Constraint::none(g.vertex_count());
    con.add_twin_classes(twin_classes(g));
    con.finish();
    return run_search(InvariantKind::MetricDim, SolveMethod::PrunedSearch, g.vertex_count(), 1,
                      g.vertex_count(), con,
                      [&](std::span<const int> w) { return is_resolving_set(g, dm, w); },
                      effective_threads(threads));
}

SolveResult min_doubly_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads) {
    require_solvable(g);
    int n = g.vertex_count();
    Constraint con = Constraint::none(n);
    con.add_twin_classes(twin_classes(g));
    // A vertex u whose distances are a neighbor's plus one everywhere off u can
    // only be doubly resolved against that neighbor by u itself.
    for (int u = 0; u < n; ++u) {
        for (int s : g.neighbors(u)) {
            bool shadowed = true;
            for (int x = 0; x < n && shadowed; ++x)
                if (x != u && dm.at(u, x) != dm.at(s, x) + 1) shadowed = false;
            if (shadowed) {
                con.mark_mandatory(u);
                break;
            }
        }
    }
    con.finish();
    return run_search(InvariantKind::DoublyDim, SolveMethod::PrunedSearch, n, 2, n, con,
                      [&](std::span<const int> z) { return is_doubly_resolving_set(g, dm, z); },
                      effective_threads(threads));
}

SolveResult min_strong_resolving_set(const Graph& g, const DistanceMatrix& dm, int threads) {
    require_solvable(g);
    Constraint con = Constraint::none(g.vertex_count());
    con.add_twin_classes(twin_classes(g));
    con.finish();
    return run_search(InvariantKind::StrongDim, SolveMethod::PrunedSearch, g.vertex_count(), 1,
                      g.vertex_count(), con,
                      [&](std::span<const int> s) { return is_strong_resolving_set(g, dm, s); },
                      effective_threads(threads));
}

SolveResult min_adjacency_resolving_set(const Graph& g, int threads) {
    require_solvable(g);
    Constraint con = Constraint::none(g.vertex_count());
    con.add_twin_classes(twin_classes(g));
    con.finish();
    return run_search(InvariantKind::AdjacencyDim, SolveMethod::PrunedSearch, g.vertex_count(), 1,
                      g.vertex_count(), con,
                      [&](std::span<const int> w) { return is_adjacency_resolving_set(g, w); },
                      effective_threads(threads));
}

SolveResult naive_minimum(const Graph& g, const DistanceMatrix* dm, InvariantKind kind) {
    require_solvable(g);
    if (g.vertex_count() > 14) throw TooLargeForOracle("naive oracle guarded to n <= 14");
    if (kind != InvariantKind::AdjacencyDim && dm == nullptr)
        throw InvalidParam("naive oracle needs a distance matrix for metric invariants");
    int card_min = kind == InvariantKind::DoublyDim ? 2 : 1;
    Predicate pred;
    switch (kind) {
    case InvariantKind::MetricDim:
        pred = [&g, dm](std::span<const int> w) { return is_resolving_set(g, *dm, w); };
        break;
    case InvariantKind::DoublyDim:
        pred = [&g, dm](std::span<const int> z) { return is_doubly_resolving_set(g, *dm, z); };
        break;
    case InvariantKind::StrongDim:
        pred = [&g, dm](std::span<const int> s) { return is_strong_resolving_set(g, *dm, s); };
        break;
    case InvariantKind::AdjacencyDim:
        pred = [&g](std::span<const int> w) { return is_adjacency_resolving_set(g, w); };
        break;
    }
    Constraint con = Constraint::none(g.vertex_count());
    con.finish();
    return run_search(kind, SolveMethod::BruteForce, g.vertex_count(), card_min, g.vertex_count(),
                      con, std::move(pred), 1);
}

std::vector<Edge> mmd_pairs(const Graph& g, const DistanceMatrix& dm) {
    int n = g.vertex_count();
    auto maximally_distant = [&](int u, int v) {
        for (int w : g.neighbors(u))
            if (dm.at(w, v) > dm.at(u, v)) return false;
        return true;
    };
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (maximally_distant(u, v) && maximally_distant(v, u)) pairs.emplace_back(u, v);
    return pairs;
}

namespace {

struct CoverSearch {
    int n;
    std::vector<uint64_t> adj;
    VertexSet best; // starts as the trivial all-vertices cover

    void recurse(std::vector<uint64_t> cur, VertexSet chosen) {
        for (;;) {
            int pick = -1, max_deg = 0;
            int forced = -1;
            for (int v = 0; v < n; ++v) {
                int deg = std::popcount(cur[v]);
                if (deg == 1) forced = v;
                if (deg > max_deg) {
                    max_deg = deg;
                    pick = v;
                }
            }
            if (pick < 0) { // no edges left
                if (chosen.size() < best.size()) {
                    best = chosen;
                    std::sort(best.begin(), best.end());
                }
                return;
            }
            // Edges remain, so at least one more vertex is needed.
            if (chosen.size() + 1 >= best.size()) return;
            if (forced >= 0) { // degree-1 reduction: take the unique neighbor
                int u = std::countr_zero(cur[forced]);
                chosen.push_back(u);
                remove_vertex(cur, u);
                continue;
            }
            // Branch: pick in the cover, or all of pick's neighbors.
            {
                auto next = cur;
                auto next_chosen = chosen;
                next_chosen.push_back(pick);
                remove_vertex(next, pick);
                recurse(std::move(next), std::move(next_chosen));
            }
            uint64_t nbrs = cur[pick];
            while (nbrs) {
                int u = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (chosen.size() + 1 >= best.size()) return;
                chosen.push_back(u);
                remove_vertex(cur, u);
            }
        }
    }

    void remove_vertex(std::vector<uint64_t>& cur, int v) {
        uint64_t nbrs = cur[v];
        cur[v] = 0;
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            cur[u] &= ~(uint64_t{1} << v);
        }
    }
};

} // namespace

VertexSet minimum_vertex_cover(const Graph& g) {
    int n = g.vertex_count();
    if (n > 40) throw TooLargeForOracle("vertex cover search guarded to 40 vertices");
    CoverSearch search;
    search.n = n;
    search.adj.assign(n, 0);
    search.best.resize(n);
    std::iota(search.best.begin(), search.best.end(), 0);
    for (const auto& [u, v] : g.edges()) {
        search.adj[u] |= uint64_t{1} << v;
        search.adj[v] |= uint64_t{1} << u;
    }
    search.recurse(search.adj, {});
    return search.best;
}

SolveResult min_strong_resolving_via_mmd(const Graph& g, const DistanceMatrix& dm) {
    require_solvable(g);
    auto t0 = std::chrono::steady_clock::now();
    auto pairs = mmd_pairs(g, dm);
    Graph mmd_graph = build_graph(g.vertex_count(), pairs);
    SolveResult result;
    result.invariant = InvariantKind::StrongDim;
    result.method = SolveMethod::MmdVertexCover;
    result.witness = minimum_vertex_cover(mmd_graph);
    result.value = static_cast<int>(result.witness.size());
    result.nodes_explored = pairs.size();
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace resolvedim
