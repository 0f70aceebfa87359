// resolvedim: compute graph resolvability invariants (metric dimension,
// minimal doubly resolving set size, strong metric dimension, adjacency
// dimension) on generated families or edge-list files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "resolvedim/closed_forms.hpp"
#include "resolvedim/families.hpp"

namespace {

using namespace resolvedim;

constexpr int kExitUsage = 2;
constexpr int kExitInvalidGraph = 3;
constexpr int kExitGuard = 4;
constexpr int kExitVerifyFail = 5;

struct Range {
    int lo = 0, hi = 0, step = 1;
};

// "a", "a..b" or "a..b:s"
Range parse_range(const std::string& text) {
    Range r;
    auto colon = text.find(':');
    std::string span = colon == std::string::npos ? text : text.substr(0, colon);
    if (colon != std::string::npos) r.step = std::stoi(text.substr(colon + 1));
    auto dots = span.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(span);
    } else {
        r.lo = std::stoi(span.substr(0, dots));
        r.hi = std::stoi(span.substr(dots + 2));
    }
    if (r.step <= 0 || r.hi < r.lo) throw ParseError("bad range: " + text);
    return r;
}

Graph load_input(const std::string& input) {
    if (input.find(':') != std::string::npos) return FamilySpec::parse(input).build();
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open file: " + input);
    return read_edge_list(in);
}

std::string join(const VertexSet& set, char sep = ';') {
    std::string out;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(set[i]);
    }
    return out;
}

SolveResult solve(const Graph& g, const DistanceMatrix* dm, InvariantKind kind,
                  const std::string& method, std::string& method_used) {
    if (method == "brute") {
        method_used = "brute";
        return naive_minimum(g, dm, kind);
    }
    if (method == "mmd") {
        if (kind != InvariantKind::StrongDim)
            throw ParseError("--method mmd applies to sdim only");
        method_used = "mmd";
        return min_strong_resolving_via_mmd(g, *dm);
    }
    // auto/pruned. For sdim, auto takes the vertex-cover route when the MMD
    // graph is smaller than the pruned-search frontier.
    if (method == "auto" && kind == InvariantKind::StrongDim) {
        auto pairs = mmd_pairs(g, *dm);
        if (2 * pairs.size() < static_cast<size_t>(g.vertex_count())) {
            method_used = "mmd";
            return min_strong_resolving_via_mmd(g, *dm);
        }
    }
    method_used = "pruned";
    switch (kind) {
    case InvariantKind::MetricDim: return min_resolving_set(g, *dm);
    case InvariantKind::DoublyDim: return min_doubly_resolving_set(g, *dm);
    case InvariantKind::StrongDim: return min_strong_resolving_set(g, *dm);
    case InvariantKind::AdjacencyDim: return min_adjacency_resolving_set(g);
    }
    throw std::logic_error("unreachable");
}

const char* kCsvHeader =
    "family,n_vertices,invariant,solver_value,closed_form_value,match,witness,elapsed_ms,"
    "nodes_explored";

struct SweepRow {
    std::string family;
    int n_vertices;
    std::string invariant;
    std::string solver_value;
    std::string closed_form_value;
    std::string match;
    std::string witness;
    double elapsed_ms;
    std::string nodes;

    std::string to_csv() const {
        std::ostringstream os;
        // family may contain a comma (e.g. jfg:3,2), so it is always quoted
        os << '"' << family << "\"," << n_vertices << ',' << invariant << ',' << solver_value << ','
           << closed_form_value << ',' << match << ',' << witness << ','
           << static_cast<long long>(elapsed_ms) << ',' << nodes;
        return os.str();
    }
};

int cmd_gen(const std::string& spec_text, const std::string& out_path) {
    Graph g = FamilySpec::parse(spec_text).build();
    if (out_path.empty()) {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write file: " + out_path);
        write_edge_list(out, g);
    }
    return 0;
}

int cmd_dim(const std::string& input, const std::string& invariant, const std::string& method,
            const std::string& csv_path) {
    Graph g = load_input(input);
    InvariantKind kind = invariant_from_string(invariant);
    std::optional<DistanceMatrix> dm;
    if (kind != InvariantKind::AdjacencyDim) dm.emplace(g);

    std::string method_used;
    SolveResult res = solve(g, dm ? &*dm : nullptr, kind, method, method_used);

    std::cout << "graph:     " << input << "  (n=" << g.vertex_count()
              << ", e=" << g.edge_count() << ")\n"
              << "invariant: " << invariant
              << "   [legend: beta=metric dim, psi=doubly resolving, sdim=strong, "
                 "adjdim=adjacency]\n"
              << "value:     " << res.value << '\n'
              << "witness:   {" << join(res.witness, ',') << "}\n"
              << "method:    " << method_used << '\n'
              << "nodes:     " << res.nodes_explored << '\n'
              << "elapsed:   " << res.elapsed.count() << " ms\n";

    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw ParseError("cannot write file: " + csv_path);
        SweepRow row{input,
                     g.vertex_count(),
                     invariant,
                     std::to_string(res.value),
                     "n/a",
                     "n/a",
                     join(res.witness),
                     res.elapsed.count(),
                     std::to_string(res.nodes_explored)};
        out << kCsvHeader << '\n' << row.to_csv() << '\n';
    }
    return 0;
}

// Closed-form value for a sweep instance, or nullopt when the theorem guard
// does not cover the parameters.
std::optional<int> sweep_closed_form(const std::string& family, int n, int m,
                                     InvariantKind kind) {
    try {
        if (family == "jfg") {
            switch (kind) {
            case InvariantKind::MetricDim: return jfg_beta(n, m);
            case InvariantKind::DoublyDim: return jfg_psi(n, m);
            case InvariantKind::StrongDim: return jfg_sdim(n, m);
            case InvariantKind::AdjacencyDim: return jfg_adjdim(n, m);
            }
        }
        if (family == "cp") return cp_dimensions(n);
    } catch (const GuardViolated&) {
        return std::nullopt;
    }
    return std::nullopt;
}

int cmd_sweep(const std::string& family, const std::string& n_range, const std::string& m_range,
              const std::string& invariants_text, const std::string& out_path) {
    if (family != "jfg" && family != "cp")
        throw ParseError("sweep supports --family jfg or cp");
    Range nr = parse_range(n_range);
    Range mr = family == "jfg" ? parse_range(m_range.empty() ? "1" : m_range) : Range{0, 0, 1};

    std::vector<InvariantKind> kinds;
    std::istringstream is(invariants_text);
    std::string tok;
    while (std::getline(is, tok, ',')) kinds.push_back(invariant_from_string(tok));
    if (kinds.empty()) throw ParseError("--invariants must name at least one invariant");

    std::vector<SweepRow> rows;
    for (int n = nr.lo; n <= nr.hi; n += nr.step) {
        for (int m = mr.lo; m <= mr.hi; m += mr.step) {
            FamilySpec spec = family == "jfg"
                                  ? FamilySpec{FamilyKind::Jellyfish, n, m}
                                  : FamilySpec{FamilyKind::CocktailParty, n / 2, 0};
            for (InvariantKind kind : kinds) {
                SweepRow row;
                row.family = spec.to_string();
                row.invariant = to_string(kind);
                try {
                    Graph g = spec.build();
                    row.n_vertices = g.vertex_count();
                    std::optional<DistanceMatrix> dm;
                    if (kind != InvariantKind::AdjacencyDim) dm.emplace(g);
                    std::string method_used;
                    SolveResult res = solve(g, dm ? &*dm : nullptr, kind, "pruned", method_used);
                    row.solver_value = std::to_string(res.value);
                    row.witness = join(res.witness);
                    row.elapsed_ms = res.elapsed.count();
                    row.nodes = std::to_string(res.nodes_explored);
                    auto cf = sweep_closed_form(family, n, m, kind);
                    if (!cf) {
                        row.closed_form_value = "n/a";
                        row.match = "OUTSIDE_GUARD";
                    } else {
                        row.closed_form_value = std::to_string(*cf);
                        row.match = *cf == res.value ? "PASS" : "FAIL";
                    }
                } catch (const std::exception& e) {
                    row.n_vertices = 0;
                    row.solver_value = "error";
                    row.closed_form_value = "n/a";
                    row.match = "FAIL";
                    row.witness = "";
                    row.elapsed_ms = 0;
                    row.nodes = "0";
                    std::cerr << "row error (" << row.family << ", " << row.invariant
                              << "): " << e.what() << '\n';
                }
                rows.push_back(std::move(row));
            }
        }
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ParseError("cannot write file: " + out_path);
        out = &file;
    }
    *out << kCsvHeader << '\n';
    for (const auto& row : rows) *out << row.to_csv() << '\n';
    return 0;
}

int cmd_verify(const std::string& claim_filter, bool list_only, bool verbose) {
    bool all_ok = true;
    bool matched = false;
    for (const auto& claim : theorem_registry()) {
        if (!claim_filter.empty() && claim.id != claim_filter) continue;
        matched = true;
        if (list_only) {
            std::cout << claim.id << "  guard: " << claim.guard_text
                      << "  formula: " << claim.formula_text << '\n';
            continue;
        }
        std::vector<std::string> detail;
        bool ok = claim.check(detail);
        std::cout << (ok ? "PASS " : "FAIL ") << claim.id << "  (" << claim.formula_text << ")\n";
        if (verbose || !ok)
            for (const auto& line : detail) std::cout << line << '\n';
        all_ok = all_ok && ok;
    }
    if (!matched) {
        std::cerr << "unknown claim id: " << claim_filter << '\n';
        return kExitUsage;
    }
    return all_ok ? 0 : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph resolvability invariants: generate, solve, sweep, verify"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a family instance as an edge list");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec,
                    "family spec: cycle:n | complete:n | jfg:n,m | cp:r | cayley-zn:n,k | "
                    "cayley-d2n:n")
        ->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* dim = app.add_subcommand("dim", "compute one invariant of one graph");
    std::string dim_input, dim_invariant = "beta", dim_method = "auto", dim_csv;
    dim->add_option("input", dim_input, "family spec or edge-list file")->required();
    dim->add_option("--invariant", dim_invariant, "beta | psi | sdim | adjdim");
    dim->add_option("--method", dim_method, "auto | brute | pruned | mmd")
        ->check(CLI::IsMember({"auto", "brute", "pruned", "mmd"}));
    dim->add_option("--csv", dim_csv, "also write a one-row CSV");

    auto* sweep = app.add_subcommand("sweep", "solver vs closed form over a parameter grid");
    std::string sw_family, sw_n, sw_m, sw_invariants = "beta", sw_out;
    sweep->add_option("--family", sw_family, "jfg | cp")->required();
    sweep->add_option("--n", sw_n, "range a..b[:step] or single value")->required();
    sweep->add_option("--m", sw_m, "range for jfg's m parameter");
    sweep->add_option("--invariants", sw_invariants, "comma list of beta,psi,sdim,adjdim");
    sweep->add_option("-o,--output", sw_out, "CSV output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check every registered theorem claim");
    std::string vf_claim;
    bool vf_list = false, vf_verbose = false;
    verify->add_option("--claim", vf_claim, "check a single claim id");
    verify->add_flag("--list", vf_list, "list the registry and exit");
    verify->add_flag("-v,--verbose", vf_verbose, "print per-instance detail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_out);
        if (dim->parsed()) return cmd_dim(dim_input, dim_invariant, dim_method, dim_csv);
        if (sweep->parsed()) return cmd_sweep(sw_family, sw_n, sw_m, sw_invariants, sw_out);
        if (verify->parsed()) return cmd_verify(vf_claim, vf_list, vf_verbose);
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidGraph;
    } catch (const TooLargeForOracle& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const TooLargeForIso& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const InvalidVertex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidGraph;
    } catch (const SelfLoopRejected& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidGraph;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
