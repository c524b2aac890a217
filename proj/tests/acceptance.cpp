// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   1 oracle equivalence of reduce/lift on 2000 random instances
//   2 per-rule soundness with >= 200 observed applications per rule
//   3 clique-expansion equivalence on 500 random instances
//   4 exported LP optima match the oracle on 200 random instances
//   5 fixpoint and byte determinism of kernel/trace/stats
//   6 worked-example regression
//   7 stats emitter provides the reduction-table columns
//   8 star forests reduce to nothing well under a second at n = 10^5

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hymis/exact.hpp"
#include "hymis/expansion.hpp"
#include "hymis/ilp_export.hpp"
#include "hymis/io.hpp"
#include "hymis/reductions.hpp"
#include "support/generators.hpp"
#include "support/lp_eval.hpp"
#include "support/oracle.hpp"

using namespace hymis;
using hymis::testing::brute_force_mis;
using hymis::testing::brute_force_mis_graph;
using hymis::testing::Rng;

namespace {

int g_failures = 0;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& message) {
        if (ok) detail = message;
        ok = false;
    }

    void expect(bool condition, const std::string& message) {
        if (!condition) fail(message);
    }
};

void report(int index, const std::string& name, const Check& check) {
    std::printf("criterion %d (%s): %s%s%s\n", index, name.c_str(), check.ok ? "PASS" : "FAIL",
                check.detail.empty() ? "" : " - ", check.detail.c_str());
    if (!check.ok) ++g_failures;
}

Hypergraph build(std::size_t n, const std::vector<std::vector<VertexId>>& edges) {
    Hypergraph h(n);
    for (const auto& e : edges) h.add_edge(e);
    return h;
}

// ---------------------------------------------------------------- criterion 1
Check oracle_equivalence() {
    Check check;
    Rng rng(20250801);
    const auto started = std::chrono::steady_clock::now();
    for (int round = 0; round < 2000 && check.ok; ++round) {
        const Hypergraph original = testing::random_hypergraph(rng);
        const KernelResult kr = reduce(original);
        const auto before = brute_force_mis(original);
        const auto after = brute_force_mis(kr.kernel);
        check.expect(before.alpha == after.alpha + kr.offset,
                     "offset mismatch in round " + std::to_string(round));
        if (!check.ok) break;
        std::vector<VertexId> kernel_solution;
        for (VertexId v : after.witness) kernel_solution.push_back(kr.vertex_map[v - 1]);
        const auto lifted = lift_solution(kr, kernel_solution);
        check.expect(lifted.size() == before.alpha && verify_independent(original, lifted),
                     "lifted solution invalid in round " + std::to_string(round));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    check.expect(elapsed < 120.0, "took " + std::to_string(elapsed) + "s");
    if (check.ok) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "2000 instances in %.1fs", elapsed);
        check.detail = buffer;
    }
    return check;
}

// ---------------------------------------------------------------- criterion 2
Check per_rule_soundness() {
    Check check;
    struct RuleRun {
        ReductionKind kind;
        std::function<Hypergraph(Rng&)> generate;
    };
    testing::RandomSpec loose;  // small, busy instances fire the cheap rules often
    loose.n_max = 10;
    loose.m_max = 10;
    loose.size_max = 4;
    auto random_loose = [loose](Rng& rng) { return testing::random_hypergraph(rng, loose); };
    const std::vector<RuleRun> runs = {
        {ReductionKind::SizeOneEdge, random_loose},
        {ReductionKind::EdgeDomination, testing::planted_edge_domination},
        {ReductionKind::DegreeZero, random_loose},
        {ReductionKind::DegreeOne, random_loose},
        {ReductionKind::Twins, testing::planted_twins},
        {ReductionKind::Sunflower, testing::planted_sunflower},
        {ReductionKind::SimplicialVertex, testing::planted_simplicial},
        {ReductionKind::VertexDomination, testing::planted_vertex_domination},
        {ReductionKind::Unconfined, random_loose},
    };
    for (const RuleRun& run : runs) {
        Rng rng(1000 + static_cast<unsigned>(run.kind));
        int fired = 0;
        for (int attempt = 0; attempt < 20000 && fired < 200 && check.ok; ++attempt) {
            const Hypergraph original = run.generate(rng);
            Hypergraph h = original;
            const bool edge_rule = run.kind == ReductionKind::SizeOneEdge ||
                                   run.kind == ReductionKind::EdgeDomination;
            std::optional<TraceEvent> ev;
            if (edge_rule) {
                for (EdgeId e : h.edges()) {
                    ev = apply_rule(run.kind, h, e, nullptr);
                    if (ev) break;
                }
            } else {
                for (VertexId v : h.vertices()) {
                    ev = apply_rule(run.kind, h, v, nullptr);
                    if (ev) break;
                }
            }
            if (!ev) continue;
            ++fired;
            const auto before = brute_force_mis(original);
            const auto after = brute_force_mis(h);
            check.expect(before.alpha == after.alpha + ev->alpha_offset,
                         std::string(to_string(run.kind)) + " broke the alpha relation");
            if (!ev->included.empty()) {
                std::vector<VertexId> combined = after.witness;
                combined.insert(combined.end(), ev->included.begin(), ev->included.end());
                check.expect(verify_independent(original, combined),
                             std::string(to_string(run.kind)) + " produced a dependent include");
            }
        }
        check.expect(fired >= 200, std::string(to_string(run.kind)) + " fired only " +
                                       std::to_string(fired) + " times");
    }
    // negative guard: |T| < delta_T families must never trigger the twins rule
    for (std::size_t twins = 2; twins <= 4 && check.ok; ++twins) {
        for (std::size_t petals = std::max<std::size_t>(3, twins + 1); petals <= twins + 3;
             ++petals) {
            const Hypergraph family = testing::twins_guard_family(twins, petals);
            for (VertexId v : family.vertices()) {
                Hypergraph copy = family;
                check.expect(!apply_twins(copy, v).has_value(),
                             "twins fired on the guard family");
            }
        }
    }
    return check;
}

// ---------------------------------------------------------------- criterion 3
Check expansion_equivalence() {
    Check check;
    Rng rng(3);
    testing::RandomSpec spec;
    spec.n_max = 14;
    for (int round = 0; round < 500 && check.ok; ++round) {
        const Hypergraph h = testing::random_hypergraph(rng, spec);
        const auto [g, map] = clique_expand(h);
        check.expect(brute_force_mis(h).alpha == brute_force_mis_graph(g).alpha,
                     "expansion changed the independence number in round " +
                         std::to_string(round));
        (void)map;
    }
    return check;
}

// ---------------------------------------------------------------- criterion 4
Check ilp_soundness() {
    Check check;
    Rng rng(4);
    testing::RandomSpec spec;
    spec.n_max = 12;
    spec.m_max = 16;
    for (int round = 0; round < 200 && check.ok; ++round) {
        const Hypergraph h = testing::random_hypergraph(rng, spec);
        const std::size_t alpha = brute_force_mis(h).alpha;
        const std::size_t lp_alpha =
            testing::optimize_exhaustive(testing::parse_lp(export_lp_hypergraph(h)));
        check.expect(lp_alpha == alpha, "hypergraph LP optimum mismatch in round " +
                                            std::to_string(round));
        const auto [g, map] = clique_expand(h);
        const std::size_t glp_alpha =
            testing::optimize_exhaustive(testing::parse_lp(export_lp_graph(g)));
        check.expect(glp_alpha == alpha,
                     "graph LP optimum mismatch in round " + std::to_string(round));
        (void)map;
    }
    return check;
}

// ---------------------------------------------------------------- criterion 5
Check fixpoint_and_determinism() {
    Check check;
    Rng rng(5);
    for (int round = 0; round < 150 && check.ok; ++round) {
        const Hypergraph original = testing::random_hypergraph(rng);
        const std::uint64_t n = original.num_vertices();
        const std::uint64_t m = original.num_edges();
        const double e_bar = average_edge_size(original);

        const KernelResult first = reduce(original);
        const KernelResult second = reduce(original);
        check.expect(write_hmetis(first.kernel) == write_hmetis(second.kernel),
                     "kernel bytes differ between runs");
        check.expect(write_trace(first.trace) == write_trace(second.trace),
                     "trace bytes differ between runs");
        check.expect(write_vertex_map(first.vertex_map) == write_vertex_map(second.vertex_map),
                     "map bytes differ between runs");
        check.expect(write_stats(make_stats_report(n, m, e_bar, first)) ==
                         write_stats(make_stats_report(n, m, e_bar, second)),
                     "stats bytes differ between runs");

        const KernelResult rerun = reduce(first.kernel);
        check.expect(rerun.trace.empty() && rerun.offset == 0 &&
                         write_hmetis(rerun.kernel) == write_hmetis(first.kernel),
                     "reduce(kernel) is not a no-op");
    }
    return check;
}

// ---------------------------------------------------------------- criterion 6
Check worked_examples() {
    Check check;
    auto expect_alpha = [&](const Hypergraph& h, std::size_t alpha, const char* what) {
        check.expect(brute_force_mis(h).alpha == alpha, what);
    };

    {  // size-one edge removal frees both degree-zero inclusions
        auto h = build(3, {{3}});
        h.remove_vertex(2);
        expect_alpha(h, 2, "size-one worked example alpha");
        check.expect(apply_size_one_edge(h, 1).has_value(), "size-one fires");
        check.expect(apply_degree_zero(h, 1).has_value() && apply_degree_zero(h, 3).has_value(),
                     "degree-zero cascade after size-one");
    }
    {  // edge domination preserves alpha = 1
        auto h = build(3, {{1, 2}, {1, 2, 3}});
        expect_alpha(h, 1, "edge domination alpha before");
        check.expect(apply_edge_domination(h, 1).has_value(), "edge domination fires");
        expect_alpha(h, 1, "edge domination alpha after");
    }
    {  // duplicate edges: the tested (lower-id) duplicate is removed
        auto h = build(2, {{1, 2}, {1, 2}});
        expect_alpha(h, 1, "duplicate edge alpha before");
        check.expect(apply_edge_domination(h, 1).has_value(), "duplicate domination fires");
        check.expect(h.is_edge(2) && !h.is_edge(1), "lower-id duplicate removed");
        expect_alpha(h, 1, "duplicate edge alpha after");
    }
    {  // degree-zero inclusion
        auto h = build(3, {{2, 3}});
        expect_alpha(h, 2, "degree-zero alpha before");
        auto ev = apply_degree_zero(h, 1);
        check.expect(ev.has_value() && ev->alpha_offset == 1, "degree-zero fires");
        expect_alpha(h, 1, "degree-zero kernel alpha");
    }
    {  // degree-one: single big edge
        auto h = build(3, {{1, 2, 3}});
        expect_alpha(h, 1, "degree-one alpha");
        auto ev = apply_degree_one(h, 1);
        check.expect(ev.has_value() && h.num_vertices() == 0, "degree-one clears the instance");
    }
    {  // degree-one on a path plus downstream cascade reaches alpha = 2
        auto h = build(3, {{1, 2}, {2, 3}});
        expect_alpha(h, 2, "path alpha");
        auto kr = reduce(h);
        check.expect(kr.offset == 2 && kr.kernel.num_vertices() == 0, "path reduces to nothing");
        check.expect(lift_solution(kr, {}) == std::vector<VertexId>{1, 3}, "path lifts to {1,3}");
    }
    {  // twins fire and include both
        auto h = build(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        expect_alpha(h, 2, "twins alpha");
        auto ev = apply_twins(h, 1);
        check.expect(ev.has_value() && ev->included == std::vector<VertexId>{1, 2} &&
                         h.num_vertices() == 0,
                     "twins include the pair");
    }
    {  // twins guard: delta_T = 3 > |T| = 2, optimum is the petal side
        auto h = build(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        expect_alpha(h, 3, "twins guard alpha");
        check.expect(!apply_twins(h, 1).has_value(), "twins guard holds");
    }
    {  // sunflower keeps the lowest core vertex
        auto h = build(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
        expect_alpha(h, 3, "sunflower alpha before");
        auto ev = apply_sunflower(h, 1);
        check.expect(ev.has_value() && ev->excluded == std::vector<VertexId>{2},
                     "sunflower excludes the higher core vertex");
        expect_alpha(h, 3, "sunflower alpha after");
    }
    {  // sunflower on a bare pair cascades to a single inclusion
        auto h = build(2, {{1, 2}});
        expect_alpha(h, 1, "pair alpha");
        auto kr = reduce(h);
        check.expect(kr.offset == 1 && kr.kernel.num_vertices() == 0, "pair reduces to nothing");
    }
    {  // simplicial vertex with a three-edge clique neighborhood
        auto h = build(4, {{1, 2}, {2, 3}, {1, 3}, {4, 1, 2}, {4, 3}});
        expect_alpha(h, 1, "simplicial alpha");
        auto ev = apply_simplicial(h, 4);
        check.expect(ev.has_value() && ev->included == std::vector<VertexId>{4} &&
                         h.num_vertices() == 0,
                     "simplicial includes the apex");
    }
    {  // simplicial vertex whose clique is one hyperedge
        auto h = build(4, {{1, 2, 3}, {4, 1}, {4, 2}, {4, 3}});
        expect_alpha(h, 1, "single-edge clique alpha");
        auto ev = apply_simplicial(h, 4);
        check.expect(ev.has_value() && ev->included == std::vector<VertexId>{4},
                     "single-edge clique accepted");
    }
    {  // vertex domination excludes the dominator, both leaves survive
        auto h = build(3, {{1, 2}, {1, 3}});
        expect_alpha(h, 2, "domination alpha");
        auto ev = apply_vertex_domination(h, 1);
        check.expect(ev.has_value() && ev->excluded == std::vector<VertexId>{1},
                     "domination excludes vertex 1");
        auto kr = reduce(h);
        check.expect(kr.offset == 2, "leaves included downstream");
    }
    {  // vertex domination inside a single edge
        auto h = build(3, {{1, 2, 3}});
        expect_alpha(h, 1, "single edge alpha");
        auto ev = apply_vertex_domination(h, 3);
        check.expect(ev.has_value() && ev->excluded == std::vector<VertexId>{3},
                     "domination excludes vertex 3");
        expect_alpha(h, 1, "single edge alpha preserved");
    }
    {  // unconfined: triangle, path, single edge
        auto tri = build(3, {{1, 2}, {1, 3}, {2, 3}});
        expect_alpha(tri, 1, "triangle alpha");
        check.expect(apply_unconfined(tri, 1).has_value(), "unconfined fires on the triangle");
        expect_alpha(tri, 1, "triangle alpha preserved");

        auto path = build(4, {{1, 2}, {2, 3}, {3, 4}});
        expect_alpha(path, 2, "path4 alpha");
        check.expect(apply_unconfined(path, 2).has_value(), "unconfined fires on the path");
        expect_alpha(path, 2, "path4 alpha preserved");

        auto pair = build(2, {{1, 2}});
        expect_alpha(pair, 1, "pair alpha");
        check.expect(apply_unconfined(pair, 1).has_value(), "unconfined fires on a single edge");
        expect_alpha(pair, 1, "pair alpha preserved");
    }
    {  // reduce on the sunflower instance reaches offset 3
        auto h = build(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
        auto kr = reduce(h);
        check.expect(kr.kernel.num_vertices() == 0 && kr.offset == 3,
                     "sunflower instance reduces to offset 3");
    }
    {  // rule filter: twins instance untouched under degree rules only
        auto h = build(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        auto kr = reduce(h, ReducerConfig::with_rules(
                                {ReductionKind::DegreeZero, ReductionKind::DegreeOne}));
        check.expect(kr.kernel.num_vertices() == 4 && kr.trace.empty(),
                     "rule filter leaves the kernel untouched");
    }
    {  // exact solver examples
        check.expect(solve_exact(build(3, {{1, 2}, {2, 3}})).cardinality() == 2,
                     "solver on the path");
        check.expect(solve_exact(build(3, {{1, 2}, {1, 3}, {2, 3}})).cardinality() == 1,
                     "solver on the triangle");
        check.expect(solve_exact_graph(Graph(3, {{1, 2}, {2, 3}})).cardinality() == 2,
                     "graph solver on the path");
        check.expect(solve_exact_graph(Graph(3, {{1, 2}, {1, 3}, {2, 3}})).cardinality() == 1,
                     "graph solver on the triangle");
    }
    {  // reduce + solve + lift equals direct solve on random instances
        Rng rng(606);
        for (int round = 0; round < 50 && check.ok; ++round) {
            const Hypergraph h = testing::random_hypergraph(rng);
            const auto direct = solve_exact(h);
            const auto kr = reduce(h);
            const auto kernel_solution = solve_exact(kr.kernel);
            std::vector<VertexId> original_ids;
            for (VertexId v : kernel_solution.members) original_ids.push_back(kr.vertex_map[v - 1]);
            const auto lifted = lift_solution(kr, original_ids);
            check.expect(lifted.size() == direct.cardinality(),
                         "pipeline and direct solves disagree");
            check.expect(verify_independent(h, lifted), "pipeline solution dependent");
        }
    }
    {  // LP worked examples
        const auto doc = export_lp_hypergraph(build(4, {{1, 2, 3}, {3, 4}}));
        check.expect(testing::optimize_exhaustive(testing::parse_lp(doc)) == 2,
                     "hypergraph LP optimum");
        const auto tri = export_lp_graph(Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
        check.expect(testing::optimize_exhaustive(testing::parse_lp(tri)) == 1,
                     "triangle graph LP optimum");
    }
    return check;
}

// ---------------------------------------------------------------- criterion 7
Check stats_columns() {
    Check check;
    auto h = build(3, {{1, 2}, {2, 3}});
    const std::uint64_t n = h.num_vertices();
    const std::uint64_t m = h.num_edges();
    const double e_bar = average_edge_size(h);
    const auto kr = reduce(h);
    const std::string json = write_stats(make_stats_report(n, m, e_bar, kr));
    for (const char* key : {"\"n\":", "\"m\":", "\"e_bar\":", "\"n_r\":", "\"m_r\":",
                            "\"e_bar_r\":", "\"t\":"}) {
        check.expect(json.find(key) != std::string::npos,
                     std::string("missing stats column ") + key);
    }
    if (check.ok) {
        check.detail = "columns n, m, e_bar, n_r, m_r, e_bar_r, t present";
    }
    return check;
}

// ---------------------------------------------------------------- criterion 8
Check star_forest_speed() {
    Check check;
    const Hypergraph forest = testing::star_forest(25000, 4);  // 125000 vertices
    check.expect(forest.num_vertices() == 125000, "star forest size");
    const auto kr = reduce(forest);
    check.expect(kr.kernel.num_vertices() == 0 && kr.kernel.num_edges() == 0,
                 "star forest kernel not empty");
    check.expect(kr.elapsed_seconds < 1.0,
                 "reduction took " + std::to_string(kr.elapsed_seconds) + "s");
    if (check.ok) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "n=125000 reduced in %.3fs", kr.elapsed_seconds);
        check.detail = buffer;
    }
    return check;
}

}  // namespace

int main() {
    struct Entry {
        int index;
        const char* name;
        Check (*fn)();
    };
    const Entry entries[] = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "per-rule soundness", per_rule_soundness},
        {3, "clique-expansion equivalence", expansion_equivalence},
        {4, "ILP export soundness", ilp_soundness},
        {5, "fixpoint and determinism", fixpoint_and_determinism},
        {6, "worked-example regression", worked_examples},
        {7, "stats table columns", stats_columns},
        {8, "star-forest reduction speed", star_forest_speed},
    };
    for (const Entry& entry : entries) {
        Check check;
        try {
            check = entry.fn();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        report(entry.index, entry.name, check);
    }
    return g_failures == 0 ? 0 : 1;
}
