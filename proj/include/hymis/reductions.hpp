#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hymis/hypergraph.hpp"

namespace hymis {

enum class ReductionKind : std::uint8_t {
    SizeOneEdge,
    EdgeDomination,
    DegreeZero,
    DegreeOne,
    Twins,
    Sunflower,
    SimplicialVertex,
    VertexDomination,
    Unconfined,
};

inline constexpr std::size_t kNumReductionKinds = 9;

std::string_view to_string(ReductionKind kind);
std::optional<ReductionKind> reduction_kind_from_string(std::string_view name);

// Application order of the framework: size-one edges are handled eagerly,
// the remaining rules run in the order degree-zero, degree-one, twins,
// sunflower, simplicial, vertex domination, unconfined, edge domination.
const std::vector<ReductionKind>& canonical_rule_order();

// One rule application. `included` vertices enter the solution (their closed
// neighborhoods are removed), `excluded` vertices are removed without entering
// it, `removed_edges` lists every edge that died during the application.
// All ids are original-instance ids.
struct TraceEvent {
    ReductionKind kind;
    std::vector<VertexId> included;
    std::vector<VertexId> excluded;
    std::vector<EdgeId> removed_edges;
    std::uint32_t alpha_offset = 0;
};

struct RuleStats {
    std::uint64_t applications = 0;
    std::uint64_t vertices_removed = 0;
    std::uint64_t edges_removed = 0;
};

struct ReductionStats {
    std::array<RuleStats, kNumReductionKinds> per_rule{};

    RuleStats& operator[](ReductionKind kind) { return per_rule[static_cast<std::size_t>(kind)]; }
    const RuleStats& operator[](ReductionKind kind) const {
        return per_rule[static_cast<std::size_t>(kind)];
    }
};

struct ReducerConfig {
    // Must be a subsequence of canonical_rule_order(); defaults to all rules.
    std::vector<ReductionKind> enabled_rules = canonical_rule_order();
    std::optional<double> time_limit;  // seconds; checked between applications
    bool unconfined_enabled = true;

    static ReducerConfig with_rules(std::vector<ReductionKind> rules);
};

struct KernelResult {
    Hypergraph kernel;                  // compacted to contiguous 1..n_r / 1..m_r
    std::vector<VertexId> vertex_map;   // kernel id k -> original id vertex_map[k-1]
    std::vector<TraceEvent> trace;
    std::uint64_t offset = 0;           // vertices already forced into the solution
    ReductionStats stats;
    double elapsed_seconds = 0.0;
    bool timed_out = false;
};

// Records what a single application changed, for incremental retesting.
struct Mutation {
    std::vector<VertexId> removed_vertices;
    std::vector<VertexId> touched_vertices;  // live vertices whose neighborhood or degree changed
    std::vector<EdgeId> removed_edges;
    std::vector<EdgeId> shrunk_edges;        // still live, pin set lost members
};

// Per-rule applications at one locus. Each returns the trace event and mutates
// the hypergraph on success, std::nullopt when the rule does not apply there.
// Dead or unknown locus ids raise std::invalid_argument.
std::optional<TraceEvent> apply_size_one_edge(Hypergraph& h, EdgeId e, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_edge_domination(Hypergraph& h, EdgeId e1, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_degree_zero(Hypergraph& h, VertexId v, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_degree_one(Hypergraph& h, VertexId v, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_twins(Hypergraph& h, VertexId v, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_sunflower(Hypergraph& h, VertexId v, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_simplicial(Hypergraph& h, VertexId v, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_vertex_domination(Hypergraph& h, VertexId u, Mutation* mut = nullptr);
std::optional<TraceEvent> apply_unconfined(Hypergraph& h, VertexId v, Mutation* mut = nullptr);

std::optional<TraceEvent> apply_rule(ReductionKind kind, Hypergraph& h, std::uint32_t locus,
                                     Mutation* mut = nullptr);

// Exhaustive rule application. Restarts at the first enabled rule after every
// successful application; loci are retested via dirty queues and a final full
// sweep certifies that no enabled rule applies anywhere in the kernel.
KernelResult reduce(Hypergraph h, const ReducerConfig& cfg = {});

class InvalidSolutionError : public std::runtime_error {
public:
    explicit InvalidSolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Lifts a kernel solution (original-instance ids) to the original instance by
// adding every vertex the trace included. Throws InvalidSolutionError if the
// solution is not a strong independent set of the kernel.
std::vector<VertexId> lift_solution(const std::vector<TraceEvent>& trace, const Hypergraph& kernel,
                                    std::span<const VertexId> kernel_to_original,
                                    std::span<const VertexId> kernel_solution);

std::vector<VertexId> lift_solution(const KernelResult& result,
                                    std::span<const VertexId> kernel_solution);

}  // namespace hymis
