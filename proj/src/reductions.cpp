#include "hymis/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

#include "hymis/exact.hpp"

namespace hymis {

namespace {

constexpr std::array<std::string_view, kNumReductionKinds> kKindNames = {
    "SizeOneEdge",      "EdgeDomination", "DegreeZero", "DegreeOne",       "Twins",
    "Sunflower",        "SimplicialVertex", "VertexDomination", "Unconfined",
};

template <typename T>
void sort_unique(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

template <typename T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Removes a sorted vertex set; records everything that changed.
void remove_vertex_set(Hypergraph& h, const std::vector<VertexId>& doomed, Mutation& mut) {
    std::vector<EdgeId> touched_edges;
    for (VertexId v : doomed) {
        auto inc = h.incident_edges(v);
        touched_edges.insert(touched_edges.end(), inc.begin(), inc.end());
    }
    sort_unique(touched_edges);
    std::vector<VertexId> touched;
    for (EdgeId e : touched_edges) {
        for (VertexId u : h.pins(e)) {
            if (!std::binary_search(doomed.begin(), doomed.end(), u)) touched.push_back(u);
        }
    }
    sort_unique(touched);
    for (VertexId v : doomed) {
        const auto died = h.remove_vertex(v);
        mut.removed_edges.insert(mut.removed_edges.end(), died.begin(), died.end());
    }
    std::sort(mut.removed_edges.begin(), mut.removed_edges.end());
    mut.removed_vertices = doomed;
    mut.touched_vertices = std::move(touched);
    for (EdgeId e : touched_edges) {
        if (h.is_edge(e)) mut.shrunk_edges.push_back(e);
    }
}

TraceEvent include_vertices(Hypergraph& h, ReductionKind kind, std::vector<VertexId> chosen,
                            const std::vector<VertexId>& doomed, Mutation& mut) {
    remove_vertex_set(h, doomed, mut);
    TraceEvent ev;
    ev.kind = kind;
    ev.included = std::move(chosen);
    ev.removed_edges = mut.removed_edges;
    ev.alpha_offset = static_cast<std::uint32_t>(ev.included.size());
    return ev;
}

TraceEvent exclude_vertices(Hypergraph& h, ReductionKind kind, std::vector<VertexId> doomed,
                            Mutation& mut) {
    remove_vertex_set(h, doomed, mut);
    TraceEvent ev;
    ev.kind = kind;
    ev.excluded = std::move(doomed);
    ev.removed_edges = mut.removed_edges;
    ev.alpha_offset = 0;
    return ev;
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ReductionKind> reduction_kind_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<ReductionKind>(i);
    }
    return std::nullopt;
}

const std::vector<ReductionKind>& canonical_rule_order() {
    static const std::vector<ReductionKind> order = {
        ReductionKind::SizeOneEdge,      ReductionKind::DegreeZero,
        ReductionKind::DegreeOne,        ReductionKind::Twins,
        ReductionKind::Sunflower,        ReductionKind::SimplicialVertex,
        ReductionKind::VertexDomination, ReductionKind::Unconfined,
        ReductionKind::EdgeDomination,
    };
    return order;
}

ReducerConfig ReducerConfig::with_rules(std::vector<ReductionKind> rules) {
    ReducerConfig cfg;
    cfg.enabled_rules = std::move(rules);
    return cfg;
}

std::optional<TraceEvent> apply_size_one_edge(Hypergraph& h, EdgeId e, Mutation* mut) {
    auto p = h.pins(e);
    if (p.size() != 1) return std::nullopt;
    Mutation local;
    local.touched_vertices.assign(p.begin(), p.end());
    local.removed_edges.push_back(e);
    h.remove_edge(e);
    TraceEvent ev;
    ev.kind = ReductionKind::SizeOneEdge;
    ev.removed_edges = local.removed_edges;
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_edge_domination(Hypergraph& h, EdgeId e1, Mutation* mut) {
    const auto p1 = h.pins(e1);
    // Any dominating edge contains every pin of e1, so scanning the incidence
    // list of e1's minimum-degree pin suffices.
    VertexId pivot = p1.front();
    for (VertexId v : p1) {
        if (h.degree(v) < h.degree(pivot)) pivot = v;
    }
    for (EdgeId e2 : h.incident_edges(pivot)) {
        if (e2 == e1) continue;
        const auto p2 = h.pins(e2);
        if (p2.size() < p1.size()) continue;
        if (std::includes(p2.begin(), p2.end(), p1.begin(), p1.end())) {
            Mutation local;
            local.touched_vertices.assign(p1.begin(), p1.end());
            local.removed_edges.push_back(e1);
            h.remove_edge(e1);
            TraceEvent ev;
            ev.kind = ReductionKind::EdgeDomination;
            ev.removed_edges = local.removed_edges;
            if (mut) *mut = std::move(local);
            return ev;
        }
    }
    return std::nullopt;
}

std::optional<TraceEvent> apply_degree_zero(Hypergraph& h, VertexId v, Mutation* mut) {
    if (!h.neighbors(v).empty()) return std::nullopt;
    Mutation local;
    auto ev = include_vertices(h, ReductionKind::DegreeZero, {v}, {v}, local);
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_degree_one(Hypergraph& h, VertexId v, Mutation* mut) {
    if (h.degree(v) != 1) return std::nullopt;
    Mutation local;
    auto ev = include_vertices(h, ReductionKind::DegreeOne, {v}, h.closed_neighborhood(v), local);
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_twins(Hypergraph& h, VertexId v, Mutation* mut) {
    const auto nv = h.neighbors(v);
    if (nv.empty()) return std::nullopt;
    // Every twin of v is adjacent to all of N(v), so it appears among the
    // neighbors of nv.front(); exact neighborhood comparison confirms.
    std::vector<VertexId> twins{v};
    for (VertexId u : h.neighbors(nv.front())) {
        if (u == v) continue;
        if (std::binary_search(nv.begin(), nv.end(), u)) continue;  // adjacent to v
        if (h.neighbors(u) == nv) twins.push_back(u);
    }
    if (twins.size() < 2) return std::nullopt;  // a lone vertex is no twin set
    sort_unique(twins);
    std::size_t min_degree = h.degree(twins.front());
    for (VertexId t : twins) {
        min_degree = std::min(min_degree, h.degree(t));
    }
    if (twins.size() < min_degree) return std::nullopt;
    Mutation local;
    auto doomed = sorted_union(twins, nv);
    auto ev = include_vertices(h, ReductionKind::Twins, twins, doomed, local);
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_sunflower(Hypergraph& h, VertexId v, Mutation* mut) {
    const auto ev_edges = h.incident_edges(v);
    if (ev_edges.empty()) return std::nullopt;
    // Core vertices share the exact incident-edge set, so all of them are pins
    // of v's first edge.
    std::vector<VertexId> core;
    for (VertexId u : h.pins(ev_edges.front())) {
        const auto eu = h.incident_edges(u);
        if (eu.size() == ev_edges.size() && std::equal(eu.begin(), eu.end(), ev_edges.begin())) {
            core.push_back(u);
        }
    }
    if (core.size() < 2) return std::nullopt;
    std::vector<VertexId> doomed(core.begin() + 1, core.end());  // keep the lowest id
    Mutation local;
    auto ev = exclude_vertices(h, ReductionKind::Sunflower, std::move(doomed), local);
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_simplicial(Hypergraph& h, VertexId v, Mutation* mut) {
    const auto clique = h.neighbors(v);
    if (clique.empty()) return std::nullopt;
    // Size gate first: either a single edge avoiding v contains the whole
    // neighborhood, or the induced subhypergraph consists of exactly three
    // distinct multi-pin edge traces. The quadratic adjacency check runs only
    // after the gate passes.
    bool single_edge = false;
    for (EdgeId e : h.incident_edges(clique.front())) {
        const auto p = h.pins(e);
        if (std::binary_search(p.begin(), p.end(), v)) continue;
        if (std::includes(p.begin(), p.end(), clique.begin(), clique.end())) {
            single_edge = true;
            break;
        }
    }
    if (!single_edge) {
        std::vector<EdgeId> region;
        for (VertexId c : clique) {
            auto inc = h.incident_edges(c);
            region.insert(region.end(), inc.begin(), inc.end());
        }
        sort_unique(region);
        std::set<std::vector<VertexId>> traces;
        for (EdgeId e : region) {
            std::vector<VertexId> trace;
            for (VertexId u : h.pins(e)) {
                if (std::binary_search(clique.begin(), clique.end(), u)) trace.push_back(u);
            }
            if (trace.size() >= 2) {
                traces.insert(std::move(trace));
                if (traces.size() > 3) return std::nullopt;
            }
        }
        if (traces.size() != 3) return std::nullopt;
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            if (!h.are_adjacent(clique[i], clique[j])) return std::nullopt;
        }
    }
    Mutation local;
    auto ev = include_vertices(h, ReductionKind::SimplicialVertex, {v},
                               h.closed_neighborhood(v), local);
    if (mut) *mut = std::move(local);
    return ev;
}

std::optional<TraceEvent> apply_vertex_domination(Hypergraph& h, VertexId u, Mutation* mut) {
    const auto nu_closed = h.closed_neighborhood(u);
    for (VertexId v : h.neighbors(u)) {
        const auto nv_closed = h.closed_neighborhood(v);
        if (nv_closed.size() > nu_closed.size()) continue;
        if (std::includes(nu_closed.begin(), nu_closed.end(), nv_closed.begin(),
                          nv_closed.end())) {
            Mutation local;
            auto ev = exclude_vertices(h, ReductionKind::VertexDomination, {u}, local);
            if (mut) *mut = std::move(local);
            return ev;
        }
    }
    return std::nullopt;
}

std::optional<TraceEvent> apply_unconfined(Hypergraph& h, VertexId v, Mutation* mut) {
    std::vector<VertexId> grown{v};
    std::vector<VertexId> grown_closed = h.closed_neighborhood(v);
    std::size_t growth_budget = h.num_vertices();
    for (;;) {
        // Children of the grown set: boundary vertices with exactly one
        // neighbor inside it. An empty outside set proves v unconfined; a
        // single outside vertex extends the set.
        VertexId witness = 0;
        bool unconfined = false;
        for (VertexId u : grown_closed) {
            if (std::binary_search(grown.begin(), grown.end(), u)) continue;
            const auto nu = h.neighbors(u);
            std::size_t inside = 0;
            for (VertexId x : nu) {
                if (std::binary_search(grown.begin(), grown.end(), x) && ++inside > 1) break;
            }
            if (inside != 1) continue;
            std::size_t outside = 0;
            VertexId first_outside = 0;
            for (VertexId x : nu) {
                if (!std::binary_search(grown_closed.begin(), grown_closed.end(), x)) {
                    if (outside == 0) first_outside = x;
                    if (++outside > 1) break;
                }
            }
            if (outside == 0) {
                unconfined = true;
                break;
            }
            if (outside == 1 && witness == 0) witness = first_outside;
        }
        if (unconfined) {
            Mutation local;
            auto ev = exclude_vertices(h, ReductionKind::Unconfined, {v}, local);
            if (mut) *mut = std::move(local);
            return ev;
        }
        if (witness == 0) return std::nullopt;
        if (growth_budget-- == 0) {
            throw std::logic_error("unconfined growth exceeded the vertex count");
        }
        grown.insert(std::lower_bound(grown.begin(), grown.end(), witness), witness);
        grown_closed = sorted_union(grown_closed, h.closed_neighborhood(witness));
    }
}

std::optional<TraceEvent> apply_rule(ReductionKind kind, Hypergraph& h, std::uint32_t locus,
                                     Mutation* mut) {
    switch (kind) {
        case ReductionKind::SizeOneEdge: return apply_size_one_edge(h, locus, mut);
        case ReductionKind::EdgeDomination: return apply_edge_domination(h, locus, mut);
        case ReductionKind::DegreeZero: return apply_degree_zero(h, locus, mut);
        case ReductionKind::DegreeOne: return apply_degree_one(h, locus, mut);
        case ReductionKind::Twins: return apply_twins(h, locus, mut);
        case ReductionKind::Sunflower: return apply_sunflower(h, locus, mut);
        case ReductionKind::SimplicialVertex: return apply_simplicial(h, locus, mut);
        case ReductionKind::VertexDomination: return apply_vertex_domination(h, locus, mut);
        case ReductionKind::Unconfined: return apply_unconfined(h, locus, mut);
    }
    throw std::invalid_argument("unknown reduction kind");
}

namespace {

// FIFO with a membership flag; ids enter at most once until popped.
class DirtyQueue {
public:
    explicit DirtyQueue(std::size_t max_id) : member_(max_id + 1, 0) {}

    void push(std::uint32_t id) {
        if (!member_[id]) {
            member_[id] = 1;
            queue_.push_back(id);
        }
    }

    bool empty() const { return queue_.empty(); }

    std::uint32_t pop() {
        const std::uint32_t id = queue_.front();
        queue_.pop_front();
        member_[id] = 0;
        return id;
    }

private:
    std::deque<std::uint32_t> queue_;
    std::vector<std::uint8_t> member_;
};

bool is_edge_rule(ReductionKind kind) {
    return kind == ReductionKind::SizeOneEdge || kind == ReductionKind::EdgeDomination;
}

}  // namespace

KernelResult reduce(Hypergraph h, const ReducerConfig& cfg) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    h.check_consistency();

    const auto& canon = canonical_rule_order();
    {
        std::size_t pos = 0;
        for (ReductionKind kind : cfg.enabled_rules) {
            while (pos < canon.size() && canon[pos] != kind) ++pos;
            if (pos == canon.size()) {
                throw std::invalid_argument(
                    "enabled_rules must be a subsequence of the canonical rule order");
            }
            ++pos;
        }
    }
    auto enabled = [&](ReductionKind kind) {
        if (kind == ReductionKind::Unconfined && !cfg.unconfined_enabled) return false;
        return std::find(cfg.enabled_rules.begin(), cfg.enabled_rules.end(), kind) !=
               cfg.enabled_rules.end();
    };

    const bool size_one_on = enabled(ReductionKind::SizeOneEdge);
    std::vector<ReductionKind> tiers;
    for (ReductionKind kind : canon) {
        if (kind != ReductionKind::SizeOneEdge && enabled(kind)) tiers.push_back(kind);
    }

    std::optional<clock::time_point> deadline;
    if (cfg.time_limit) {
        deadline = started + std::chrono::duration_cast<clock::duration>(
                                 std::chrono::duration<double>(*cfg.time_limit));
    }

    KernelResult out;
    std::uint64_t applications = 0;

    std::vector<DirtyQueue> queues;
    queues.reserve(tiers.size());
    for (ReductionKind kind : tiers) {
        queues.emplace_back(is_edge_rule(kind) ? h.max_edge_id() : h.max_vertex_id());
    }
    DirtyQueue size_one_queue(h.max_edge_id());

    auto seed_all = [&] {
        const auto vs = h.vertices();
        const auto es = h.edges();
        for (std::size_t t = 0; t < tiers.size(); ++t) {
            if (is_edge_rule(tiers[t])) {
                for (EdgeId e : es) queues[t].push(e);
            } else {
                for (VertexId v : vs) queues[t].push(v);
            }
        }
        if (size_one_on) {
            for (EdgeId e : es) size_one_queue.push(e);
        }
    };

    auto record = [&](TraceEvent ev, const Mutation& mut) {
        auto& rs = out.stats[ev.kind];
        rs.applications += 1;
        rs.vertices_removed += mut.removed_vertices.size();
        rs.edges_removed += mut.removed_edges.size();
        out.offset += ev.alpha_offset;
        out.trace.push_back(std::move(ev));
        ++applications;
    };

    auto push_dirty = [&](const Mutation& mut) {
        std::vector<VertexId> dirty = mut.touched_vertices;
        for (VertexId x : mut.touched_vertices) {
            if (!h.is_vertex(x)) continue;
            const auto nx = h.neighbors(x);
            dirty.insert(dirty.end(), nx.begin(), nx.end());
        }
        sort_unique(dirty);
        for (std::size_t t = 0; t < tiers.size(); ++t) {
            if (is_edge_rule(tiers[t])) {
                for (EdgeId e : mut.shrunk_edges) queues[t].push(e);
            } else {
                for (VertexId v : dirty) {
                    if (h.is_vertex(v)) queues[t].push(v);
                }
            }
        }
        if (size_one_on) {
            for (EdgeId e : mut.shrunk_edges) size_one_queue.push(e);
        }
    };

    bool out_of_time = false;
    auto drain_size_one = [&] {
        while (!size_one_queue.empty()) {
            if (deadline && clock::now() >= *deadline) {
                out_of_time = true;
                return;
            }
            const EdgeId e = size_one_queue.pop();
            if (!h.is_edge(e)) continue;
            Mutation mut;
            if (auto ev = apply_size_one_edge(h, e, &mut)) {
                record(std::move(*ev), mut);
                push_dirty(mut);
            }
        }
    };

    seed_all();
    drain_size_one();
    for (;;) {
        const std::uint64_t before = applications;
        std::size_t t = 0;
        while (t < tiers.size() && !out_of_time) {
            if (deadline && clock::now() >= *deadline) {
                out_of_time = true;
                break;
            }
            auto& q = queues[t];
            if (q.empty()) {
                ++t;
                continue;
            }
            const std::uint32_t locus = q.pop();
            if (is_edge_rule(tiers[t]) ? !h.is_edge(locus) : !h.is_vertex(locus)) continue;
            Mutation mut;
            if (auto ev = apply_rule(tiers[t], h, locus, &mut)) {
                record(std::move(*ev), mut);
                push_dirty(mut);
                drain_size_one();
                t = 0;  // restart with the first reduction
            }
        }
        if (out_of_time || applications == before) break;
        // The incremental dirty sets are heuristic for the non-local rules;
        // one full re-sweep that applies nothing certifies the fixpoint.
        seed_all();
        drain_size_one();
    }

    auto [kernel, map] = h.compacted();
    out.kernel = std::move(kernel);
    out.vertex_map = std::move(map);
    out.timed_out = out_of_time;
    out.elapsed_seconds = std::chrono::duration<double>(clock::now() - started).count();
    return out;
}

std::vector<VertexId> lift_solution(const std::vector<TraceEvent>& trace, const Hypergraph& kernel,
                                    std::span<const VertexId> kernel_to_original,
                                    std::span<const VertexId> kernel_solution) {
    std::vector<VertexId> solution(kernel_solution.begin(), kernel_solution.end());
    sort_unique(solution);
    std::vector<VertexId> kernel_ids;
    kernel_ids.reserve(solution.size());
    for (VertexId original : solution) {
        const auto it = std::lower_bound(kernel_to_original.begin(), kernel_to_original.end(),
                                         original);
        if (it == kernel_to_original.end() || *it != original) {
            throw InvalidSolutionError("solution vertex " + std::to_string(original) +
                                       " is not a kernel vertex");
        }
        kernel_ids.push_back(static_cast<VertexId>(it - kernel_to_original.begin() + 1));
    }
    if (auto violated = find_violated_edge(kernel, kernel_ids)) {
        throw InvalidSolutionError("solution is not independent in the kernel (edge " +
                                   std::to_string(*violated) + ")");
    }
    std::size_t expected = solution.size();
    for (const TraceEvent& ev : trace) {
        solution.insert(solution.end(), ev.included.begin(), ev.included.end());
        expected += ev.included.size();
    }
    sort_unique(solution);
    if (solution.size() != expected) {
        throw std::logic_error("lift produced overlapping include sets");
    }
    return solution;
}

std::vector<VertexId> lift_solution(const KernelResult& result,
                                    std::span<const VertexId> kernel_solution) {
    return lift_solution(result.trace, result.kernel, result.vertex_map, kernel_solution);
}

}  // namespace hymis
