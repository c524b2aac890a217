#include "hymis/exact.hpp"

#include <algorithm>
#include <chrono>

namespace hymis {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<VertexId> as_sorted_set(const Hypergraph& h, std::span<const VertexId> s) {
    std::vector<VertexId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (VertexId v : out) {
        if (!h.is_vertex(v)) {
            throw std::invalid_argument("solution vertex " + std::to_string(v) +
                                        " is not a live vertex");
        }
    }
    return out;
}

// Upper bound on the independence number: greedily cover the live vertices
// with edges (each edge holds at most one solution vertex), edge-free leftovers
// count one each.
std::size_t edge_cover_bound(const Hypergraph& h) {
    std::vector<std::uint8_t> covered(h.max_vertex_id() + 1, 0);
    std::size_t uncovered = h.num_vertices();
    std::size_t used = 0;
    const auto edges = h.edges();
    for (;;) {
        EdgeId best = 0;
        std::size_t best_gain = 0;
        for (EdgeId e : edges) {
            if (!h.is_edge(e)) continue;
            std::size_t gain = 0;
            for (VertexId v : h.pins(e)) {
                if (!covered[v]) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = e;
            }
        }
        if (best == 0) break;
        for (VertexId v : h.pins(best)) {
            if (!covered[v]) {
                covered[v] = 1;
                --uncovered;
            }
        }
        ++used;
    }
    return used + uncovered;
}

struct HypergraphSearch {
    std::optional<Clock::time_point> deadline;
    bool timed_out = false;
    std::uint64_t ticks = 0;
    std::vector<VertexId> best;

    bool out_of_time() {
        if (!deadline) return false;
        if ((++ticks & 0x3f) == 0 && Clock::now() >= *deadline) timed_out = true;
        return timed_out;
    }

    void dfs(const Hypergraph& h, std::vector<VertexId>& chosen) {
        if (out_of_time()) return;
        if (chosen.size() > best.size()) best = chosen;
        if (h.num_vertices() == 0) return;
        if (chosen.size() + edge_cover_bound(h) <= best.size()) return;
        VertexId branch = 0;
        std::size_t branch_degree = 0;
        for (VertexId v : h.vertices()) {
            if (branch == 0 || h.degree(v) > branch_degree) {
                branch = v;
                branch_degree = h.degree(v);
            }
        }
        {
            Hypergraph with = h;
            for (VertexId u : h.closed_neighborhood(branch)) {
                with.remove_vertex(u);
            }
            chosen.push_back(branch);
            dfs(with, chosen);
            chosen.pop_back();
        }
        if (branch_degree > 0) {
            Hypergraph without = h;
            without.remove_vertex(branch);
            dfs(without, chosen);
        }
    }
};

// Graph-side search state: alive flags over the fixed adjacency structure.
struct GraphSearch {
    const Graph* graph = nullptr;
    std::optional<Clock::time_point> deadline;
    bool timed_out = false;
    std::uint64_t ticks = 0;
    std::vector<VertexId> best;

    bool out_of_time() {
        if (!deadline) return false;
        if ((++ticks & 0x3f) == 0 && Clock::now() >= *deadline) timed_out = true;
        return timed_out;
    }

    std::size_t live_degree(const std::vector<std::uint8_t>& alive, VertexId v) const {
        std::size_t d = 0;
        for (VertexId u : graph->adjacency(v)) {
            if (alive[u]) ++d;
        }
        return d;
    }

    // alpha <= live - (greedy matching size): every matching edge loses a vertex.
    std::size_t matching_bound(const std::vector<std::uint8_t>& alive, std::size_t live) const {
        std::vector<std::uint8_t> matched(alive.size(), 0);
        std::size_t pairs = 0;
        for (VertexId u = 1; u < alive.size(); ++u) {
            if (!alive[u] || matched[u]) continue;
            for (VertexId v : graph->adjacency(u)) {
                if (v > u && alive[v] && !matched[v]) {
                    matched[u] = matched[v] = 1;
                    ++pairs;
                    break;
                }
            }
        }
        return live - pairs;
    }

    void dfs(std::vector<std::uint8_t>& alive, std::size_t live, std::vector<VertexId>& chosen) {
        if (out_of_time()) return;
        if (chosen.size() > best.size()) best = chosen;
        if (live == 0) return;
        if (chosen.size() + matching_bound(alive, live) <= best.size()) return;
        VertexId branch = 0;
        std::size_t branch_degree = 0;
        for (VertexId v = 1; v < alive.size(); ++v) {
            if (!alive[v]) continue;
            const std::size_t d = live_degree(alive, v);
            if (branch == 0 || d > branch_degree) {
                branch = v;
                branch_degree = d;
            }
        }
        {
            std::vector<std::uint8_t> next = alive;
            std::size_t next_live = live - 1;
            next[branch] = 0;
            for (VertexId u : graph->adjacency(branch)) {
                if (next[u]) {
                    next[u] = 0;
                    --next_live;
                }
            }
            chosen.push_back(branch);
            dfs(next, next_live, chosen);
            chosen.pop_back();
        }
        if (branch_degree > 0) {
            std::vector<std::uint8_t> next = alive;
            next[branch] = 0;
            dfs(next, live - 1, chosen);
        }
    }
};

}  // namespace

bool verify_independent(const Hypergraph& h, std::span<const VertexId> s) {
    return !find_violated_edge(h, s).has_value();
}

std::optional<EdgeId> find_violated_edge(const Hypergraph& h, std::span<const VertexId> s) {
    const auto members = as_sorted_set(h, s);
    for (EdgeId e : h.edges()) {
        std::size_t hits = 0;
        for (VertexId v : h.pins(e)) {
            if (std::binary_search(members.begin(), members.end(), v) && ++hits > 1) {
                return e;
            }
        }
    }
    return std::nullopt;
}

Solution solve_exact(const Hypergraph& h, std::optional<double> time_limit,
                     std::size_t vertex_bound) {
    if (!time_limit && h.num_vertices() > vertex_bound) {
        throw ResourceLimitError("instance has " + std::to_string(h.num_vertices()) +
                                 " vertices; set a time limit or raise the bound");
    }
    HypergraphSearch search;
    if (time_limit) {
        search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(*time_limit));
    }
    std::vector<VertexId> chosen;
    search.dfs(h, chosen);
    Solution out;
    out.members = std::move(search.best);
    std::sort(out.members.begin(), out.members.end());
    out.optimal = !search.timed_out;
    return out;
}

Solution solve_exact_graph(const Graph& g, std::optional<double> time_limit,
                           std::size_t vertex_bound) {
    if (!time_limit && g.num_vertices() > vertex_bound) {
        throw ResourceLimitError("graph has " + std::to_string(g.num_vertices()) +
                                 " vertices; set a time limit or raise the bound");
    }
    GraphSearch search;
    search.graph = &g;
    if (time_limit) {
        search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(*time_limit));
    }
    std::vector<std::uint8_t> alive(g.num_vertices() + 1, 1);
    alive[0] = 0;
    std::vector<VertexId> chosen;
    search.dfs(alive, g.num_vertices(), chosen);
    Solution out;
    out.members = std::move(search.best);
    std::sort(out.members.begin(), out.members.end());
    out.optimal = !search.timed_out;
    return out;
}

}  // namespace hymis
