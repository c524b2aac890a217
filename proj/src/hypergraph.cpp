#include "hymis/hypergraph.hpp"

#include <algorithm>

namespace hymis {

Hypergraph::Hypergraph(std::size_t n_vertices)
    : vertex_alive_(n_vertices, 1), incidence_(n_vertices), live_vertices_(n_vertices) {}

EdgeId Hypergraph::add_edge(std::vector<VertexId> pins) {
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    if (pins.empty()) {
        throw std::invalid_argument("add_edge: empty pin set");
    }
    for (VertexId v : pins) {
        require_vertex(v);
    }
    const EdgeId e = static_cast<EdgeId>(pins_.size() + 1);
    for (VertexId v : pins) {
        incidence_[v - 1].push_back(e);
    }
    total_pins_ += pins.size();
    pins_.push_back(std::move(pins));
    edge_alive_.push_back(1);
    ++live_edges_;
    return e;
}

bool Hypergraph::is_vertex(VertexId v) const {
    return v >= 1 && v <= vertex_alive_.size() && vertex_alive_[v - 1];
}

bool Hypergraph::is_edge(EdgeId e) const {
    return e >= 1 && e <= edge_alive_.size() && edge_alive_[e - 1];
}

void Hypergraph::require_vertex(VertexId v) const {
    if (!is_vertex(v)) {
        throw std::invalid_argument("unknown or removed vertex id " + std::to_string(v));
    }
}

void Hypergraph::require_edge(EdgeId e) const {
    if (!is_edge(e)) {
        throw std::invalid_argument("unknown or removed edge id " + std::to_string(e));
    }
}

std::span<const VertexId> Hypergraph::pins(EdgeId e) const {
    require_edge(e);
    return pins_[e - 1];
}

std::span<const EdgeId> Hypergraph::incident_edges(VertexId v) const {
    require_vertex(v);
    return incidence_[v - 1];
}

std::vector<VertexId> Hypergraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_vertices_);
    for (VertexId v = 1; v <= vertex_alive_.size(); ++v) {
        if (vertex_alive_[v - 1]) out.push_back(v);
    }
    return out;
}

std::vector<EdgeId> Hypergraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (EdgeId e = 1; e <= edge_alive_.size(); ++e) {
        if (edge_alive_[e - 1]) out.push_back(e);
    }
    return out;
}

std::vector<VertexId> Hypergraph::neighbors(VertexId v) const {
    require_vertex(v);
    std::vector<VertexId> out;
    for (EdgeId e : incidence_[v - 1]) {
        for (VertexId u : pins_[e - 1]) {
            if (u != v) out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> Hypergraph::closed_neighborhood(VertexId v) const {
    std::vector<VertexId> out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Hypergraph::are_adjacent(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
        throw std::invalid_argument("are_adjacent: identical vertex ids");
    }
    // Adjacent iff the incidence lists intersect; both are sorted.
    const auto& a = incidence_[u - 1];
    const auto& b = incidence_[v - 1];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

std::vector<EdgeId> Hypergraph::remove_vertex(VertexId v) {
    require_vertex(v);
    std::vector<EdgeId> died;
    for (EdgeId e : incidence_[v - 1]) {
        auto& p = pins_[e - 1];
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        --total_pins_;
        if (p.empty()) {
            edge_alive_[e - 1] = 0;
            --live_edges_;
            died.push_back(e);
        }
    }
    incidence_[v - 1].clear();
    incidence_[v - 1].shrink_to_fit();
    vertex_alive_[v - 1] = 0;
    --live_vertices_;
    return died;
}

void Hypergraph::remove_edge(EdgeId e) {
    require_edge(e);
    for (VertexId v : pins_[e - 1]) {
        auto& inc = incidence_[v - 1];
        inc.erase(std::lower_bound(inc.begin(), inc.end(), e));
    }
    total_pins_ -= pins_[e - 1].size();
    pins_[e - 1].clear();
    pins_[e - 1].shrink_to_fit();
    edge_alive_[e - 1] = 0;
    --live_edges_;
}

std::pair<Hypergraph, std::vector<VertexId>>
Hypergraph::induced_subhypergraph(std::span<const VertexId> keep) const {
    std::vector<VertexId> map(keep.begin(), keep.end());
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    for (VertexId v : map) {
        require_vertex(v);
    }
    std::vector<VertexId> reverse(vertex_alive_.size() + 1, 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        reverse[map[i]] = static_cast<VertexId>(i + 1);
    }
    Hypergraph sub(map.size());
    for (EdgeId e = 1; e <= edge_alive_.size(); ++e) {
        if (!edge_alive_[e - 1]) continue;
        std::vector<VertexId> trace;
        for (VertexId v : pins_[e - 1]) {
            if (reverse[v] != 0) trace.push_back(reverse[v]);
        }
        if (!trace.empty()) sub.add_edge(std::move(trace));
    }
    return {std::move(sub), std::move(map)};
}

std::pair<Hypergraph, std::vector<VertexId>> Hypergraph::compacted() const {
    return induced_subhypergraph(vertices());
}

void Hypergraph::check_consistency() const {
    std::size_t vcount = 0, ecount = 0, vpins = 0, epins = 0;
    for (VertexId v = 1; v <= vertex_alive_.size(); ++v) {
        if (!vertex_alive_[v - 1]) {
            if (!incidence_[v - 1].empty()) {
                throw StructureError("dead vertex " + std::to_string(v) + " has incident edges");
            }
            continue;
        }
        ++vcount;
        vpins += incidence_[v - 1].size();
        if (!std::is_sorted(incidence_[v - 1].begin(), incidence_[v - 1].end())) {
            throw StructureError("unsorted incidence list at vertex " + std::to_string(v));
        }
        EdgeId prev = 0;
        for (EdgeId e : incidence_[v - 1]) {
            if (e == prev) throw StructureError("duplicate incidence at vertex " + std::to_string(v));
            prev = e;
            if (!is_edge(e)) {
                throw StructureError("vertex " + std::to_string(v) + " lists dead edge " + std::to_string(e));
            }
            if (!std::binary_search(pins_[e - 1].begin(), pins_[e - 1].end(), v)) {
                throw StructureError("edge " + std::to_string(e) + " missing pin " + std::to_string(v));
            }
        }
    }
    for (EdgeId e = 1; e <= edge_alive_.size(); ++e) {
        if (!edge_alive_[e - 1]) {
            if (!pins_[e - 1].empty()) {
                throw StructureError("dead edge " + std::to_string(e) + " has pins");
            }
            continue;
        }
        ++ecount;
        epins += pins_[e - 1].size();
        if (pins_[e - 1].empty()) {
            throw StructureError("live edge " + std::to_string(e) + " is empty");
        }
        if (!std::is_sorted(pins_[e - 1].begin(), pins_[e - 1].end())) {
            throw StructureError("unsorted pin list at edge " + std::to_string(e));
        }
        VertexId prev = 0;
        for (VertexId v : pins_[e - 1]) {
            if (v == prev) throw StructureError("duplicate pin at edge " + std::to_string(e));
            prev = v;
            if (!is_vertex(v)) {
                throw StructureError("edge " + std::to_string(e) + " lists dead vertex " + std::to_string(v));
            }
            if (!std::binary_search(incidence_[v - 1].begin(), incidence_[v - 1].end(), e)) {
                throw StructureError("vertex " + std::to_string(v) + " missing edge " + std::to_string(e));
            }
        }
    }
    if (vcount != live_vertices_ || ecount != live_edges_) {
        throw StructureError("live counters out of sync");
    }
    if (vpins != epins || vpins != total_pins_) {
        throw StructureError("pin count mismatch between directions");
    }
}

}  // namespace hymis
