#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hymis {

// 1-indexed, stable over the lifetime of an instance; 0 is never a valid id.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Thrown when a full-structure audit finds a broken invariant.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Mutable hypergraph with bidirectional incidence (vertex->edges, edge->vertices).
// Removed ids are tombstoned, never reused; all id lists are kept sorted ascending.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::size_t n_vertices);

    // Pins are deduplicated and sorted; every pin must be a live vertex.
    EdgeId add_edge(std::vector<VertexId> pins);

    std::size_t num_vertices() const { return live_vertices_; }
    std::size_t num_edges() const { return live_edges_; }
    std::size_t num_pins() const { return total_pins_; }
    VertexId max_vertex_id() const { return static_cast<VertexId>(vertex_alive_.size()); }
    EdgeId max_edge_id() const { return static_cast<EdgeId>(edge_alive_.size()); }

    bool is_vertex(VertexId v) const;
    bool is_edge(EdgeId e) const;

    std::span<const VertexId> pins(EdgeId e) const;
    std::span<const EdgeId> incident_edges(VertexId v) const;
    std::size_t degree(VertexId v) const { return incident_edges(v).size(); }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;

    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<VertexId> closed_neighborhood(VertexId v) const;
    bool are_adjacent(VertexId u, VertexId v) const;

    // Removes v from every incident edge; edges whose pin set becomes empty are
    // removed as well and returned.
    std::vector<EdgeId> remove_vertex(VertexId v);

    // Removes e; its pins stay live (their degree drops).
    void remove_edge(EdgeId e);

    // New instance on the vertex set `keep` (ids remapped to 1..|keep| in ascending
    // original-id order). Every edge contributes its nonempty trace; duplicate
    // traces are retained. Second result maps new id -> original id.
    std::pair<Hypergraph, std::vector<VertexId>>
    induced_subhypergraph(std::span<const VertexId> keep) const;

    // Induced subhypergraph on all live vertices: contiguous 1..n / 1..m ids.
    std::pair<Hypergraph, std::vector<VertexId>> compacted() const;

    // Full-structure audit; throws StructureError on any broken invariant.
    void check_consistency() const;

private:
    void require_vertex(VertexId v) const;
    void require_edge(EdgeId e) const;

    std::vector<std::uint8_t> vertex_alive_;
    std::vector<std::uint8_t> edge_alive_;
    std::vector<std::vector<EdgeId>> incidence_;  // index v-1
    std::vector<std::vector<VertexId>> pins_;     // index e-1
    std::size_t live_vertices_ = 0;
    std::size_t live_edges_ = 0;
    std::size_t total_pins_ = 0;
};

}  // namespace hymis
