#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hymis/hypergraph.hpp"

namespace hymis {

// Simple undirected graph on vertices 1..n: no self-loops, no parallel edges,
// sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edge_list);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    std::span<const VertexId> adjacency(VertexId v) const;
    std::size_t degree(VertexId v) const { return adjacency(v).size(); }
    bool has_edge(VertexId u, VertexId v) const;

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

private:
    void require_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t num_edges_ = 0;
};

}  // namespace hymis
