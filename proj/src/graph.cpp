#include "hymis/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hymis {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edge_list) : adjacency_(n) {
    for (auto& [u, v] : edge_list) {
        if (u == v) {
            throw std::invalid_argument("graph edge is a self-loop at " + std::to_string(u));
        }
        if (u < 1 || v < 1 || u > n || v > n) {
            throw std::invalid_argument("graph edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    for (const auto& [u, v] : edge_list) {
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
    num_edges_ = edge_list.size();
}

void Graph::require_vertex(VertexId v) const {
    if (v < 1 || v > adjacency_.size()) {
        throw std::invalid_argument("unknown graph vertex id " + std::to_string(v));
    }
}

std::span<const VertexId> Graph::adjacency(VertexId v) const {
    require_vertex(v);
    return adjacency_[v - 1];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& adj = adjacency_[u - 1];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges_);
    for (VertexId u = 1; u <= adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u - 1]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace hymis
