#include "hymis/expansion.hpp"

#include <algorithm>

namespace hymis {

std::pair<Graph, std::vector<VertexId>> clique_expand(const Hypergraph& h) {
    const std::vector<VertexId> map = h.vertices();
    std::vector<VertexId> rank(h.max_vertex_id() + 1, 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        rank[map[i]] = static_cast<VertexId>(i + 1);
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e : h.edges()) {
        const auto p = h.pins(e);
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                pairs.emplace_back(rank[p[i]], rank[p[j]]);
            }
        }
    }
    return {Graph(map.size(), std::move(pairs)), map};
}

}  // namespace hymis
