#pragma once

#include <utility>
#include <vector>

#include "hymis/graph.hpp"
#include "hymis/hypergraph.hpp"

namespace hymis {

// Clique expansion: every hyperedge becomes a clique on its pins. The graph is
// on vertices 1..n in ascending original-id order; the second result maps
// graph id k -> original id.
std::pair<Graph, std::vector<VertexId>> clique_expand(const Hypergraph& h);

}  // namespace hymis
