#pragma once

#include <string>

#include "hymis/graph.hpp"
#include "hymis/hypergraph.hpp"

namespace hymis {

// CPLEX LP text: maximize the number of selected vertices subject to one
// at-most-one constraint per hyperedge; all variables binary. Variable names
// are x<vertex-id>, constraints follow ascending edge id. Output is ASCII with
// LF line endings and byte-deterministic for a given instance.
std::string export_lp_hypergraph(const Hypergraph& h);

// Same model over the pairwise edges of a graph, constraints in ascending
// (u, v) order.
std::string export_lp_graph(const Graph& g);

}  // namespace hymis
