#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hymis/graph.hpp"
#include "hymis/hypergraph.hpp"

namespace hymis {

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct Solution {
    std::vector<VertexId> members;  // sorted ascending
    bool optimal = true;            // false when a time limit cut the search short

    std::size_t cardinality() const { return members.size(); }
};

// True iff every live edge contains at most one member of s.
bool verify_independent(const Hypergraph& h, std::span<const VertexId> s);

// Lowest-id live edge containing two or more members of s, if any.
std::optional<EdgeId> find_violated_edge(const Hypergraph& h, std::span<const VertexId> s);

// Branch-and-bound maximum strong independent set. Branches on a maximum-degree
// vertex (include: remove its closed neighborhood; exclude: remove it) and
// prunes with a greedy edge-cover bound. Without a time limit, instances above
// vertex_bound are rejected with ResourceLimitError.
Solution solve_exact(const Hypergraph& h, std::optional<double> time_limit = std::nullopt,
                     std::size_t vertex_bound = 64);

Solution solve_exact_graph(const Graph& g, std::optional<double> time_limit = std::nullopt,
                           std::size_t vertex_bound = 64);

}  // namespace hymis
