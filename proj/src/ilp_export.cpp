#include "hymis/ilp_export.hpp"

#include <vector>

namespace hymis {

namespace {

constexpr std::size_t kTermsPerLine = 10;

void append_sum(std::string& out, const std::vector<VertexId>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i > 0) {
            out += (i % kTermsPerLine == 0) ? " +\n   x" : " + x";
        } else {
            out += " x";
        }
        out += std::to_string(vars[i]);
    }
}

std::string render(const std::vector<VertexId>& objective,
                   const std::vector<std::vector<VertexId>>& constraints) {
    std::string out;
    out += "Maximize\n obj:";
    append_sum(out, objective);
    out += "\nSubject To\n";
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        out += " c" + std::to_string(i + 1) + ":";
        append_sum(out, constraints[i]);
        out += " <= 1\n";
    }
    out += "Binary\n";
    for (VertexId v : objective) {
        out += " x" + std::to_string(v) + "\n";
    }
    out += "End\n";
    return out;
}

}  // namespace

std::string export_lp_hypergraph(const Hypergraph& h) {
    std::vector<std::vector<VertexId>> constraints;
    constraints.reserve(h.num_edges());
    for (EdgeId e : h.edges()) {
        const auto p = h.pins(e);
        constraints.emplace_back(p.begin(), p.end());
    }
    return render(h.vertices(), constraints);
}

std::string export_lp_graph(const Graph& g) {
    std::vector<VertexId> objective;
    objective.reserve(g.num_vertices());
    for (VertexId v = 1; v <= g.num_vertices(); ++v) {
        objective.push_back(v);
    }
    std::vector<std::vector<VertexId>> constraints;
    constraints.reserve(g.num_edges());
    for (const auto& [u, v] : g.edge_pairs()) {
        constraints.push_back({u, v});
    }
    return render(objective, constraints);
}

}  // namespace hymis
