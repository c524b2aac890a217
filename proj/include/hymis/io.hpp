#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hymis/graph.hpp"
#include "hymis/hypergraph.hpp"
#include "hymis/reductions.hpp"

namespace hymis {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Shape of the stats emitted next to a kernel: the original and reduced
// instance sizes, the reduction time and the per-rule application counts.
struct StatsReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double e_bar = 0.0;  // average edge size, 0 when m == 0
    std::uint64_t n_r = 0;
    std::uint64_t m_r = 0;
    double e_bar_r = 0.0;
    double t = 0.0;  // reduction seconds
    std::uint64_t offset = 0;
    bool timed_out = false;
    ReductionStats rules;
};

double average_edge_size(const Hypergraph& h);
StatsReport make_stats_report(std::uint64_t original_n, std::uint64_t original_m,
                              double original_e_bar, const KernelResult& result);

// hMetis hypergraph text: header "m n", then one 1-indexed pin line per edge;
// '%' starts a comment line. Weighted fmt headers are rejected.
Hypergraph parse_hmetis(std::string_view text);
// Requires contiguous ids (1..n, 1..m); write-side of the same format.
std::string write_hmetis(const Hypergraph& h);

// METIS graph text: header "n m", then one neighbor line per vertex.
std::string write_metis_graph(const Graph& g);

// JSON Lines, one trace event per line.
std::string write_trace(const std::vector<TraceEvent>& trace);
std::vector<TraceEvent> parse_trace(std::string_view text);

// One vertex id per line, ascending.
std::string write_solution(const std::vector<VertexId>& solution);
std::vector<VertexId> parse_solution(std::string_view text);

// Kernel-to-original vertex map: line k holds the original id of kernel vertex k.
std::string write_vertex_map(const std::vector<VertexId>& map);
std::vector<VertexId> parse_vertex_map(std::string_view text);

// Single JSON object; key order and number formatting are fixed so repeated
// runs emit identical bytes (times are rounded to centiseconds).
std::string write_stats(const StatsReport& report);

}  // namespace hymis
