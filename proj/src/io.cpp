#include "hymis/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace hymis {

namespace {

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based position in the file
};

// All lines, with '\r' stripped; comment filtering is format-specific.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number});
        ++number;
        if (eol == std::string_view::npos) break;
        text.remove_prefix(eol + 1);
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::uint64_t> parse_int_line(const Line& line) {
    std::vector<std::uint64_t> out;
    const char* it = line.text.data();
    const char* end = it + line.text.size();
    while (it != end) {
        if (*it == ' ' || *it == '\t') {
            ++it;
            continue;
        }
        std::uint64_t value = 0;
        const auto [next, ec] = std::from_chars(it, end, value);
        if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t')) {
            throw ParseError(line.number, "expected an unsigned integer, got '" +
                                              std::string(line.text) + "'");
        }
        out.push_back(value);
        it = next;
    }
    return out;
}

std::string format_fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

void append_id_array(std::string& out, const std::vector<std::uint32_t>& ids) {
    out += '[';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(ids[i]);
    }
    out += ']';
}

std::vector<std::uint32_t> ids_from_json(const nlohmann::json& value, std::size_t line,
                                         const char* field) {
    if (!value.is_array()) {
        throw ParseError(line, std::string(field) + " is not an array");
    }
    std::vector<std::uint32_t> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number_unsigned() ||
            item.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError(line, std::string(field) + " holds an invalid id");
        }
        out.push_back(item.get<std::uint32_t>());
    }
    if (!std::is_sorted(out.begin(), out.end())) {
        std::sort(out.begin(), out.end());
    }
    return out;
}

}  // namespace

double average_edge_size(const Hypergraph& h) {
    if (h.num_edges() == 0) return 0.0;
    return static_cast<double>(h.num_pins()) / static_cast<double>(h.num_edges());
}

StatsReport make_stats_report(std::uint64_t original_n, std::uint64_t original_m,
                              double original_e_bar, const KernelResult& result) {
    StatsReport report;
    report.n = original_n;
    report.m = original_m;
    report.e_bar = original_e_bar;
    report.n_r = result.kernel.num_vertices();
    report.m_r = result.kernel.num_edges();
    report.e_bar_r = average_edge_size(result.kernel);
    report.t = result.elapsed_seconds;
    report.offset = result.offset;
    report.timed_out = result.timed_out;
    report.rules = result.stats;
    return report;
}

Hypergraph parse_hmetis(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t idx = 0;
    auto next_content = [&]() -> const Line* {
        while (idx < lines.size()) {
            const Line& line = lines[idx];
            if (!line.text.empty() && line.text.front() == '%') {
                ++idx;
                continue;
            }
            return &line;
        }
        return nullptr;
    };

    const Line* header = next_content();
    if (header == nullptr || is_blank(header->text)) {
        throw ParseError(header ? header->number : 1, "missing 'm n' header");
    }
    const auto head = parse_int_line(*header);
    if (head.size() == 3) {
        throw ParseError(header->number,
                         "weighted hMetis fmt '" + std::to_string(head[2]) + "' not supported");
    }
    if (head.size() != 2) {
        throw ParseError(header->number, "header must be 'm n'");
    }
    const std::uint64_t m = head[0];
    const std::uint64_t n = head[1];
    if (n > 1000000000ull || m > 1000000000ull) {
        throw ParseError(header->number, "header sizes out of supported range");
    }
    ++idx;

    Hypergraph h(n);
    for (std::uint64_t e = 0; e < m; ++e) {
        const Line* line = next_content();
        if (line == nullptr) {
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e));
        }
        auto pins = parse_int_line(*line);
        if (pins.empty()) {
            throw ParseError(line->number, "edge " + std::to_string(e + 1) + " has no pins");
        }
        std::vector<VertexId> edge;
        edge.reserve(pins.size());
        for (std::uint64_t pin : pins) {
            if (pin < 1 || pin > n) {
                throw ParseError(line->number, "pin " + std::to_string(pin) +
                                                   " out of range [1," + std::to_string(n) + "]");
            }
            edge.push_back(static_cast<VertexId>(pin));
        }
        h.add_edge(std::move(edge));
        ++idx;
    }
    while (const Line* line = next_content()) {
        if (!is_blank(line->text)) {
            throw ParseError(line->number, "unexpected content after " + std::to_string(m) +
                                               " edge lines");
        }
        ++idx;
    }
    return h;
}

std::string write_hmetis(const Hypergraph& h) {
    if (h.num_vertices() != h.max_vertex_id() || h.num_edges() != h.max_edge_id()) {
        throw std::invalid_argument("write_hmetis requires a compacted instance");
    }
    std::string out = std::to_string(h.num_edges()) + " " + std::to_string(h.num_vertices()) + "\n";
    for (EdgeId e = 1; e <= h.num_edges(); ++e) {
        const auto p = h.pins(e);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(p[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_metis_graph(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (VertexId v = 1; v <= g.num_vertices(); ++v) {
        const auto adj = g.adjacency(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(adj[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_trace(const std::vector<TraceEvent>& trace) {
    std::string out;
    for (const TraceEvent& ev : trace) {
        out += "{\"kind\":\"";
        out += to_string(ev.kind);
        out += "\",\"included\":";
        append_id_array(out, ev.included);
        out += ",\"excluded\":";
        append_id_array(out, ev.excluded);
        out += ",\"removed_edges\":";
        append_id_array(out, ev.removed_edges);
        out += ",\"alpha_offset\":" + std::to_string(ev.alpha_offset) + "}\n";
    }
    return out;
}

std::vector<TraceEvent> parse_trace(std::string_view text) {
    std::vector<TraceEvent> trace;
    for (const Line& line : split_lines(text)) {
        if (is_blank(line.text)) continue;
        nlohmann::json doc = nlohmann::json::parse(line.text, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            throw ParseError(line.number, "malformed trace event");
        }
        for (const char* field : {"kind", "included", "excluded", "removed_edges", "alpha_offset"}) {
            if (!doc.contains(field)) {
                throw ParseError(line.number, std::string("missing field '") + field + "'");
            }
        }
        TraceEvent ev;
        if (!doc["kind"].is_string()) {
            throw ParseError(line.number, "kind is not a string");
        }
        const auto kind = reduction_kind_from_string(doc["kind"].get<std::string>());
        if (!kind) {
            throw ParseError(line.number, "unknown reduction kind '" +
                                              doc["kind"].get<std::string>() + "'");
        }
        ev.kind = *kind;
        ev.included = ids_from_json(doc["included"], line.number, "included");
        ev.excluded = ids_from_json(doc["excluded"], line.number, "excluded");
        ev.removed_edges = ids_from_json(doc["removed_edges"], line.number, "removed_edges");
        if (!doc["alpha_offset"].is_number_unsigned()) {
            throw ParseError(line.number, "alpha_offset is not a non-negative integer");
        }
        ev.alpha_offset = doc["alpha_offset"].get<std::uint32_t>();
        if (ev.alpha_offset != ev.included.size()) {
            throw ParseError(line.number, "alpha_offset does not match the included set");
        }
        trace.push_back(std::move(ev));
    }
    return trace;
}

std::string write_solution(const std::vector<VertexId>& solution) {
    std::vector<VertexId> sorted = solution;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (VertexId v : sorted) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::vector<VertexId> parse_solution(std::string_view text) {
    std::vector<VertexId> out;
    for (const Line& line : split_lines(text)) {
        if (is_blank(line.text)) continue;
        const auto ids = parse_int_line(line);
        if (ids.size() != 1) {
            throw ParseError(line.number, "expected one vertex id per line");
        }
        if (ids[0] < 1 || ids[0] > std::numeric_limits<VertexId>::max()) {
            throw ParseError(line.number, "vertex id out of range");
        }
        out.push_back(static_cast<VertexId>(ids[0]));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ParseError(1, "duplicate vertex id in solution");
    }
    return out;
}

std::string write_vertex_map(const std::vector<VertexId>& map) {
    std::string out;
    for (VertexId original : map) {
        out += std::to_string(original);
        out += '\n';
    }
    return out;
}

std::vector<VertexId> parse_vertex_map(std::string_view text) {
    std::vector<VertexId> out;
    for (const Line& line : split_lines(text)) {
        if (is_blank(line.text)) continue;
        const auto ids = parse_int_line(line);
        if (ids.size() != 1) {
            throw ParseError(line.number, "expected one original id per line");
        }
        out.push_back(static_cast<VertexId>(ids[0]));
    }
    return out;
}

std::string write_stats(const StatsReport& report) {
    std::string out = "{";
    out += "\"n\":" + std::to_string(report.n);
    out += ",\"m\":" + std::to_string(report.m);
    out += ",\"e_bar\":" + format_fixed2(report.e_bar);
    out += ",\"n_r\":" + std::to_string(report.n_r);
    out += ",\"m_r\":" + std::to_string(report.m_r);
    out += ",\"e_bar_r\":" + format_fixed2(report.e_bar_r);
    out += ",\"t\":" + format_fixed2(report.t);
    out += ",\"offset\":" + std::to_string(report.offset);
    out += ",\"timed_out\":";
    out += report.timed_out ? "true" : "false";
    out += ",\"rules\":{";
    bool first = true;
    for (ReductionKind kind : canonical_rule_order()) {
        const RuleStats& rs = report.rules[kind];
        if (!first) out += ',';
        first = false;
        out += '"';
        out += to_string(kind);
        out += "\":{\"applications\":" + std::to_string(rs.applications);
        out += ",\"vertices_removed\":" + std::to_string(rs.vertices_removed);
        out += ",\"edges_removed\":" + std::to_string(rs.edges_removed) + "}";
    }
    out += "}}\n";
    return out;
}

}  // namespace hymis
