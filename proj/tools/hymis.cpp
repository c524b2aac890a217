// hymis - kernelization toolkit for the maximum strong independent set
// problem on hypergraphs.
//
// Exit codes: 0 success, 1 runtime failure (failed verification, resource
// limit), 2 input/usage error, 3 structural error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hymis/exact.hpp"
#include "hymis/expansion.hpp"
#include "hymis/ilp_export.hpp"
#include "hymis/io.hpp"
#include "hymis/reductions.hpp"

namespace fs = std::filesystem;
using namespace hymis;

namespace {

struct CommandError : std::runtime_error {
    CommandError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CommandError(2, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::atomic<unsigned> g_tmp_counter{0};

void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(g_tmp_counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw CommandError(2, "cannot write '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            throw CommandError(2, "write failed for '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, path);
}

fs::path derived_map_path(fs::path base) {
    if (base.extension() == ".hgr" || base.extension() == ".graph") {
        base.replace_extension(".map");
    } else {
        base += ".map";
    }
    return base;
}

Hypergraph load_hypergraph(const fs::path& path) {
    return parse_hmetis(read_file(path));
}

std::vector<ReductionKind> parse_rule_list(const std::vector<std::string>& names) {
    std::vector<ReductionKind> rules;
    for (const std::string& name : names) {
        const auto kind = reduction_kind_from_string(name);
        if (!kind) {
            throw CommandError(2, "unknown reduction rule '" + name + "'");
        }
        rules.push_back(*kind);
    }
    const auto& canon = canonical_rule_order();
    auto rank = [&](ReductionKind k) {
        return std::find(canon.begin(), canon.end(), k) - canon.begin();
    };
    std::sort(rules.begin(), rules.end(),
              [&](ReductionKind a, ReductionKind b) { return rank(a) < rank(b); });
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    return rules;
}

StatsReport run_reduce_single(const fs::path& in, const fs::path& out, const fs::path& trace_out,
                              const fs::path& stats_out, const ReducerConfig& cfg) {
    Hypergraph h = load_hypergraph(in);
    const std::uint64_t n = h.num_vertices();
    const std::uint64_t m = h.num_edges();
    const double e_bar = average_edge_size(h);
    const KernelResult kr = reduce(std::move(h), cfg);
    write_file_atomic(out, write_hmetis(kr.kernel));
    write_file_atomic(derived_map_path(out), write_vertex_map(kr.vertex_map));
    if (!trace_out.empty()) {
        write_file_atomic(trace_out, write_trace(kr.trace));
    }
    const StatsReport report = make_stats_report(n, m, e_bar, kr);
    if (!stats_out.empty()) {
        write_file_atomic(stats_out, write_stats(report));
    }
    return report;
}

std::size_t batch_worker_count(std::size_t jobs) {
    std::size_t workers = std::max<unsigned>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYMIS_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1) {
            throw CommandError(2, "HYMIS_THREADS must be a positive integer");
        }
        workers = static_cast<std::size_t>(parsed);
    }
    return std::max<std::size_t>(1, std::min(workers, jobs));
}

std::string csv_row(const std::string& instance, const StatsReport& r) {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer), "%s,%llu,%llu,%.2f,%llu,%llu,%.2f,%.2f,%llu\n",
                  instance.c_str(), static_cast<unsigned long long>(r.n),
                  static_cast<unsigned long long>(r.m), r.e_bar,
                  static_cast<unsigned long long>(r.n_r), static_cast<unsigned long long>(r.m_r),
                  r.e_bar_r, r.t, static_cast<unsigned long long>(r.offset));
    return buffer;
}

int run_reduce_batch(const fs::path& dir, const fs::path& out_dir, const fs::path& csv,
                     const ReducerConfig& cfg) {
    if (!fs::is_directory(dir)) {
        throw CommandError(2, "'" + dir.string() + "' is not a directory");
    }
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".hgr") {
            inputs.push_back(entry.path());
        }
    }
    std::sort(inputs.begin(), inputs.end());
    fs::create_directories(out_dir);

    std::vector<StatsReport> reports(inputs.size());
    std::vector<std::string> errors(inputs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1)) {
            const std::string stem = inputs[i].stem().string();
            try {
                reports[i] = run_reduce_single(
                    inputs[i], out_dir / (stem + ".kernel.hgr"),
                    out_dir / (stem + ".trace.jsonl"), out_dir / (stem + ".stats.json"), cfg);
            } catch (const std::exception& e) {
                errors[i] = inputs[i].string() + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = batch_worker_count(inputs.size());
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    bool failed = false;
    for (const auto& error : errors) {
        if (!error.empty()) {
            std::cerr << "error: " << error << "\n";
            failed = true;
        }
    }
    if (!csv.empty()) {
        std::string table = "instance,n,m,e_bar,n_r,m_r,e_bar_r,t,offset\n";
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (errors[i].empty()) {
                table += csv_row(inputs[i].stem().string(), reports[i]);
            }
        }
        write_file_atomic(csv, table);
    }
    std::cout << "reduced " << inputs.size() << " instances with " << workers << " workers\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernelization toolkit for maximum strong independent sets on hypergraphs"};
    app.require_subcommand(1);

    auto* reduce_cmd = app.add_subcommand("reduce", "apply the reduction rules to an instance");
    std::string reduce_in, reduce_out, reduce_trace, reduce_stats, reduce_dir, reduce_out_dir,
        reduce_csv;
    std::vector<std::string> rule_names;
    double time_limit = 0.0;
    bool no_unconfined = false;
    reduce_cmd->add_option("input", reduce_in, "instance file (.hgr)");
    reduce_cmd->add_option("--out", reduce_out, "kernel output path (.hgr)");
    reduce_cmd->add_option("--trace", reduce_trace, "trace output path (.trace.jsonl)");
    reduce_cmd->add_option("--stats", reduce_stats, "stats output path (.stats.json)");
    reduce_cmd->add_option("--rules", rule_names, "comma-separated rule subset")->delimiter(',');
    auto* reduce_limit = reduce_cmd->add_option("--time-limit", time_limit, "seconds");
    reduce_cmd->add_flag("--no-unconfined", no_unconfined, "skip the unconfined rule");
    reduce_cmd->add_option("--dir", reduce_dir, "batch mode: directory of .hgr instances");
    reduce_cmd->add_option("--out-dir", reduce_out_dir, "batch mode: output directory");
    reduce_cmd->add_option("--csv", reduce_csv, "batch mode: aggregate stats CSV");

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
    std::string solve_in, solve_out, solve_lift, solve_map;
    double solve_limit = 0.0;
    solve_cmd->add_option("input", solve_in, "instance file (.hgr)")->required();
    solve_cmd->add_option("--out", solve_out, "solution output path (.sol)")->required();
    solve_cmd->add_option("--lift", solve_lift, "trace file; lift the solution through it");
    solve_cmd->add_option("--map", solve_map, "kernel-to-original map (defaults to <input>.map)");
    auto* solve_limit_opt = solve_cmd->add_option("--time-limit", solve_limit, "seconds");

    auto* expand_cmd = app.add_subcommand("expand", "clique-expand an instance into a graph");
    std::string expand_in, expand_out;
    expand_cmd->add_option("input", expand_in, "instance file (.hgr)")->required();
    expand_cmd->add_option("--out", expand_out, "graph output path (.graph)")->required();

    auto* ilp_cmd = app.add_subcommand("export-ilp", "write the integer program as an LP file");
    std::string ilp_in, ilp_out, ilp_mode;
    ilp_cmd->add_option("input", ilp_in, "instance file (.hgr)")->required();
    ilp_cmd->add_option("--mode", ilp_mode, "hypergraph or graph")
        ->required()
        ->check(CLI::IsMember({"hypergraph", "graph"}));
    ilp_cmd->add_option("--out", ilp_out, "LP output path (.lp)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
    std::string verify_in, verify_sol;
    verify_cmd->add_option("input", verify_in, "instance file (.hgr)")->required();
    verify_cmd->add_option("solution", verify_sol, "solution file (.sol)")->required();

    auto* stats_cmd = app.add_subcommand("stats", "print instance size statistics");
    std::string stats_in;
    stats_cmd->add_option("input", stats_in, "instance file (.hgr)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(reduce_cmd)) {
            ReducerConfig cfg;
            if (!rule_names.empty()) cfg.enabled_rules = parse_rule_list(rule_names);
            if (*reduce_limit) cfg.time_limit = time_limit;
            cfg.unconfined_enabled = !no_unconfined;
            if (!reduce_dir.empty()) {
                if (reduce_out_dir.empty()) {
                    throw CommandError(2, "--dir requires --out-dir");
                }
                return run_reduce_batch(reduce_dir, reduce_out_dir, reduce_csv, cfg);
            }
            if (reduce_in.empty() || reduce_out.empty()) {
                throw CommandError(2, "reduce needs an input file and --out (or --dir mode)");
            }
            const StatsReport r =
                run_reduce_single(reduce_in, reduce_out, reduce_trace, reduce_stats, cfg);
            std::printf("n=%llu m=%llu -> n_r=%llu m_r=%llu offset=%llu t=%.2fs%s\n",
                        static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.m),
                        static_cast<unsigned long long>(r.n_r),
                        static_cast<unsigned long long>(r.m_r),
                        static_cast<unsigned long long>(r.offset), r.t,
                        r.timed_out ? " (timed out)" : "");
            return 0;
        }
        if (app.got_subcommand(solve_cmd)) {
            const Hypergraph h = load_hypergraph(solve_in);
            std::optional<double> limit;
            if (*solve_limit_opt) limit = solve_limit;
            Solution sol;
            try {
                sol = solve_exact(h, limit);
            } catch (const ResourceLimitError& e) {
                throw CommandError(1, e.what());
            }
            std::vector<VertexId> members = sol.members;
            if (!solve_lift.empty()) {
                const auto trace = parse_trace(read_file(solve_lift));
                const fs::path map_path =
                    solve_map.empty() ? derived_map_path(solve_in) : fs::path(solve_map);
                const auto map = parse_vertex_map(read_file(map_path));
                if (map.size() != h.num_vertices()) {
                    throw CommandError(
                        2, "map '" + map_path.string() + "' does not match the instance");
                }
                for (VertexId& v : members) v = map[v - 1];
                members = lift_solution(trace, h, map, members);
            }
            write_file_atomic(solve_out, write_solution(members));
            if (!sol.optimal) {
                std::cerr << "warning: time limit reached, solution may be suboptimal\n";
            }
            std::printf("cardinality %zu\n", members.size());
            return 0;
        }
        if (app.got_subcommand(expand_cmd)) {
            const Hypergraph h = load_hypergraph(expand_in);
            const auto [g, map] = clique_expand(h);
            write_file_atomic(expand_out, write_metis_graph(g));
            write_file_atomic(derived_map_path(expand_out), write_vertex_map(map));
            std::printf("n=%zu m=%zu\n", g.num_vertices(), g.num_edges());
            return 0;
        }
        if (app.got_subcommand(ilp_cmd)) {
            const Hypergraph h = load_hypergraph(ilp_in);
            std::string doc;
            if (ilp_mode == "hypergraph") {
                doc = export_lp_hypergraph(h);
            } else {
                const auto [g, map] = clique_expand(h);
                doc = export_lp_graph(g);
            }
            write_file_atomic(ilp_out, doc);
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) {
            const Hypergraph h = load_hypergraph(verify_in);
            const auto solution = parse_solution(read_file(verify_sol));
            std::optional<EdgeId> violated;
            try {
                violated = find_violated_edge(h, solution);
            } catch (const std::invalid_argument& e) {
                throw CommandError(2, e.what());
            }
            if (violated) {
                const auto p = h.pins(*violated);
                std::string pins;
                for (VertexId v : p) {
                    if (!pins.empty()) pins += ' ';
                    pins += std::to_string(v);
                }
                std::cerr << "edge " << *violated
                          << " contains more than one solution vertex (pins: " << pins << ")\n";
                return 1;
            }
            std::printf("cardinality %zu\n", solution.size());
            return 0;
        }
        if (app.got_subcommand(stats_cmd)) {
            const Hypergraph h = load_hypergraph(stats_in);
            char buffer[128];
            std::snprintf(buffer, sizeof(buffer), "{\"n\":%zu,\"m\":%zu,\"e_bar\":%.2f}\n",
                          h.num_vertices(), h.num_edges(), average_edge_size(h));
            std::fputs(buffer, stdout);
            return 0;
        }
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidSolutionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
