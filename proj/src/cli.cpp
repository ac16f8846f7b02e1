#include "gasketlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gasketlab/analysis.hpp"
#include "gasketlab/builder.hpp"
#include "gasketlab/coloring.hpp"
#include "gasketlab/error.hpp"
#include "gasketlab/oracle.hpp"

namespace gasketlab::cli {
namespace {

constexpr const char* cap_variable = "GASKETLAB_VERTEX_CAP";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::uint64_t parse_cap(const std::string& text, const std::string& origin) {
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw Error(origin + ": vertex cap must be a positive integer, got '" + text + "'");
    }
    return value;
}

struct BaseOptions {
    std::string base_file;
    std::string graph6;
    std::string edges;
    int n = 0;
};

void add_base_options(CLI::App& cmd, BaseOptions& o) {
    auto* file = cmd.add_option("--base", o.base_file, "base graph file: JSON edge list or graph6");
    auto* g6 = cmd.add_option("--graph6", o.graph6, "base graph as one graph6 record");
    auto* edges = cmd.add_option("--edges", o.edges, "base graph as edge shorthand, e.g. 1-2,2-3");
    cmd.add_option("--n", o.n, "vertex count for --edges (default: largest endpoint)")->needs(edges);
    file->excludes(g6, edges);
    g6->excludes(edges);
}

BaseGraph load_base(const BaseOptions& o) {
    if (!o.edges.empty()) {
        return parse_edge_shorthand(o.edges, o.n);
    }
    if (!o.graph6.empty()) {
        return parse_graph6(o.graph6);
    }
    if (o.base_file.empty()) {
        throw Error("no base graph: pass --base FILE, --graph6 CODE or --edges 1-2,...");
    }
    const auto text = read_file(o.base_file);
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw ParseError("'" + o.base_file + "' is empty");
    }
    if (text[start] == '{') {
        return parse_edge_list_json(text);
    }
    auto end = text.find_first_of("\r\n", start);
    return parse_graph6(std::string_view(text).substr(start, end == std::string::npos ? end : end - start));
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

MaterializedGraph materialize(const BaseGraph& g, int t, const std::string& kind, std::uint64_t cap) {
    return parse_graph_kind(kind) == GraphKind::gasket ? build_gasket(g, t, cap) : build_sierpinski(g, t, cap);
}

} // namespace

ConfigLayer read_config_file(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("config '" + path + "' must be a JSON object");
    }
    ConfigLayer layer;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "vertex_cap") {
                layer.vertex_cap = value.get<std::uint64_t>();
            } else if (key == "time_budget_s") {
                layer.time_budget_s = value.get<int>();
            } else if (key == "jobs") {
                layer.jobs = value.get<unsigned>();
            } else if (key == "output_format") {
                layer.output_format = value.get<std::string>();
            } else {
                throw ParseError("config '" + path + "': unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config '" + path + "': " + e.what());
    }
    return layer;
}

ConfigLayer read_environment(const std::map<std::string, std::string>& env) {
    ConfigLayer layer;
    if (auto it = env.find(cap_variable); it != env.end() && !it->second.empty()) {
        layer.vertex_cap = parse_cap(it->second, cap_variable);
    }
    return layer;
}

Config resolve(const ConfigLayer& flags, const ConfigLayer& env, const ConfigLayer& file) {
    Config c;
    for (const auto* layer : {&file, &env, &flags}) {
        if (layer->vertex_cap) {
            c.vertex_cap = *layer->vertex_cap;
        }
        if (layer->time_budget_s) {
            c.time_budget_s = *layer->time_budget_s;
        }
        if (layer->jobs) {
            c.jobs = *layer->jobs;
        }
        if (layer->output_format) {
            c.output_format = *layer->output_format;
        }
    }
    if (c.vertex_cap < 1) {
        throw Error("vertex cap must be at least 1");
    }
    if (c.time_budget_s < 1) {
        throw Error("time budget must be at least 1 second");
    }
    if (c.jobs < 1) {
        throw Error("jobs must be at least 1");
    }
    if (c.output_format != "csv" && c.output_format != "jsonl") {
        throw Error("output format must be csv or jsonl, got '" + c.output_format + "'");
    }
    return c;
}

std::map<std::string, std::string> process_environment() {
    std::map<std::string, std::string> env;
    if (const char* value = std::getenv(cap_variable)) {
        env.emplace(cap_variable, value);
    }
    return env;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
    CLI::App app{"Generalized Sierpinski graphs and gaskets", "gasketlab"};
    app.require_subcommand(1);

    std::string config_path;
    ConfigLayer flags;
    auto add_config_options = [&](CLI::App& cmd) {
        cmd.add_option("--config", config_path, "JSON config file");
        cmd.add_option("--vertex-cap", flags.vertex_cap, "refuse to materialize more words than this")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--time-budget", flags.time_budget_s, "seconds per exact search")->check(CLI::PositiveNumber);
    };

    BaseOptions base;
    int t = 0;
    std::string kind = "gasket";
    auto add_common = [&](CLI::App& cmd) {
        add_base_options(cmd, base);
        cmd.add_option("--t", t, "depth t >= 1")->required()->check(CLI::Range(1, 64));
        add_config_options(cmd);
    };

    auto* build = app.add_subcommand("build", "materialize S(G,t) or S[G,t]");
    add_common(*build);
    build->add_option("--kind", kind, "sierpinski or gasket")->check(CLI::IsMember({"sierpinski", "gasket"}));
    std::string build_out = "counts";
    build->add_option("--out", build_out, "counts, dot or json")->check(CLI::IsMember({"counts", "dot", "json"}));

    auto* neighbors = app.add_subcommand("neighbors", "neighbors of one gasket vertex, without materializing");
    add_common(*neighbors);
    std::string vertex;
    neighbors->add_option("--vertex", vertex, "vertex label, e.g. 1.{2,3}@2 or a word 1.2.2")->required();

    auto* color = app.add_subcommand("color", "color S[G,t] and verify the coloring");
    add_common(*color);
    std::string method = "recursive";
    color->add_option("--method", method, "level2, recursive, bipartite or exact")
        ->check(CLI::IsMember({"level2", "recursive", "bipartite", "exact"}));
    std::string color_out = "json";
    color->add_option("--out", color_out, "json")->check(CLI::IsMember({"json"}));

    auto* check = app.add_subcommand("check", "run theorem checks on S[G,t]");
    add_common(*check);
    std::string suite = "all";
    check->add_option("--suite", suite, "test suite")->check(CLI::IsMember(suite_names()));

    auto* sweep_cmd = app.add_subcommand("sweep", "exact chromatic and clique numbers over a graph6 corpus");
    std::string corpus;
    sweep_cmd->add_option("--corpus", corpus, "graph6 file, one graph per line")->required();
    std::vector<int> t_values{3};
    sweep_cmd->add_option("--t", t_values, "depths, e.g. 2,3")->delimiter(',')->check(CLI::Range(1, 64));
    sweep_cmd->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", flags.output_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    add_config_options(*sweep_cmd);

    auto* export_cmd = app.add_subcommand("export", "write S(G,t) or S[G,t] to a file");
    add_common(*export_cmd);
    export_cmd->add_option("--kind", kind, "sierpinski or gasket")->check(CLI::IsMember({"sierpinski", "gasket"}));
    std::string format = "dot";
    export_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    std::string output;
    export_cmd->add_option("--output", output, "output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        const auto config = resolve(flags, read_environment(env),
                                    config_path.empty() ? ConfigLayer{} : read_config_file(config_path));
        const Deadline deadline = Clock::now() + std::chrono::seconds(config.time_budget_s);
        const auto cap = config.vertex_cap;

        if (*sweep_cmd) {
            std::ifstream in(corpus);
            if (!in) {
                throw Error("cannot read corpus '" + corpus + "'");
            }
            SweepConfig sc;
            sc.t_values = t_values;
            sc.vertex_cap = cap;
            sc.time_budget = std::chrono::seconds(config.time_budget_s);
            sc.jobs = config.jobs;
            const bool csv = config.output_format == "csv";
            if (csv) {
                out << sweep_csv_header() << '\n';
            }
            const auto summary = sweep(in, sc, [&](const SweepRecord& r) {
                out << (csv ? to_csv(r) : to_jsonl(r)) << '\n';
                if (r.status == SweepStatus::bug || r.status == SweepStatus::finding ||
                    r.status == SweepStatus::skipped) {
                    err << to_string(r.status) << ": " << r.graph6 << " t=" << r.t
                        << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
                }
            });
            for (const auto& issue : summary.issues) {
                err << corpus << ':' << issue.line << ": skipped: " << issue.message << '\n';
            }
            err << summary.records << " records, " << summary.counterexamples << " counterexamples, "
                << summary.bugs << " bugs, " << summary.skipped << " skipped\n";
            if (summary.bugs > 0) {
                return ExitCode::bug;
            }
            return summary.counterexamples > 0 ? ExitCode::finding : ExitCode::ok;
        }

        const auto g = load_base(base);

        if (*build) {
            const auto m = materialize(g, t, kind, cap);
            if (build_out == "counts") {
                out << "vertices=" << m.order() << " edges=" << m.size() << " components=" << m.component_count()
                    << '\n';
                const auto report = verify_counts(m);
                if (!report.all_pass()) {
                    err << report.summary();
                    return ExitCode::bug;
                }
            } else {
                out << (build_out == "dot" ? export_dot(m) : export_json(m) + "\n");
            }
            return ExitCode::ok;
        }

        if (*neighbors) {
            const Oracle oracle(g, t);
            const auto v = parse_label(vertex, g, t, true);
            for (const auto& u : oracle.neighbors(v)) {
                out << format_label(u) << '\n';
            }
            return ExitCode::ok;
        }

        if (*color) {
            std::optional<Coloring> c;
            if (method == "level2") {
                if (t != 2) {
                    throw Error("--method level2 colors S[G,2]; use --t 2");
                }
                c = color_level2(g, recursive_base_coloring(g), chromatic_number_exact(g));
            } else if (method == "recursive") {
                c = color_recursive(g, t, cap);
            } else if (method == "bipartite") {
                c = color_bipartite(g, t, cap);
            } else {
                c = color_exact(build_gasket(g, t, cap), deadline);
            }
            const auto report = verify_proper(build_gasket(g, t, cap), *c);
            out << c->to_json() << '\n';
            if (!report.proper) {
                err << "coloring is not proper: " << report.violation_count << " monochromatic edges\n";
                return ExitCode::bug;
            }
            return ExitCode::ok;
        }

        if (*check) {
            int code = ExitCode::ok;
            for (const auto& r : run_suite(g, t, suite, cap, deadline)) {
                out << (r.passed() ? "PASS" : std::string(to_string(r.verdict))) << ' ' << r.name << ": " << r.detail
                    << '\n';
                if (r.verdict == Verdict::bug) {
                    code = ExitCode::bug;
                } else if (r.verdict == Verdict::finding && code == ExitCode::ok) {
                    code = ExitCode::finding;
                }
            }
            return code;
        }

        const auto m = materialize(g, t, kind, cap);
        write_output(format == "dot" ? export_dot(m) : export_json(m) + "\n", output, out);
        return ExitCode::ok;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const TimeBudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --time-budget)\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitCode::bug;
    }
    return ExitCode::usage;
}

} // namespace gasketlab::cli
