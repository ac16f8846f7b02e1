#include "gasketlab/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gasketlab/coloring.hpp"
#include "gasketlab/error.hpp"
#include "gasketlab/labeling.hpp"
#include "gasketlab/oracle.hpp"

namespace gasketlab {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::finding:
        return "FINDING";
    case Verdict::bug:
        return "BUG";
    }
    return "?";
}

namespace {

CheckResult verdict(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok ? Verdict::pass : Verdict::bug, std::move(detail)};
}

std::size_t triangle_count(const DenseGraph& d) {
    std::size_t count = 0;
    for (std::size_t u = 0; u < d.order(); ++u) {
        for (auto v : d.neighbors(u)) {
            if (v <= u) {
                continue;
            }
            for (auto w : d.neighbors(v)) {
                if (w > v && d.adjacent(u, w)) {
                    ++count;
                }
            }
        }
    }
    return count;
}

bool is_forest(const MaterializedGraph& m) { return m.size() + m.component_count() == m.order(); }

std::string labels_text(const std::vector<VertexLabel>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? ", " : "") + format_label(labels[i]);
    }
    return out + "}";
}

} // namespace

CheckResult check_clique_theorem(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const auto base = clique_number_exact(g);
    const auto gasket = static_cast<int>(exact::clique_number(m.to_dense()));
    return verdict("clique number", base == gasket,
                   "omega(G)=" + std::to_string(base) + " omega(S[G,t])=" + std::to_string(gasket));
}

CheckResult check_triangle_preservation(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const bool base_free = !exact::has_triangle(g.to_dense());
    const bool gasket_free = !exact::has_triangle(m.to_dense());
    return verdict("triangle preservation", base_free == gasket_free,
                   std::string("G triangle-free=") + (base_free ? "yes" : "no") +
                       " S[G,t] triangle-free=" + (gasket_free ? "yes" : "no"));
}

CheckResult check_clique_localization(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const auto cliques = exact::maximal_cliques(m.to_dense(), 4);
    for (const auto& clique : cliques) {
        std::optional<std::set<Word>> shared;
        for (auto v : clique) {
            std::set<Word> prefixes;
            for (const auto& w : expand(m.label(v))) {
                prefixes.emplace(w.begin(), w.end() - 1);
            }
            if (!shared) {
                shared = std::move(prefixes);
            } else {
                std::set<Word> both;
                std::set_intersection(shared->begin(), shared->end(), prefixes.begin(), prefixes.end(),
                                      std::inserter(both, both.end()));
                shared = std::move(both);
            }
        }
        if (shared && shared->empty()) {
            std::vector<VertexLabel> labels;
            for (auto v : clique) {
                labels.push_back(m.label(v));
            }
            return verdict("clique localization", false, "clique " + labels_text(labels) + " spans several copies");
        }
    }
    return verdict("clique localization", true,
                   cliques.empty() ? "vacuous: no clique of size >= 4"
                                   : std::to_string(cliques.size()) + " maximal cliques of size >= 4, each in one copy");
}

CheckResult check_counts(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto s = verify_counts(build_sierpinski(g, t, cap));
    const auto gk = verify_counts(build_gasket(g, t, cap));
    const bool ok = s.all_pass() && gk.all_pass();
    return verdict("counts", ok, ok ? "order, size and components match" : "S(G,t):\n" + s.summary() + "S[G,t]:\n" + gk.summary());
}

CheckResult check_cycles(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const bool base_acyclic = g.edge_count() + classify(g).components == static_cast<std::size_t>(g.order());
    const bool gasket_acyclic = is_forest(m);
    const auto base_triangles = triangle_count(g.to_dense());
    const auto gasket_triangles = triangle_count(m.to_dense());
    std::uint64_t copies = 1;
    for (int i = 1; i < t; ++i) {
        copies *= static_cast<std::uint64_t>(g.order());
    }
    const bool ok = base_acyclic == gasket_acyclic && gasket_triangles >= base_triangles * copies;
    return verdict("cycles", ok,
                   std::string("acyclic G=") + (base_acyclic ? "yes" : "no") + " S[G,t]=" +
                       (gasket_acyclic ? "yes" : "no") + ", triangles " + std::to_string(gasket_triangles) +
                       " >= " + std::to_string(base_triangles) + "*" + std::to_string(copies));
}

CheckResult check_top_contractions_independent(const BaseGraph& g, int t, std::uint64_t cap) {
    if (t < 3) {
        return verdict("top contractions independent", true, "vacuous for t < 3");
    }
    const auto m = build_gasket(g, t, cap);
    std::vector<std::size_t> top;
    for (auto [i, j] : g.edges()) {
        top.push_back(*m.find(VertexLabel::contracted({}, static_cast<Letter>(i), static_cast<Letter>(j), t)));
    }
    for (std::size_t a = 0; a < top.size(); ++a) {
        for (std::size_t b = a + 1; b < top.size(); ++b) {
            if (m.adjacent(top[a], top[b])) {
                return verdict("top contractions independent", false,
                               format_label(m.label(top[a])) + " -- " + format_label(m.label(top[b])));
            }
        }
    }
    return verdict("top contractions independent", true, std::to_string(top.size()) + " vertices, no edges among them");
}

CheckResult check_deep_contraction_neighbors(const BaseGraph& g, int t, std::uint64_t cap) {
    if (t < 3) {
        return verdict("deep contraction neighbors", true, "vacuous for t < 3");
    }
    const auto m = build_gasket(g, t, cap);
    std::size_t checked = 0;
    for (std::size_t v = 0; v < m.order(); ++v) {
        const auto label = m.label(v);
        if (!label.is_contracted() || label.level() < 3) {
            continue;
        }
        ++checked;
        for (auto u : m.neighbors(v)) {
            const auto nb = m.label(u);
            if (!nb.is_contracted() || nb.level() != 2) {
                return verdict("deep contraction neighbors", false,
                               format_label(label) + " has neighbor " + format_label(nb));
            }
        }
    }
    return verdict("deep contraction neighbors", true,
                   std::to_string(checked) + " deep contractions, all neighbors at level 2");
}

CheckResult check_copy_decomposition(const BaseGraph& g, int t, std::uint64_t cap) {
    if (t < 2) {
        return verdict("copy decomposition", true, "vacuous for t = 1");
    }
    const auto m = build_gasket(g, t, cap);
    const auto smaller = build_gasket(g, t - 1, cap);
    for (int i = 0; i < g.order(); ++i) {
        const auto first = static_cast<Letter>(i);
        std::map<std::size_t, std::size_t> to_smaller;
        for (std::size_t v = 0; v < m.order(); ++v) {
            if (auto stripped = strip_first_letter(m.label(v), first, g)) {
                const auto target = smaller.find(*stripped);
                if (!target) {
                    return verdict("copy decomposition", false, format_label(*stripped) + " is not in S[G,t-1]");
                }
                to_smaller.emplace(v, *target);
            }
        }
        std::set<std::size_t> image;
        for (auto [v, w] : to_smaller) {
            image.insert(w);
        }
        if (to_smaller.size() != smaller.order() || image.size() != smaller.order()) {
            return verdict("copy decomposition", false, "copy " + std::to_string(i + 1) + " is not a bijection");
        }
        std::size_t edges = 0;
        for (auto [u, a] : to_smaller) {
            for (auto v : m.neighbors(u)) {
                const auto it = to_smaller.find(v);
                if (it == to_smaller.end()) {
                    continue;
                }
                if (!smaller.adjacent(a, it->second)) {
                    return verdict("copy decomposition", false, "copy " + std::to_string(i + 1) + " has an extra edge");
                }
                ++edges;
            }
        }
        if (edges / 2 != smaller.size()) {
            return verdict("copy decomposition", false, "copy " + std::to_string(i + 1) + " misses edges");
        }
    }
    return verdict("copy decomposition", true, "every copy is S[G,t-1]");
}

CheckResult check_oracle_equivalence(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const Oracle oracle(g, t);
    for (std::size_t v = 0; v < m.order(); ++v) {
        const auto label = m.label(v);
        std::vector<VertexLabel> expected;
        for (auto u : m.neighbors(v)) {
            expected.push_back(m.label(u));
        }
        const auto implicit = oracle.neighbors(label);
        if (implicit != expected) {
            return verdict("oracle equivalence", false,
                           format_label(label) + ": oracle " + labels_text(implicit) + " vs built " +
                               labels_text(expected));
        }
    }
    return verdict("oracle equivalence", true, std::to_string(m.order()) + " neighbor sets agree");
}

CheckResult check_colorings(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto m = build_gasket(g, t, cap);
    const int k = chromatic_number_exact(g);
    std::vector<std::string> parts;
    bool ok = true;
    auto note = [&](const char* name, const ProperReport& report, bool palette_ok) {
        ok = ok && report.proper && palette_ok;
        parts.push_back(std::string(name) + (report.proper ? " proper" : " NOT proper") + " with " +
                        std::to_string(report.colors_used) + " colors");
    };
    if (t == 2) {
        const auto report = verify_proper(m, color_level2(g, recursive_base_coloring(g), k));
        note("level2", report, report.colors_used <= k);
    }
    const auto recursive = verify_proper(m, color_recursive(g, t, cap));
    note("recursive", recursive, recursive.colors_used <= k + 1);
    if (g.edge_count() > 0 && bipartition(g)) {
        const auto report = verify_proper(m, color_bipartite(g, t, cap));
        note("bipartite", report, report.colors_used == 2);
    }
    std::string detail;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        detail += (i ? "; " : "") + parts[i];
    }
    return verdict("constructive colorings", ok, detail);
}

CheckResult check_chromatic(const BaseGraph& g, int t, std::uint64_t cap, Deadline deadline) {
    const auto m = build_gasket(g, t, cap);
    const int base = chromatic_number_exact(g);
    const int gasket = exact::chromatic_number(m.to_dense(), deadline);
    const auto detail = "chi(G)=" + std::to_string(base) + " chi(S[G,t])=" + std::to_string(gasket);
    if (gasket == base) {
        return {"chromatic number", Verdict::pass, detail};
    }
    if (gasket == base + 1) {
        return {"chromatic number", Verdict::finding, detail + " (conjecture counterexample)"};
    }
    return {"chromatic number", Verdict::bug, detail + " (outside the proved sandwich)"};
}

std::vector<std::string> suite_names() {
    return {"all", "counts", "clique", "triangle", "localization", "cycles", "structure", "oracle", "coloring", "chromatic"};
}

std::vector<CheckResult> run_suite(const BaseGraph& g, int t, std::string_view suite, std::uint64_t cap,
                                   Deadline deadline) {
    const bool all = suite == "all";
    std::vector<CheckResult> out;
    if (all || suite == "counts") {
        out.push_back(check_counts(g, t, cap));
    }
    if (all || suite == "clique") {
        out.push_back(check_clique_theorem(g, t, cap));
    }
    if (all || suite == "triangle") {
        out.push_back(check_triangle_preservation(g, t, cap));
    }
    if (all || suite == "localization") {
        out.push_back(check_clique_localization(g, t, cap));
    }
    if (all || suite == "cycles") {
        out.push_back(check_cycles(g, t, cap));
    }
    if (all || suite == "structure") {
        out.push_back(check_top_contractions_independent(g, t, cap));
        out.push_back(check_deep_contraction_neighbors(g, t, cap));
        out.push_back(check_copy_decomposition(g, t, cap));
    }
    if (all || suite == "oracle") {
        out.push_back(check_oracle_equivalence(g, t, cap));
    }
    if (all || suite == "coloring") {
        out.push_back(check_colorings(g, t, cap));
    }
    if (all || suite == "chromatic") {
        out.push_back(check_chromatic(g, t, cap, deadline));
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    return out;
}

// --- sweep -------------------------------------------------------------------

std::string_view to_string(SweepStatus s) {
    switch (s) {
    case SweepStatus::ok:
        return "ok";
    case SweepStatus::finding:
        return "finding";
    case SweepStatus::bug:
        return "bug";
    case SweepStatus::skipped:
        return "skipped";
    }
    return "?";
}

SweepRecord sweep_one(const BaseGraph& g, std::string graph6, int t, const SweepConfig& config) {
    const auto start = Clock::now();
    const Deadline deadline = start + config.time_budget;
    SweepRecord r;
    r.graph6 = std::move(graph6);
    r.n = g.order();
    r.edge_count = g.edge_count();
    r.t = t;
    r.omega_base = clique_number_exact(g);
    r.chi_base = chromatic_number_exact(g);
    std::vector<std::string> problems;
    try {
        const auto m = build_gasket(g, t, config.vertex_cap);
        r.gasket_order = m.order();
        r.gasket_size = m.size();
        if (const auto counts = verify_counts(m); !counts.all_pass()) {
            problems.push_back("count mismatch");
        }
        const auto dense = m.to_dense();
        r.omega_gasket = static_cast<int>(exact::clique_number(dense, deadline));
        if (r.omega_gasket != r.omega_base) {
            problems.push_back("omega mismatch");
        }
        if (exact::find_k_coloring(dense, r.chi_base, deadline)) {
            r.chi_gasket = r.chi_base;
        } else {
            r.chi_gasket = r.chi_base + 1;
            const auto f = recursive_base_coloring(g);
            for (auto [u, v] : m.edges()) {
                if (recursive_color_of(m.label(u), f, r.chi_base) == recursive_color_of(m.label(v), f, r.chi_base)) {
                    problems.push_back("recursive coloring not proper");
                    break;
                }
            }
        }
        r.counterexample = r.chi_gasket != r.chi_base;
        if (!problems.empty()) {
            r.status = SweepStatus::bug;
        } else if (r.counterexample) {
            r.status = SweepStatus::finding;
        }
    } catch (const CapExceeded& e) {
        r.status = SweepStatus::skipped;
        problems.push_back(e.what());
    } catch (const TimeBudgetExceeded& e) {
        r.status = SweepStatus::skipped;
        problems.push_back(e.what());
    }
    for (std::size_t i = 0; i < problems.size(); ++i) {
        r.note += (i ? "; " : "") + problems[i];
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

SweepSummary sweep(std::istream& corpus, const SweepConfig& config,
                   const std::function<void(const SweepRecord&)>& emit) {
    SweepSummary summary;
    std::vector<std::pair<BaseGraph, std::string>> graphs;
    std::string line;
    for (std::size_t number = 1; std::getline(corpus, line); ++number) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            graphs.emplace_back(parse_graph6(line), line);
        } catch (const Error& e) {
            summary.issues.push_back({number, e.what()});
        } catch (const std::invalid_argument& e) {
            summary.issues.push_back({number, e.what()});
        }
    }
    auto ts = config.t_values;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    const auto tasks = graphs.size() * ts.size();
    std::vector<std::optional<SweepRecord>> results(tasks);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task; (task = next.fetch_add(1)) < tasks;) {
            const auto& [g, text] = graphs[task / ts.size()];
            const int t = ts[task % ts.size()];
            SweepRecord r;
            try {
                r = sweep_one(g, text, t, config);
            } catch (const std::exception& e) {
                r.graph6 = text;
                r.n = g.order();
                r.edge_count = g.edge_count();
                r.t = t;
                r.status = SweepStatus::bug;
                r.note = e.what();
            }
            std::lock_guard lock(mutex);
            results[task] = std::move(r);
            ready.notify_all();
        }
    };
    const auto jobs = std::max<std::size_t>(1, std::min<std::size_t>(config.jobs, tasks));
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < jobs; ++i) {
        pool.emplace_back(worker);
    }
    for (std::size_t task = 0; task < tasks; ++task) {
        SweepRecord r;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[task].has_value(); });
            r = std::move(*results[task]);
            results[task].reset();
        }
        ++summary.records;
        summary.counterexamples += r.counterexample ? 1 : 0;
        summary.bugs += r.status == SweepStatus::bug ? 1 : 0;
        summary.skipped += r.status == SweepStatus::skipped ? 1 : 0;
        emit(r);
    }
    return summary;
}

std::string sweep_csv_header() {
    return "graph6,n,edges,chi_base,t,order,size,chi_gasket,omega_base,omega_gasket,counterexample,elapsed_ms,status";
}

std::string to_csv(const SweepRecord& r) {
    std::ostringstream out;
    out << r.graph6 << ',' << r.n << ',' << r.edge_count << ',' << r.chi_base << ',' << r.t << ',' << r.gasket_order
        << ',' << r.gasket_size << ',' << r.chi_gasket << ',' << r.omega_base << ',' << r.omega_gasket << ','
        << (r.counterexample ? 1 : 0) << ',' << r.elapsed_ms << ',' << to_string(r.status);
    return out.str();
}

std::string to_jsonl(const SweepRecord& r) {
    nlohmann::ordered_json doc;
    doc["graph6"] = r.graph6;
    doc["n"] = r.n;
    doc["edges"] = r.edge_count;
    doc["chi_base"] = r.chi_base;
    doc["t"] = r.t;
    doc["order"] = r.gasket_order;
    doc["size"] = r.gasket_size;
    doc["chi_gasket"] = r.chi_gasket;
    doc["omega_base"] = r.omega_base;
    doc["omega_gasket"] = r.omega_gasket;
    doc["counterexample"] = r.counterexample;
    doc["elapsed_ms"] = r.elapsed_ms;
    doc["status"] = to_string(r.status);
    if (!r.note.empty()) {
        doc["note"] = r.note;
    }
    return doc.dump();
}

} // namespace gasketlab
