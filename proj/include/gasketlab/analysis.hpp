#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gasketlab/base_graph.hpp"
#include "gasketlab/builder.hpp"
#include "gasketlab/exact.hpp"

namespace gasketlab {

// A proved statement failing is a bug; the chromatic equality failing only
// refutes the open conjecture and is reported as a finding.
enum class Verdict { pass, finding, bug };

std::string_view to_string(Verdict v);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;

    bool passed() const { return verdict == Verdict::pass; }
};

// omega(S[G,t]) == omega(G).
CheckResult check_clique_theorem(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// G triangle-free <=> S[G,t] triangle-free.
CheckResult check_triangle_preservation(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Every maximal clique of size >= 4 lies inside one nested copy of G: all
// its vertices share an expanded-form prefix of length t-1.
CheckResult check_clique_localization(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Order, size, components of S(G,t) and S[G,t] against the closed forms.
CheckResult check_counts(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// G acyclic <=> S[G,t] acyclic, and triangles(S[G,t]) >= triangles(G) n^(t-1).
CheckResult check_cycles(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// For t >= 3 the contractions {i,j}_t form an independent set.
CheckResult check_top_contractions_independent(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// For t >= 3 every neighbor of a contraction of level >= 3 is a level-2
// contraction.
CheckResult check_deep_contraction_neighbors(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// The copy on first letter i is S[G,t-1] under prefix stripping.
CheckResult check_copy_decomposition(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Implicit neighbor sets equal the materialized ones for every vertex.
CheckResult check_oracle_equivalence(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// The constructive colorings are proper with their promised palettes.
CheckResult check_colorings(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Exact chi(S[G,t]) against chi(G): pass on equality, finding on chi(G)+1,
// bug outside the sandwich.
CheckResult check_chromatic(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap, Deadline deadline = {});

// Suites: all, counts, clique, triangle, localization, cycles, structure,
// oracle, coloring, chromatic.
std::vector<CheckResult> run_suite(const BaseGraph& g, int t, std::string_view suite,
                                   std::uint64_t cap = default_vertex_cap, Deadline deadline = {});

std::vector<std::string> suite_names();

// --- conjecture sweep ----------------------------------------------------------

enum class SweepStatus { ok, finding, bug, skipped };

std::string_view to_string(SweepStatus s);

struct SweepRecord {
    std::string graph6;
    int n = 0;
    std::size_t edge_count = 0;
    int chi_base = 0;
    int t = 0;
    std::uint64_t gasket_order = 0;
    std::uint64_t gasket_size = 0;
    int chi_gasket = 0;
    int omega_base = 0;
    int omega_gasket = 0;
    std::int64_t elapsed_ms = 0;
    bool counterexample = false;
    SweepStatus status = SweepStatus::ok;
    std::string note;
};

struct SweepConfig {
    std::vector<int> t_values{3};
    std::uint64_t vertex_cap = default_vertex_cap;
    std::chrono::milliseconds time_budget{std::chrono::seconds(60)};
    unsigned jobs = 1;
};

struct SweepIssue {
    std::size_t line = 0;
    std::string message;
};

struct SweepSummary {
    std::size_t records = 0;
    std::size_t counterexamples = 0;
    std::size_t bugs = 0;
    std::size_t skipped = 0;
    std::vector<SweepIssue> issues;
};

// Exact chi(S[G,t]) decided as a single chi(G)-colorability question: chi(G)
// is a lower bound (G is a subgraph) and the recursive coloring gives
// chi(G)+1, which is verified whenever it is the answer.
SweepRecord sweep_one(const BaseGraph& g, std::string graph6, int t, const SweepConfig& config);

// Runs every (graph, t) pair of a graph6 corpus and emits records in input
// order x ascending t. Malformed lines become issues and are skipped.
SweepSummary sweep(std::istream& corpus, const SweepConfig& config,
                   const std::function<void(const SweepRecord&)>& emit);

std::string sweep_csv_header();
std::string to_csv(const SweepRecord& r);
std::string to_jsonl(const SweepRecord& r);

} // namespace gasketlab
