#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gasketlab/base_graph.hpp"
#include "gasketlab/builder.hpp"
#include "gasketlab/exact.hpp"
#include "gasketlab/labeling.hpp"
#include "gasketlab/oracle.hpp"

namespace gasketlab {

// Total map from gasket vertices to colors 0..palette-1.
class Coloring {
public:
    Coloring(int palette, std::unordered_map<VertexLabel, int> colors);

    int palette() const { return palette_; }
    std::size_t size() const { return colors_.size(); }
    bool contains(const VertexLabel& v) const { return colors_.contains(v); }
    // Throws std::out_of_range for uncolored vertices.
    int color(const VertexLabel& v) const;
    int colors_used() const;
    const std::unordered_map<VertexLabel, int>& assignment() const { return colors_; }

    // {"k": palette, "colors": {"<label>": color, ...}} with sorted labels.
    std::string to_json() const;

private:
    int palette_;
    std::unordered_map<VertexLabel, int> colors_;
};

// S[G,2] coloring xy -> f(x)+f(y) mod k, {x,y} -> f(x)+f(y) mod k.
// `f` must be a proper k-coloring of g (std::invalid_argument otherwise).
Coloring color_level2(const BaseGraph& g, std::span<const int> f, int k);

// At most chi(G)+1 colors: copies of S[G,t-1] colored identically, every
// contraction made at the top level gets the extra color chi(G).
Coloring color_recursive(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Proper 2-coloring of S[G,t] for bipartite g with at least one edge:
// level-2 contractions get 1, extreme-form vertices and deeper contractions 0.
Coloring color_bipartite(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// An optimal coloring found by the exact solver.
Coloring color_exact(const MaterializedGraph& m, Deadline deadline = {});

// Closed forms of the two recursive constructions, evaluated per label with
// no materialization. `f` is the base coloring the construction starts from.
int recursive_color_of(const VertexLabel& v, std::span<const int> f, int k);
int bipartite_color_of(const VertexLabel& v, std::span<const int> f);

// The base coloring each construction starts from.
std::vector<int> recursive_base_coloring(const BaseGraph& g);
std::vector<int> bipartite_base_coloring(const BaseGraph& g);

struct ProperReport {
    bool proper = true;
    int colors_used = 0;
    std::size_t violation_count = 0;
    // First 100 monochromatic edges.
    std::vector<std::pair<VertexLabel, VertexLabel>> violations;
};

inline constexpr std::size_t max_reported_violations = 100;

// Checks every edge of the materialized graph. Throws std::invalid_argument
// when some vertex is uncolored.
ProperReport verify_proper(const MaterializedGraph& m, const Coloring& c);

// Checks every vertex's oracle neighborhood, each edge counted once.
ProperReport verify_proper(const Oracle& oracle, const Coloring& c, std::uint64_t cap = default_vertex_cap);
ProperReport verify_proper(const Oracle& oracle, const std::function<int(const VertexLabel&)>& color,
                           std::uint64_t cap = default_vertex_cap);

} // namespace gasketlab
