#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gasketlab/base_graph.hpp"
#include "gasketlab/dense_graph.hpp"
#include "gasketlab/labeling.hpp"

namespace gasketlab {

enum class GraphKind { sierpinski, gasket };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

using WordEdge = std::pair<std::uint64_t, std::uint64_t>;

// Explicit S(G,t) or S[G,t]. Vertices are numbered in representative-word
// order, so vertex ids sort the same way labels do. Immutable once built.
class MaterializedGraph {
public:
    GraphKind kind() const { return kind_; }
    const BaseGraph& base() const { return base_; }
    int depth() const { return depth_; }

    std::size_t order() const { return words_.size(); }
    std::size_t size() const { return targets_.size() / 2; }

    VertexLabel label(std::size_t v) const;
    std::optional<std::size_t> find(const VertexLabel& label) const;

    std::span<const std::uint32_t> neighbors(std::size_t v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    bool adjacent(std::size_t u, std::size_t v) const;

    // (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    // Linking edges merged away by the quotient (0 for S(G,t)).
    std::size_t contracted_edges() const { return contracted_; }
    // Parallel edges that collapsed during the quotient; expected to be 0.
    std::size_t collapsed_parallel_edges() const { return collapsed_; }

    std::size_t component_count() const;
    DenseGraph to_dense() const;

private:
    friend MaterializedGraph build_sierpinski(const BaseGraph&, int, std::uint64_t);
    friend MaterializedGraph build_gasket(const BaseGraph&, int, std::uint64_t);
    friend MaterializedGraph import_json(std::string_view, const BaseGraph&);

    MaterializedGraph(GraphKind kind, const BaseGraph& base, int depth) : kind_(kind), base_(base), depth_(depth) {}

    void set_edges(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    GraphKind kind_;
    BaseGraph base_;
    int depth_;
    std::vector<std::uint64_t> words_; // representative word index per vertex, ascending
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
    std::size_t contracted_ = 0;
    std::size_t collapsed_ = 0;
};

// Adjacency of two words of S(G,t): for some position i the words agree
// before i, differ at i by an edge of G, and after i each word is constant
// and equal to the other word's letter at i.
bool sierpinski_adjacent(const BaseGraph& g, std::span<const Letter> u, std::span<const Letter> v);

// Edge list of S(G,t) over word indices, built recursively: n prefixed
// copies of S(G,t-1) plus one linking edge i·j^(t-1) -- j·i^(t-1) per edge ij.
std::vector<WordEdge> sierpinski_edges(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// The same edge set generated straight from the adjacency rule; used to
// cross-check the recursive construction.
std::vector<WordEdge> sierpinski_edges_by_rule(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

MaterializedGraph build_sierpinski(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// Quotient of S(G,t) by every linking edge, computed by mapping each word to
// its canonical label and merging words with equal labels.
MaterializedGraph build_gasket(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

struct CountCheck {
    std::string name;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;

    bool pass() const { return expected == actual; }
};

struct CountReport {
    std::vector<CountCheck> checks;

    bool all_pass() const;
    std::string summary() const;
};

// Recomputes order, size and component count (plus quotient bookkeeping for
// gaskets) and compares them with the closed forms.
CountReport verify_counts(const MaterializedGraph& m);

std::string export_dot(const MaterializedGraph& m);
std::string export_json(const MaterializedGraph& m);
MaterializedGraph import_json(std::string_view text, const BaseGraph& base);

} // namespace gasketlab
