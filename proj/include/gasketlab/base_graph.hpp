#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gasketlab/dense_graph.hpp"

namespace gasketlab {

// 0-based vertex of a base graph. Everything user-facing is 1-based.
using Vertex = int;

// Simple undirected graph on at most 64 vertices, adjacency as bit masks.
// Immutable after construction.
class BaseGraph {
public:
    static constexpr int max_order = 64;

    // `edges` are 1-based pairs. Duplicates collapse; loops, out-of-range
    // vertices and n < 2 are rejected with std::invalid_argument.
    static BaseGraph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return ((adj_[static_cast<std::size_t>(u)] >> v) & 1U) != 0; }
    std::uint64_t neighbor_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    // 0-based (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    DenseGraph to_dense() const;

    bool operator==(const BaseGraph&) const = default;

private:
    BaseGraph() = default;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::array<std::uint64_t, max_order> adj_{};
};

struct GraphClass {
    std::size_t components = 0;
    bool triangle_free = false;
    bool acyclic = false;
    bool bipartite = false;
    int omega = 0;
    int chi = 0;
};

int clique_number_exact(const BaseGraph& g);
int chromatic_number_exact(const BaseGraph& g);

// Lexicographically smallest proper k-coloring (vertex order 1..n, colors
// 0..k-1), or nullopt when g is not k-colorable.
std::optional<std::vector<int>> find_coloring(const BaseGraph& g, int k);

// Proper 2-coloring by BFS (lowest vertex of each component gets 0), or
// nullopt when g has an odd cycle.
std::optional<std::vector<int>> bipartition(const BaseGraph& g);

bool is_proper_coloring(const BaseGraph& g, std::span<const int> colors);

GraphClass classify(const BaseGraph& g);

// --- textual formats -------------------------------------------------------

// Standard graph6 record (optional ">>graph6<<" header, trailing whitespace
// ignored). Encoding vertex 0 becomes vertex 1.
BaseGraph parse_graph6(std::string_view line);
std::string to_graph6(const BaseGraph& g);

// {"n": int, "edges": [[u, v], ...]} with 1-based vertices.
BaseGraph parse_edge_list_json(std::string_view text);
std::string to_edge_list_json(const BaseGraph& g);

// "1-2,2-3" shorthand. The order is max(n, largest vertex mentioned).
BaseGraph parse_edge_shorthand(std::string_view text, int n = 0);

} // namespace gasketlab
