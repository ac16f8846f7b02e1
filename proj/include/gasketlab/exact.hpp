#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "gasketlab/dense_graph.hpp"

namespace gasketlab {

using Clock = std::chrono::steady_clock;

// Optional wall-clock limit for the exponential searches. Exceeding it throws
// TimeBudgetExceeded.
using Deadline = std::optional<Clock::time_point>;

namespace exact {

// Maximum clique size by branch and bound over bitset rows.
std::size_t clique_number(const DenseGraph& g, Deadline deadline = {});

// All maximal cliques with at least `min_size` vertices (Bron-Kerbosch with
// Tomita pivoting). Each clique is sorted ascending; the list is sorted.
std::vector<std::vector<std::size_t>> maximal_cliques(const DenseGraph& g, std::size_t min_size);

// Some proper k-coloring, found by DSATUR-ordered backtracking, or nullopt
// when none exists. Deterministic.
std::optional<std::vector<int>> find_k_coloring(const DenseGraph& g, int k, Deadline deadline = {});

// The lexicographically smallest proper k-coloring under vertex order 0..n-1
// and color order 0..k-1.
std::optional<std::vector<int>> lex_first_coloring(const DenseGraph& g, int k);

// Greedy DSATUR coloring; colors are 0..(used-1).
std::vector<int> dsatur_greedy(const DenseGraph& g);

// Exact chromatic number: clique lower bound, DSATUR upper bound, then one
// k-colorability decision per k in between.
int chromatic_number(const DenseGraph& g, Deadline deadline = {});

// A proper coloring with exactly chromatic_number(g) colors.
std::vector<int> minimum_coloring(const DenseGraph& g, Deadline deadline = {});

bool has_triangle(const DenseGraph& g);

std::size_t component_count(const DenseGraph& g);

int colors_used(const std::vector<int>& coloring);

} // namespace exact
} // namespace gasketlab
