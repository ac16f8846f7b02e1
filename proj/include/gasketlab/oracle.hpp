#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gasketlab/base_graph.hpp"
#include "gasketlab/labeling.hpp"

namespace gasketlab {

// Answers adjacency questions on S[G,t] straight from vertex labels, without
// materializing the graph. Immutable; every query is pure.
class Oracle {
public:
    Oracle(BaseGraph base, int t);

    const BaseGraph& base() const { return base_; }
    int depth() const { return t_; }

    // Throws std::invalid_argument for labels that are not vertices of S[G,t].
    void validate(const VertexLabel& v) const { validate_label(v, base_, t_); }

    // Sorted, duplicate-free neighbor labels of v.
    std::vector<VertexLabel> neighbors(const VertexLabel& v) const;

    // True iff some expanded word of u is adjacent in S(G,t) to some
    // expanded word of v, and u != v. Checked against the word rule, not
    // the neighbor formulas.
    bool adjacent(const VertexLabel& u, const VertexLabel& v) const;

    std::size_t degree(const VertexLabel& v) const { return neighbors(v).size(); }

private:
    std::vector<VertexLabel> neighbors_depth2(const VertexLabel& v) const;
    std::vector<VertexLabel> neighbors_deep(const VertexLabel& v) const;

    BaseGraph base_;
    int t_;
};

// Two level-2 contractions {i,j} and {l,k} inside one copy of S[G,2] are
// adjacent iff the pairs share exactly one vertex and the three vertices
// they span form a triangle of g. Both pairs must be edges of g (0-based).
bool step2_contracted_adjacent(const BaseGraph& g, std::pair<Vertex, Vertex> first, std::pair<Vertex, Vertex> second);

// Bounded LRU memo in front of Oracle::neighbors for sweeps that revisit the
// same vertices. Thread-safe.
class CachedOracle {
public:
    CachedOracle(const Oracle& oracle, std::size_t capacity) : oracle_(oracle), capacity_(capacity) {}

    std::vector<VertexLabel> neighbors(const VertexLabel& v);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    using Entry = std::pair<VertexLabel, std::vector<VertexLabel>>;

    const Oracle& oracle_;
    std::size_t capacity_;
    std::list<Entry> recent_;
    std::unordered_map<VertexLabel, std::list<Entry>::iterator> index_;
    std::mutex mutex_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

} // namespace gasketlab
