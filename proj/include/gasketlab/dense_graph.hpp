#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gasketlab {

// Undirected simple graph stored as one adjacency bitset row per vertex.
// This is the working representation for every exact solver, both for base
// graphs and for materialized gaskets of a few thousand vertices.
class DenseGraph {
public:
    DenseGraph() = default;
    explicit DenseGraph(std::size_t order)
        : order_(order), words_((order + 63) / 64), bits_(order * words_, 0) {}

    std::size_t order() const { return order_; }
    std::size_t words_per_row() const { return words_; }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v || adjacent(u, v)) {
            return;
        }
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        ++edges_;
    }

    bool adjacent(std::size_t u, std::size_t v) const {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    std::span<const std::uint64_t> row(std::size_t v) const {
        return {bits_.data() + v * words_, words_};
    }

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (auto w : row(v)) {
            d += static_cast<std::size_t>(std::popcount(w));
        }
        return d;
    }

    std::size_t edge_count() const { return edges_; }

    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        auto r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            }
        }
        return out;
    }

private:
    std::size_t order_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace gasketlab
