#include "gasketlab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gasketlab/builder.hpp"

namespace gasketlab {
namespace {

Word concat(const Word& prefix, std::initializer_list<Letter> tail) {
    Word w = prefix;
    w.insert(w.end(), tail);
    return w;
}

Word repeated(Word w, Letter letter, int times) {
    w.insert(w.end(), static_cast<std::size_t>(times), letter);
    return w;
}

void sort_unique(std::vector<VertexLabel>& labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

} // namespace

Oracle::Oracle(BaseGraph base, int t) : base_(std::move(base)), t_(t) {
    if (t < 1) {
        throw std::invalid_argument("depth t must be at least 1, got " + std::to_string(t));
    }
}

std::vector<VertexLabel> Oracle::neighbors(const VertexLabel& v) const {
    validate(v);
    if (t_ == 1) {
        std::vector<VertexLabel> out;
        for (auto l : base_.neighbors(v.letters()[0])) {
            out.push_back(VertexLabel::plain({static_cast<Letter>(l)}));
        }
        return out;
    }
    return t_ == 2 ? neighbors_depth2(v) : neighbors_deep(v);
}

std::vector<VertexLabel> Oracle::neighbors_depth2(const VertexLabel& v) const {
    const auto& g = base_;
    std::vector<VertexLabel> out;
    const Word none;
    // Vertices of the copy of G indexed by `first` that hang off `last`.
    auto from_copy = [&](Letter first, Letter last) {
        for (auto l : g.neighbors(last)) {
            const auto letter = static_cast<Letter>(l);
            if (!g.adjacent(first, l)) {
                out.push_back(canonicalize(concat(none, {first, letter}), g));
            } else {
                out.push_back(VertexLabel::contracted(none, first, letter, 2));
            }
        }
    };
    if (!v.is_contracted()) {
        from_copy(v.letters()[0], v.letters()[1]);
    } else {
        from_copy(v.low(), v.high());
        from_copy(v.high(), v.low());
    }
    sort_unique(out);
    return out;
}

std::vector<VertexLabel> Oracle::neighbors_deep(const VertexLabel& v) const {
    const auto& g = base_;
    const int t = t_;
    std::vector<VertexLabel> out;

    if (!v.is_contracted()) {
        // Plain y: y1..y(t-1)l for l adjacent to y_t, contracted at level 2
        // when l is also adjacent to y(t-1).
        const auto& y = v.letters();
        const Word head(y.begin(), y.end() - 2);
        const auto before = y[y.size() - 2];
        for (auto l : g.neighbors(y.back())) {
            const auto letter = static_cast<Letter>(l);
            if (!g.adjacent(letter, before)) {
                out.push_back(canonicalize(concat(head, {before, letter}), g));
            } else {
                out.push_back(VertexLabel::contracted(head, before, letter, 2));
            }
        }
        sort_unique(out);
        return out;
    }

    const auto& x = v.letters();
    const auto i = v.low();
    const auto j = v.high();
    const int level = v.level();

    if (level >= 3) {
        // {i,j} contracted at level >= 3 (no prefix, or prefix x): every
        // neighbor is a level-2 contraction x·i·j..j{j,l} or x·j·i..i{i,l}.
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
            const auto stem = repeated(concat(x, {a}), b, level - 3);
            for (auto l : g.neighbors(b)) {
                out.push_back(canonicalize(concat(stem, {b, static_cast<Letter>(l)}), g));
            }
        }
        sort_unique(out);
        return out;
    }

    // Level-2 contraction x{i,j} with |x| = t - 2 >= 1.
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        for (auto l : g.neighbors(b)) {
            const auto letter = static_cast<Letter>(l);
            if (!g.adjacent(a, letter)) {
                // May itself be an expanded form of a deeper contraction
                // (x·a·a when x ends in a run of a); canonicalize resolves it.
                out.push_back(canonicalize(concat(x, {a, letter}), g));
            } else {
                out.push_back(VertexLabel::contracted(x, a, letter, 2));
            }
        }
    }
    const auto ij = repeated({i}, j, t - 3);
    const auto ji = repeated({j}, i, t - 3);
    if (x == ij || x == ji) {
        out.push_back(VertexLabel::contracted({}, i, j, t));
    }
    sort_unique(out);
    return out;
}

bool Oracle::adjacent(const VertexLabel& u, const VertexLabel& v) const {
    validate(u);
    validate(v);
    if (u == v) {
        return false;
    }
    for (const auto& wu : expand(u)) {
        for (const auto& wv : expand(v)) {
            if (sierpinski_adjacent(base_, wu, wv)) {
                return true;
            }
        }
    }
    return false;
}

bool step2_contracted_adjacent(const BaseGraph& g, std::pair<Vertex, Vertex> first, std::pair<Vertex, Vertex> second) {
    for (auto [a, b] : {first, second}) {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b)) {
            throw std::invalid_argument("pair {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                        "} is not an edge of the base graph");
        }
    }
    std::vector<Vertex> span{first.first, first.second, second.first, second.second};
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    if (span.size() != 3) {
        return false;
    }
    return g.adjacent(span[0], span[1]) && g.adjacent(span[1], span[2]) && g.adjacent(span[0], span[2]);
}

std::vector<VertexLabel> CachedOracle::neighbors(const VertexLabel& v) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = index_.find(v); it != index_.end()) {
            recent_.splice(recent_.begin(), recent_, it->second);
            ++hits_;
            return it->second->second;
        }
        ++misses_;
    }
    auto result = oracle_.neighbors(v);
    std::lock_guard lock(mutex_);
    if (capacity_ == 0 || index_.contains(v)) {
        return result;
    }
    recent_.emplace_front(v, result);
    index_.emplace(v, recent_.begin());
    if (recent_.size() > capacity_) {
        index_.erase(recent_.back().first);
        recent_.pop_back();
    }
    return result;
}

} // namespace gasketlab
