#include "gasketlab/exact.hpp"

#include <algorithm>
#include <bit>

#include "gasketlab/disjoint_sets.hpp"
#include "gasketlab/error.hpp"

namespace gasketlab::exact {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t count(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

std::size_t first(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        if (b[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
        }
    }
    return b.size() * 64;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
void set(Bits& b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }

Bits intersect(const Bits& a, std::span<const std::uint64_t> row) {
    Bits out(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) {
        out[w] = a[w] & row[w];
    }
    return out;
}

Bits all_vertices(const DenseGraph& g) {
    Bits b(g.words_per_row(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        set(b, v);
    }
    return b;
}

class DeadlineProbe {
public:
    explicit DeadlineProbe(Deadline d) : deadline_(d) {}

    void tick() {
        if (deadline_ && (++nodes_ & 0xFFF) == 1 && Clock::now() > *deadline_) {
            throw TimeBudgetExceeded("exact search exceeded its time budget");
        }
    }

private:
    Deadline deadline_;
    std::size_t nodes_ = 0;
};

// Tomita-Seki MCQ: greedy color classes bound the clique still reachable.
class MaxClique {
public:
    MaxClique(const DenseGraph& g, Deadline d) : g_(g), probe_(d) {}

    std::size_t run() {
        if (g_.order() == 0) {
            return 0;
        }
        expand(0, all_vertices(g_));
        return best_;
    }

private:
    void expand(std::size_t size, Bits candidates) {
        probe_.tick();
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(candidates, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (size + bound[idx] <= best_) {
                return;
            }
            const auto v = order[idx];
            auto next = intersect(candidates, g_.row(v));
            if (any(next)) {
                expand(size + 1, std::move(next));
            } else {
                best_ = std::max(best_, size + 1);
            }
            reset(candidates, v);
        }
    }

    void color_sort(const Bits& candidates, std::vector<std::size_t>& order,
                    std::vector<std::size_t>& bound) const {
        Bits uncolored = candidates;
        std::size_t color = 0;
        while (any(uncolored)) {
            ++color;
            Bits available = uncolored;
            while (any(available)) {
                const auto v = first(available);
                reset(available, v);
                reset(uncolored, v);
                const auto r = g_.row(v);
                for (std::size_t w = 0; w < available.size(); ++w) {
                    available[w] &= ~r[w];
                }
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const DenseGraph& g_;
    DeadlineProbe probe_;
    std::size_t best_ = 0;
};

class MaximalCliques {
public:
    MaximalCliques(const DenseGraph& g, std::size_t min_size) : g_(g), min_size_(min_size) {}

    std::vector<std::vector<std::size_t>> run() {
        std::vector<std::size_t> current;
        Bits none(g_.words_per_row(), 0);
        recurse(current, all_vertices(g_), none);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void recurse(std::vector<std::size_t>& current, Bits candidates, Bits excluded) {
        if (!any(candidates) && !any(excluded)) {
            if (current.size() >= min_size_) {
                auto clique = current;
                std::sort(clique.begin(), clique.end());
                found_.push_back(std::move(clique));
            }
            return;
        }
        if (current.size() + count(candidates) < min_size_) {
            return;
        }
        // Pivot maximizing |candidates ∩ N(pivot)|.
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        for (const Bits* pool : {&candidates, &excluded}) {
            for (auto u : bits_of(*pool)) {
                const auto c = count(intersect(candidates, g_.row(u)));
                if (!have_pivot || c > best) {
                    pivot = u;
                    best = c;
                    have_pivot = true;
                }
            }
        }
        Bits branch = candidates;
        const auto pr = g_.row(pivot);
        for (std::size_t w = 0; w < branch.size(); ++w) {
            branch[w] &= ~pr[w];
        }
        for (auto v : bits_of(branch)) {
            current.push_back(v);
            recurse(current, intersect(candidates, g_.row(v)), intersect(excluded, g_.row(v)));
            current.pop_back();
            reset(candidates, v);
            set(excluded, v);
        }
    }

    static std::vector<std::size_t> bits_of(const Bits& b) {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < b.size(); ++w) {
            for (auto bits = b[w]; bits != 0; bits &= bits - 1) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            }
        }
        return out;
    }

    const DenseGraph& g_;
    std::size_t min_size_;
    std::vector<std::vector<std::size_t>> found_;
};

// Shared bookkeeping for the backtracking colorers: how many colored
// neighbors of each vertex carry each color.
class ColorState {
public:
    ColorState(const DenseGraph& g, int k)
        : k_(static_cast<std::size_t>(k)), color_(g.order(), -1),
          blocked_(g.order() * k_, 0), saturation_(g.order(), 0) {
        adjacency_.reserve(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) {
            adjacency_.push_back(g.neighbors(v));
        }
    }

    bool allowed(std::size_t v, int c) const { return blocked_[v * k_ + static_cast<std::size_t>(c)] == 0; }
    int color(std::size_t v) const { return color_[v]; }
    std::size_t saturation(std::size_t v) const { return saturation_[v]; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

    // Returns false if some uncolored neighbor is left with no color.
    bool assign(std::size_t v, int c) {
        color_[v] = c;
        bool ok = true;
        for (auto u : adjacency_[v]) {
            auto& b = blocked_[u * k_ + static_cast<std::size_t>(c)];
            if (b++ == 0) {
                ++saturation_[u];
                if (color_[u] < 0 && saturation_[u] == k_) {
                    ok = false;
                }
            }
        }
        return ok;
    }

    void unassign(std::size_t v) {
        const auto c = static_cast<std::size_t>(color_[v]);
        color_[v] = -1;
        for (auto u : adjacency_[v]) {
            if (--blocked_[u * k_ + c] == 0) {
                --saturation_[u];
            }
        }
    }

    std::vector<int> colors() const { return color_; }

private:
    std::size_t k_;
    std::vector<int> color_;
    std::vector<std::uint32_t> blocked_;
    std::vector<std::size_t> saturation_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

class DsaturSearch {
public:
    DsaturSearch(const DenseGraph& g, int k, Deadline d) : g_(g), k_(k), state_(g, k), probe_(d) {}

    std::optional<std::vector<int>> run() {
        if (solve(0, -1)) {
            return state_.colors();
        }
        return std::nullopt;
    }

private:
    bool solve(std::size_t colored, int max_used) {
        if (colored == g_.order()) {
            return true;
        }
        probe_.tick();
        const auto v = select();
        if (state_.saturation(v) >= static_cast<std::size_t>(k_)) {
            return false;
        }
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!state_.allowed(v, c)) {
                continue;
            }
            const bool ok = state_.assign(v, c);
            if (ok && solve(colored + 1, std::max(max_used, c))) {
                return true;
            }
            state_.unassign(v);
        }
        return false;
    }

    std::size_t select() const {
        std::size_t best = g_.order();
        for (std::size_t v = 0; v < g_.order(); ++v) {
            if (state_.color(v) >= 0) {
                continue;
            }
            if (best == g_.order() || state_.saturation(v) > state_.saturation(best) ||
                (state_.saturation(v) == state_.saturation(best) &&
                 state_.neighbors(v).size() > state_.neighbors(best).size())) {
                best = v;
            }
        }
        return best;
    }

    const DenseGraph& g_;
    int k_;
    ColorState state_;
    DeadlineProbe probe_;
};

class LexFirstSearch {
public:
    LexFirstSearch(const DenseGraph& g, int k) : g_(g), k_(k), state_(g, k) {}

    std::optional<std::vector<int>> run() {
        if (solve(0, -1)) {
            return state_.colors();
        }
        return std::nullopt;
    }

private:
    // Restricting to max_used + 1 never discards the lexicographically first
    // solution: swapping an out-of-order color with its predecessor would
    // give a smaller one.
    bool solve(std::size_t v, int max_used) {
        if (v == g_.order()) {
            return true;
        }
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!state_.allowed(v, c)) {
                continue;
            }
            const bool ok = state_.assign(v, c);
            if (ok && solve(v + 1, std::max(max_used, c))) {
                return true;
            }
            state_.unassign(v);
        }
        return false;
    }

    const DenseGraph& g_;
    int k_;
    ColorState state_;
};

} // namespace

std::size_t clique_number(const DenseGraph& g, Deadline deadline) {
    return MaxClique(g, deadline).run();
}

std::vector<std::vector<std::size_t>> maximal_cliques(const DenseGraph& g, std::size_t min_size) {
    return MaximalCliques(g, min_size).run();
}

std::optional<std::vector<int>> find_k_coloring(const DenseGraph& g, int k, Deadline deadline) {
    if (k < 1) {
        return g.order() == 0 ? std::optional<std::vector<int>>{std::vector<int>{}} : std::nullopt;
    }
    return DsaturSearch(g, k, deadline).run();
}

std::optional<std::vector<int>> lex_first_coloring(const DenseGraph& g, int k) {
    if (k < 1) {
        return g.order() == 0 ? std::optional<std::vector<int>>{std::vector<int>{}} : std::nullopt;
    }
    return LexFirstSearch(g, k).run();
}

std::vector<int> dsatur_greedy(const DenseGraph& g) {
    const auto n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (color[u] >= 0) {
                continue;
            }
            if (v == n || saturation[u] > saturation[v] ||
                (saturation[u] == saturation[v] && g.degree(u) > g.degree(v))) {
                v = u;
            }
        }
        int c = 0;
        while (static_cast<std::size_t>(c) < seen[v].size() && seen[v][static_cast<std::size_t>(c)]) {
            ++c;
        }
        color[v] = c;
        for (auto u : g.neighbors(v)) {
            auto& s = seen[u];
            if (s.size() <= static_cast<std::size_t>(c)) {
                s.resize(static_cast<std::size_t>(c) + 1, false);
            }
            if (!s[static_cast<std::size_t>(c)]) {
                s[static_cast<std::size_t>(c)] = true;
                ++saturation[u];
            }
        }
    }
    return color;
}

int chromatic_number(const DenseGraph& g, Deadline deadline) {
    if (g.order() == 0) {
        return 0;
    }
    if (g.edge_count() == 0) {
        return 1;
    }
    const auto lower = static_cast<int>(clique_number(g, deadline));
    const auto upper = colors_used(dsatur_greedy(g));
    for (int k = lower; k < upper; ++k) {
        if (find_k_coloring(g, k, deadline)) {
            return k;
        }
    }
    return upper;
}

std::vector<int> minimum_coloring(const DenseGraph& g, Deadline deadline) {
    if (g.edge_count() == 0) {
        return std::vector<int>(g.order(), 0);
    }
    const auto lower = static_cast<int>(clique_number(g, deadline));
    auto greedy = dsatur_greedy(g);
    const auto upper = colors_used(greedy);
    for (int k = lower; k < upper; ++k) {
        if (auto found = find_k_coloring(g, k, deadline)) {
            return *found;
        }
    }
    return greedy;
}

bool has_triangle(const DenseGraph& g) {
    for (std::size_t u = 0; u < g.order(); ++u) {
        const auto ru = g.row(u);
        for (auto v : g.neighbors(u)) {
            if (v < u) {
                continue;
            }
            const auto rv = g.row(v);
            for (std::size_t w = 0; w < ru.size(); ++w) {
                if ((ru[w] & rv[w]) != 0) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::size_t component_count(const DenseGraph& g) {
    DisjointSets sets(g.order());
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (auto v : g.neighbors(u)) {
            sets.unite(u, v);
        }
    }
    return sets.set_count();
}

int colors_used(const std::vector<int>& coloring) {
    std::vector<int> sorted = coloring;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

} // namespace gasketlab::exact
