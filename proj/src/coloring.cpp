#include "gasketlab/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace gasketlab {

Coloring::Coloring(int palette, std::unordered_map<VertexLabel, int> colors)
    : palette_(palette), colors_(std::move(colors)) {
    if (palette_ < 1) {
        throw std::invalid_argument("palette size must be at least 1");
    }
    for (const auto& [label, c] : colors_) {
        if (c < 0 || c >= palette_) {
            throw std::invalid_argument("color " + std::to_string(c) + " of " + format_label(label) +
                                        " is outside 0.." + std::to_string(palette_ - 1));
        }
    }
}

int Coloring::color(const VertexLabel& v) const {
    const auto it = colors_.find(v);
    if (it == colors_.end()) {
        throw std::out_of_range("vertex " + format_label(v) + " is not colored");
    }
    return it->second;
}

int Coloring::colors_used() const {
    std::set<int> used;
    for (const auto& [label, c] : colors_) {
        used.insert(c);
    }
    return static_cast<int>(used.size());
}

std::string Coloring::to_json() const {
    std::map<VertexLabel, int> sorted(colors_.begin(), colors_.end());
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (const auto& [label, c] : sorted) {
        colors[format_label(label)] = c;
    }
    nlohmann::ordered_json doc;
    doc["k"] = palette_;
    doc["colors"] = std::move(colors);
    return doc.dump();
}

Coloring color_level2(const BaseGraph& g, std::span<const int> f, int k) {
    if (k < 1 || !is_proper_coloring(g, f) ||
        std::any_of(f.begin(), f.end(), [k](int c) { return c < 0 || c >= k; })) {
        throw std::invalid_argument("base coloring is not a proper " + std::to_string(k) + "-coloring");
    }
    std::unordered_map<VertexLabel, int> colors;
    for_each_label(g, 2, default_vertex_cap, [&](const VertexLabel& v) {
        const auto [x, y] = v.is_contracted() ? std::pair{v.low(), v.high()} : std::pair{v.letters()[0], v.letters()[1]};
        colors.emplace(v, (f[x] + f[y]) % k);
    });
    return Coloring(k, std::move(colors));
}

namespace {

Coloring base_level(const BaseGraph& g, std::span<const int> f, int k) {
    std::unordered_map<VertexLabel, int> colors;
    for (Vertex v = 0; v < g.order(); ++v) {
        colors.emplace(VertexLabel::plain({static_cast<Letter>(v)}), f[static_cast<std::size_t>(v)]);
    }
    return Coloring(k, std::move(colors));
}

bool is_top_contraction(const VertexLabel& v, int t) { return v.is_contracted() && v.level() == t; }

// Colors S[G,t] from a coloring of S[G,t-1]: each copy S_i takes the
// previous coloring through prefix stripping; the vertices {i,j}_t shared
// by two copies get `top_color`. `check_shared` sees both per-copy values a
// shared vertex would otherwise have inherited.
template <typename CheckShared>
Coloring lift(const BaseGraph& g, int t, std::uint64_t cap, const Coloring& previous, int palette, int top_color,
              CheckShared check_shared) {
    std::unordered_map<VertexLabel, int> colors;
    for_each_label(g, t, cap, [&](const VertexLabel& v) {
        if (is_top_contraction(v, t)) {
            const auto from_low = previous.color(*strip_first_letter(v, v.low(), g));
            const auto from_high = previous.color(*strip_first_letter(v, v.high(), g));
            check_shared(v, from_low, from_high);
            colors.emplace(v, top_color);
            return;
        }
        const auto first = v.representative().front();
        colors.emplace(v, previous.color(*strip_first_letter(v, first, g)));
    });
    return Coloring(palette, std::move(colors));
}

} // namespace

std::vector<int> recursive_base_coloring(const BaseGraph& g) {
    const int k = chromatic_number_exact(g);
    return *find_coloring(g, k);
}

std::vector<int> bipartite_base_coloring(const BaseGraph& g) {
    auto f = bipartition(g);
    if (!f || g.edge_count() == 0) {
        throw std::invalid_argument("bipartite coloring needs a bipartite base graph with at least one edge");
    }
    return *f;
}

Coloring color_recursive(const BaseGraph& g, int t, std::uint64_t cap) {
    word_count_within(g.order(), t, cap);
    const auto f = recursive_base_coloring(g);
    const int k = chromatic_number_exact(g);
    if (t == 1) {
        return base_level(g, f, k);
    }
    Coloring current = color_level2(g, f, k);
    for (int s = 3; s <= t; ++s) {
        current = lift(g, s, cap, current, k + 1, k, [](const VertexLabel&, int, int) {});
    }
    if (t >= 3) {
        for (const auto& [v, c] : current.assignment()) {
            if (c == k && !(v.is_contracted() && v.level() >= 3)) {
                throw std::logic_error("extra color reached " + format_label(v) + ", which is not a deep contraction");
            }
        }
    }
    return current;
}

Coloring color_bipartite(const BaseGraph& g, int t, std::uint64_t cap) {
    word_count_within(g.order(), t, cap);
    const auto f = bipartite_base_coloring(g);
    if (t == 1) {
        return base_level(g, f, 2);
    }
    Coloring current = color_level2(g, f, 2);
    for (int s = 3; s <= t; ++s) {
        current = lift(g, s, cap, current, 2, 0, [](const VertexLabel& v, int from_low, int from_high) {
            if (from_low != 0 || from_high != 0) {
                throw std::logic_error("expanded forms of " + format_label(v) + " disagree in color");
            }
        });
    }
    for (const auto& [v, c] : current.assignment()) {
        const bool level2 = v.is_contracted() && v.level() == 2;
        const auto rep = v.representative();
        const bool extreme_form = !v.is_contracted() && rep[rep.size() - 1] == rep[rep.size() - 2];
        if ((level2 && c != 1) || (extreme_form && c != 0)) {
            throw std::logic_error("bipartite coloring broke its invariant at " + format_label(v));
        }
    }
    return current;
}

Coloring color_exact(const MaterializedGraph& m, Deadline deadline) {
    const auto colors = exact::minimum_coloring(m.to_dense(), deadline);
    std::unordered_map<VertexLabel, int> assignment;
    for (std::size_t v = 0; v < m.order(); ++v) {
        assignment.emplace(m.label(v), colors[v]);
    }
    return Coloring(std::max(1, exact::colors_used(colors)), std::move(assignment));
}

int recursive_color_of(const VertexLabel& v, std::span<const int> f, int k) {
    if (v.depth() == 1) {
        return f[v.letters()[0]];
    }
    if (v.is_contracted()) {
        return v.level() >= 3 ? k : (f[v.low()] + f[v.high()]) % k;
    }
    const auto& w = v.letters();
    return (f[w[w.size() - 2]] + f[w[w.size() - 1]]) % k;
}

int bipartite_color_of(const VertexLabel& v, std::span<const int> f) {
    if (v.depth() == 1) {
        return f[v.letters()[0]];
    }
    if (v.is_contracted()) {
        return v.level() >= 3 ? 0 : 1;
    }
    const auto& w = v.letters();
    return (f[w[w.size() - 2]] + f[w[w.size() - 1]]) % 2;
}

namespace {

void record(ProperReport& report, const VertexLabel& u, const VertexLabel& v) {
    report.proper = false;
    if (report.violations.size() < max_reported_violations) {
        report.violations.emplace_back(u, v);
    }
    ++report.violation_count;
}

} // namespace

ProperReport verify_proper(const MaterializedGraph& m, const Coloring& c) {
    std::vector<int> colors(m.order());
    std::vector<VertexLabel> labels(m.order());
    for (std::size_t v = 0; v < m.order(); ++v) {
        labels[v] = m.label(v);
        if (!c.contains(labels[v])) {
            throw std::invalid_argument("coloring is partial: " + format_label(labels[v]) + " has no color");
        }
        colors[v] = c.color(labels[v]);
    }
    ProperReport report;
    for (auto [u, v] : m.edges()) {
        if (colors[u] == colors[v]) {
            record(report, labels[u], labels[v]);
        }
    }
    report.colors_used = exact::colors_used(colors);
    return report;
}

ProperReport verify_proper(const Oracle& oracle, const Coloring& c, std::uint64_t cap) {
    for_each_label(oracle.base(), oracle.depth(), cap, [&](const VertexLabel& v) {
        if (!c.contains(v)) {
            throw std::invalid_argument("coloring is partial: " + format_label(v) + " has no color");
        }
    });
    return verify_proper(oracle, [&](const VertexLabel& v) { return c.color(v); }, cap);
}

ProperReport verify_proper(const Oracle& oracle, const std::function<int(const VertexLabel&)>& color,
                           std::uint64_t cap) {
    ProperReport report;
    std::set<int> used;
    for_each_label(oracle.base(), oracle.depth(), cap, [&](const VertexLabel& v) {
        const int cv = color(v);
        used.insert(cv);
        for (const auto& u : oracle.neighbors(v)) {
            if (v < u && color(u) == cv) {
                record(report, v, u);
            }
        }
    });
    report.colors_used = static_cast<int>(used.size());
    return report;
}

} // namespace gasketlab
