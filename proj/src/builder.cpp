#include "gasketlab/builder.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gasketlab/disjoint_sets.hpp"
#include "gasketlab/error.hpp"

namespace gasketlab {

std::string_view to_string(GraphKind kind) { return kind == GraphKind::gasket ? "gasket" : "sierpinski"; }

GraphKind parse_graph_kind(std::string_view text) {
    if (text == "gasket") {
        return GraphKind::gasket;
    }
    if (text == "sierpinski") {
        return GraphKind::sierpinski;
    }
    throw ParseError("unknown graph kind '" + std::string(text) + "' (expected sierpinski or gasket)");
}

VertexLabel MaterializedGraph::label(std::size_t v) const {
    const auto w = word_at(words_[v], base_.order(), depth_);
    return kind_ == GraphKind::gasket ? canonicalize(w, base_) : VertexLabel::plain(w);
}

std::optional<std::size_t> MaterializedGraph::find(const VertexLabel& label) const {
    if (label.depth() != static_cast<std::size_t>(depth_)) {
        return std::nullopt;
    }
    const auto rep = label.representative();
    if (std::any_of(rep.begin(), rep.end(), [&](Letter l) { return l >= base_.order(); })) {
        return std::nullopt;
    }
    const auto index = word_index(rep, base_.order());
    const auto it = std::lower_bound(words_.begin(), words_.end(), index);
    if (it == words_.end() || *it != index) {
        return std::nullopt;
    }
    const auto v = static_cast<std::size_t>(it - words_.begin());
    if (this->label(v) != label) {
        return std::nullopt;
    }
    return v;
}

bool MaterializedGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
}

std::vector<std::pair<std::size_t, std::size_t>> MaterializedGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size());
    for (std::size_t u = 0; u < order(); ++u) {
        for (auto v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::size_t MaterializedGraph::component_count() const {
    DisjointSets sets(order());
    for (auto [u, v] : edges()) {
        sets.unite(u, v);
    }
    return sets.set_count();
}

DenseGraph MaterializedGraph::to_dense() const {
    DenseGraph d(order());
    for (auto [u, v] : edges()) {
        d.add_edge(u, v);
    }
    return d;
}

void MaterializedGraph::set_edges(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::sort(edges.begin(), edges.end());
    const auto before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    collapsed_ = before - edges.size();

    offsets_.assign(order() + 1, 0);
    for (auto [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t v = 0; v < order(); ++v) {
        offsets_[v + 1] += offsets_[v];
    }
    targets_.assign(offsets_.back(), 0);
    auto fill = offsets_;
    for (auto [u, v] : edges) {
        targets_[fill[u]++] = v;
        targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < order(); ++v) {
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool sierpinski_adjacent(const BaseGraph& g, std::span<const Letter> u, std::span<const Letter> v) {
    if (u.size() != v.size()) {
        return false;
    }
    const auto t = u.size();
    std::size_t i = 0;
    while (i < t && u[i] == v[i]) {
        ++i;
    }
    if (i == t || !g.adjacent(u[i], v[i])) {
        return false;
    }
    for (auto j = i + 1; j < t; ++j) {
        if (u[j] != v[i] || v[j] != u[i]) {
            return false;
        }
    }
    return true;
}

std::vector<WordEdge> sierpinski_edges(const BaseGraph& g, int t, std::uint64_t cap) {
    word_count_within(g.order(), t, cap);
    const auto n = static_cast<std::uint64_t>(g.order());
    const auto base_edges = g.edges();
    std::vector<WordEdge> edges;
    for (auto [a, b] : base_edges) {
        edges.emplace_back(a, b);
    }
    std::uint64_t block = 1;  // n^(s-1)
    std::uint64_t repunit = 1; // index of 1·1·...·1 (s-1 letters) in base n
    for (int s = 2; s <= t; ++s) {
        block *= n;
        std::vector<WordEdge> next;
        next.reserve(edges.size() * n + base_edges.size());
        for (std::uint64_t i = 0; i < n; ++i) {
            for (auto [a, b] : edges) {
                next.emplace_back(i * block + a, i * block + b);
            }
        }
        for (auto [i, j] : base_edges) {
            const auto ui = static_cast<std::uint64_t>(i);
            const auto uj = static_cast<std::uint64_t>(j);
            next.emplace_back(ui * block + uj * repunit, uj * block + ui * repunit);
        }
        edges = std::move(next);
        repunit = repunit * n + 1;
    }
    return edges;
}

std::vector<WordEdge> sierpinski_edges_by_rule(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto total = word_count_within(g.order(), t, cap);
    std::vector<WordEdge> edges;
    for (std::uint64_t a = 0; a < total; ++a) {
        const auto u = word_at(a, g.order(), t);
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (auto l : g.neighbors(u[i])) {
                auto v = u;
                v[i] = static_cast<Letter>(l);
                for (auto j = i + 1; j < v.size(); ++j) {
                    v[j] = u[i];
                }
                if (!sierpinski_adjacent(g, u, v)) {
                    continue;
                }
                const auto b = word_index(v, g.order());
                if (a < b) {
                    edges.emplace_back(a, b);
                }
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

MaterializedGraph build_sierpinski(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto total = word_count_within(g.order(), t, cap);
    if (total > std::numeric_limits<std::uint32_t>::max()) {
        throw CapExceeded("graph construction is limited to 2^32 words");
    }
    MaterializedGraph m(GraphKind::sierpinski, g, t);
    m.words_.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        m.words_[i] = i;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto [a, b] : sierpinski_edges(g, t, cap)) {
        if (!sierpinski_adjacent(g, word_at(a, g.order(), t), word_at(b, g.order(), t))) {
            throw std::logic_error("recursive construction produced a pair violating the adjacency rule");
        }
        edges.emplace_back(static_cast<std::uint32_t>(std::min(a, b)), static_cast<std::uint32_t>(std::max(a, b)));
    }
    m.set_edges(std::move(edges));
    return m;
}

namespace {

// Index of the representative of the class containing `w` (see canonicalize).
std::uint64_t representative_index(Word& w, const BaseGraph& g, std::uint64_t index) {
    const auto t = w.size();
    for (std::size_t p = t - 1; p-- > 0;) {
        if (w[p] == w[p + 1]) {
            continue;
        }
        if (!g.adjacent(w[p], w[p + 1]) || w[p] < w[p + 1]) {
            return index;
        }
        std::swap(w[p], w[p + 1]);
        for (auto j = p + 2; j < t; ++j) {
            w[j] = w[p + 1];
        }
        const auto rep = word_index(w, g.order());
        std::swap(w[p], w[p + 1]);
        for (auto j = p + 2; j < t; ++j) {
            w[j] = w[p + 1];
        }
        return rep;
    }
    return index;
}

} // namespace

MaterializedGraph build_gasket(const BaseGraph& g, int t, std::uint64_t cap) {
    const auto total = word_count_within(g.order(), t, cap);
    if (total > std::numeric_limits<std::uint32_t>::max()) {
        throw CapExceeded("gasket construction is limited to 2^32 words");
    }
    MaterializedGraph m(GraphKind::gasket, g, t);
    std::vector<std::uint32_t> id_of(total);
    Word w(static_cast<std::size_t>(t), 0);
    for (std::uint64_t index = 0; index < total; ++index) {
        const auto rep = representative_index(w, g, index);
        if (rep == index) {
            id_of[index] = static_cast<std::uint32_t>(m.words_.size());
            m.words_.push_back(index);
        } else {
            // The representative is the smaller word of the pair.
            id_of[index] = id_of[rep];
        }
        for (auto i = w.size(); i-- > 0;) {
            if (++w[i] < g.order()) {
                break;
            }
            w[i] = 0;
        }
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto [a, b] : sierpinski_edges(g, t, cap)) {
        const auto u = id_of[a];
        const auto v = id_of[b];
        if (u == v) {
            ++m.contracted_;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    m.set_edges(std::move(edges));
    return m;
}

bool CountReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CountCheck& c) { return c.pass(); });
}

std::string CountReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass() ? "pass " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual
            << '\n';
    }
    return out.str();
}

CountReport verify_counts(const MaterializedGraph& m) {
    const auto& g = m.base();
    const int t = m.depth();
    DisjointSets base_sets(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        base_sets.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    const auto cc = base_sets.set_count();

    CountReport report;
    if (m.kind() == GraphKind::gasket) {
        report.checks.push_back({"vertices", gasket_order(g, t), m.order()});
        report.checks.push_back({"edges", gasket_size(g, t), m.size()});
        report.checks.push_back(
            {"contracted linking edges", sierpinski_size(g, t) - gasket_size(g, t), m.contracted_edges()});
        report.checks.push_back({"collapsed parallel edges", 0, m.collapsed_parallel_edges()});
    } else {
        report.checks.push_back({"vertices", sierpinski_order(g, t), m.order()});
        report.checks.push_back({"edges", sierpinski_size(g, t), m.size()});
    }
    report.checks.push_back({"components", component_formula(g, cc, t), m.component_count()});
    return report;
}

std::string export_dot(const MaterializedGraph& m) {
    std::ostringstream out;
    out << "graph " << to_string(m.kind()) << " {\n";
    std::vector<std::string> names;
    names.reserve(m.order());
    for (std::size_t v = 0; v < m.order(); ++v) {
        names.push_back('"' + format_label(m.label(v)) + '"');
        out << "  " << names.back() << ";\n";
    }
    for (auto [u, v] : m.edges()) {
        out << "  " << names[u] << " -- " << names[v] << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const MaterializedGraph& m) {
    nlohmann::json doc;
    doc["kind"] = to_string(m.kind());
    doc["n"] = m.base().order();
    doc["t"] = m.depth();
    auto vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < m.order(); ++v) {
        vertices.push_back(format_label(m.label(v)));
    }
    auto edges = nlohmann::json::array();
    for (auto [u, v] : m.edges()) {
        edges.push_back({u, v});
    }
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump();
}

MaterializedGraph import_json(std::string_view text, const BaseGraph& base) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    try {
        const auto kind = parse_graph_kind(doc.at("kind").get<std::string>());
        const int n = doc.at("n").get<int>();
        const int t = doc.at("t").get<int>();
        if (n != base.order()) {
            throw ParseError("graph JSON: n=" + std::to_string(n) + " does not match the base graph order " +
                             std::to_string(base.order()));
        }
        MaterializedGraph m(kind, base, t);
        std::vector<VertexLabel> labels;
        for (const auto& s : doc.at("vertices")) {
            const auto text = s.get<std::string>();
            labels.push_back(kind == GraphKind::sierpinski ? VertexLabel::plain(parse_word(text, base, t))
                                                           : parse_label(text, base, t));
        }
        // Vertex ids follow representative order; remap file indices.
        std::vector<std::size_t> order(labels.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
        std::vector<std::uint32_t> id_of(labels.size());
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            id_of[order[rank]] = static_cast<std::uint32_t>(rank);
            m.words_.push_back(word_index(labels[order[rank]].representative(), n));
        }
        if (std::adjacent_find(m.words_.begin(), m.words_.end()) != m.words_.end()) {
            throw ParseError("graph JSON: duplicate vertex label");
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (const auto& e : doc.at("edges")) {
            const auto a = e.at(0).get<std::size_t>();
            const auto b = e.at(1).get<std::size_t>();
            if (a >= labels.size() || b >= labels.size() || a == b) {
                throw ParseError("graph JSON: bad edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
            }
            edges.emplace_back(std::min(id_of[a], id_of[b]), std::max(id_of[a], id_of[b]));
        }
        m.set_edges(std::move(edges));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

} // namespace gasketlab
