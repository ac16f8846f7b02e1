#include "gasketlab/base_graph.hpp"

#include <bit>
#include <charconv>
#include <queue>
#include <stdexcept>

#include <json.hpp>

#include "gasketlab/disjoint_sets.hpp"
#include "gasketlab/error.hpp"
#include "gasketlab/exact.hpp"

namespace gasketlab {

BaseGraph BaseGraph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 2) {
        throw std::invalid_argument("base graph needs at least 2 vertices, got " + std::to_string(n));
    }
    if (n > max_order) {
        throw std::invalid_argument("base graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                                    std::to_string(max_order));
    }
    BaseGraph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " has a vertex outside 1.." + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u) + " (simple graphs only)");
        }
        g.adj_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
        g.adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
    }
    std::size_t degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        degree_sum += static_cast<std::size_t>(std::popcount(g.adj_[static_cast<std::size_t>(v)]));
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

int BaseGraph::degree(Vertex v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

std::vector<Vertex> BaseGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto bits = adj_[static_cast<std::size_t>(v)]; bits != 0; bits &= bits - 1) {
        out.push_back(std::countr_zero(bits));
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> BaseGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (auto v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

DenseGraph BaseGraph::to_dense() const {
    DenseGraph d(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges()) {
        d.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return d;
}

int clique_number_exact(const BaseGraph& g) { return static_cast<int>(exact::clique_number(g.to_dense())); }

int chromatic_number_exact(const BaseGraph& g) { return exact::chromatic_number(g.to_dense()); }

std::optional<std::vector<int>> find_coloring(const BaseGraph& g, int k) {
    return exact::lex_first_coloring(g.to_dense(), k);
}

std::optional<std::vector<int>> bipartition(const BaseGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const auto u = frontier.front();
            frontier.pop();
            for (auto v : g.neighbors(u)) {
                auto& cv = color[static_cast<std::size_t>(v)];
                const auto cu = color[static_cast<std::size_t>(u)];
                if (cv < 0) {
                    cv = 1 - cu;
                    frontier.push(v);
                } else if (cv == cu) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_proper_coloring(const BaseGraph& g, std::span<const int> colors) {
    if (colors.size() != static_cast<std::size_t>(g.order())) {
        return false;
    }
    for (auto [u, v] : g.edges()) {
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) {
            return false;
        }
    }
    return true;
}

GraphClass classify(const BaseGraph& g) {
    GraphClass c;
    DisjointSets sets(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        sets.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    c.components = sets.set_count();
    c.triangle_free = true;
    for (auto [u, v] : g.edges()) {
        if ((g.neighbor_mask(u) & g.neighbor_mask(v)) != 0) {
            c.triangle_free = false;
            break;
        }
    }
    c.acyclic = g.edge_count() + c.components == static_cast<std::size_t>(g.order());
    c.bipartite = bipartition(g).has_value();
    c.omega = clique_number_exact(g);
    c.chi = chromatic_number_exact(g);
    return c;
}

// --- graph6 ------------------------------------------------------------------

namespace {

constexpr int graph6_offset = 63;

bool printable(char ch) { return ch >= 63 && ch <= 126; }

} // namespace

BaseGraph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) {
        line.remove_prefix(header.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.remove_suffix(1);
    }
    if (line.empty()) {
        throw ParseError("graph6: empty record");
    }
    for (char ch : line) {
        if (!printable(ch)) {
            throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(ch)) + " outside 63..126");
        }
    }
    std::size_t pos = 0;
    long n = 0;
    if (line[0] != 126) {
        n = line[0] - graph6_offset;
        pos = 1;
    } else if (line.size() >= 4 && line[1] != 126) {
        for (std::size_t i = 1; i <= 3; ++i) {
            n = (n << 6) | (line[i] - graph6_offset);
        }
        pos = 4;
    } else {
        throw ParseError("graph6: orders above 258047 are not supported");
    }
    if (n < 2) {
        throw ParseError("graph6: order " + std::to_string(n) + " is below 2");
    }
    if (n > BaseGraph::max_order) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(BaseGraph::max_order));
    }
    const auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
    const auto expected = pos + (bits + 5) / 6;
    if (line.size() != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(line.size()));
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = line[pos + k / 6] - graph6_offset;
            if ((byte >> (5 - k % 6)) & 1) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    return BaseGraph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const BaseGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + graph6_offset));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_offset));
        }
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + graph6_offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_offset));
    }
    return out;
}

// --- JSON and shorthand ----------------------------------------------------------

BaseGraph parse_edge_list_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("edge-list JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
        !doc["edges"].is_array()) {
        throw ParseError(R"(edge-list JSON must look like {"n": int, "edges": [[u, v], ...]})");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError("edge-list JSON: each edge must be a pair of integers, got " + e.dump());
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return BaseGraph::from_edge_list(doc["n"].get<int>(), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge-list JSON: ") + e.what());
    }
}

std::string to_edge_list_json(const BaseGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u + 1, v + 1});
    }
    nlohmann::json doc;
    doc["n"] = g.order();
    doc["edges"] = std::move(edges);
    return doc.dump();
}

BaseGraph parse_edge_shorthand(std::string_view text, int n) {
    std::vector<std::pair<int, int>> edges;
    int order = n;
    auto parse_int = [&](std::string_view token) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw ParseError("edge shorthand: '" + std::string(token) + "' is not a vertex number");
        }
        return value;
    };
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw ParseError("edge shorthand: expected u-v, got '" + std::string(item) + "'");
        }
        const int u = parse_int(item.substr(0, dash));
        const int v = parse_int(item.substr(dash + 1));
        order = std::max({order, u, v});
        edges.emplace_back(u, v);
    }
    try {
        return BaseGraph::from_edge_list(order, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge shorthand: ") + e.what());
    }
}

} // namespace gasketlab
