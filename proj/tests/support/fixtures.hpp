#pragma once

// Test-side graph builders and brute-force oracles. Nothing here calls the
// library's construction code, so the unit tests can compare against it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gasketlab/base_graph.hpp"
#include "gasketlab/labeling.hpp"

namespace fixtures {

using gasketlab::BaseGraph;
using gasketlab::Word;

inline BaseGraph graph(int n, std::vector<std::pair<int, int>> edges) {
    return BaseGraph::from_edge_list(n, edges);
}

inline BaseGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return graph(n, edges);
}

inline BaseGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u) {
        edges.emplace_back(u, u + 1);
    }
    return graph(n, edges);
}

inline BaseGraph cycle(int n) {
    auto edges = std::vector<std::pair<int, int>>{{n, 1}};
    for (int u = 1; u < n; ++u) {
        edges.emplace_back(u, u + 1);
    }
    return graph(n, edges);
}

inline BaseGraph edgeless(int n) { return graph(n, {}); }

inline std::vector<std::string> corpus_lines(const std::string& name) {
    std::ifstream in(std::string(GASKETLAB_DATA_DIR) + "/" + name + ".g6");
    if (!in) {
        throw std::runtime_error("missing corpus " + name);
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    return lines;
}

inline std::vector<BaseGraph> corpus(const std::string& name) {
    std::vector<BaseGraph> out;
    for (const auto& line : corpus_lines(name)) {
        out.push_back(gasketlab::parse_graph6(line));
    }
    return out;
}

// All connected graphs with 2 <= n <= max_n.
inline std::vector<BaseGraph> connected_upto(int max_n) {
    std::vector<BaseGraph> out;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& g : corpus("connected_n" + std::to_string(n))) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

// graph6 written straight from the format description: N(n) then the upper
// triangle column by column, six bits per character.
inline std::string encode_graph6(int n, const std::set<std::pair<int, int>>& edges) {
    std::string out(1, static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits.push_back(edges.contains({i, j}) ? 1 : 0);
        }
    }
    while (bits.size() % 6 != 0) {
        bits.push_back(0);
    }
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            value = value * 2 + bits[k + b];
        }
        out += static_cast<char>(value + 63);
    }
    return out;
}

inline std::vector<Word> all_words(int n, int t) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(t), 0);
    while (true) {
        out.push_back(w);
        int p = t - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == n - 1) {
            w[static_cast<std::size_t>(p--)] = 0;
        }
        if (p < 0) {
            return out;
        }
        ++w[static_cast<std::size_t>(p)];
    }
}

// Word rule: equal before some position p, an edge of G at p, and after p
// each word repeats the other's letter at p.
inline bool rule_adjacent(const BaseGraph& g, const Word& a, const Word& b) {
    std::size_t p = 0;
    while (p < a.size() && a[p] == b[p]) {
        ++p;
    }
    if (p == a.size() || !g.adjacent(a[p], b[p])) {
        return false;
    }
    for (std::size_t q = p + 1; q < a.size(); ++q) {
        if (a[q] != b[p] || b[q] != a[p]) {
            return false;
        }
    }
    return true;
}

inline std::size_t first_difference(const Word& a, const Word& b) {
    return static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin());
}

// S[G,t] as the quotient of brute-force S(G,t) by its linking edges (those
// differing before the last letter), merged with a plain union-find.
struct Quotient {
    std::vector<std::set<Word>> classes;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::size_t components = 0;
};

inline Quotient contract_linking_edges(const BaseGraph& g, int t) {
    const auto words = all_words(g.order(), t);
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> all_edges;
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            if (!rule_adjacent(g, words[a], words[b])) {
                continue;
            }
            if (first_difference(words[a], words[b]) + 1 < static_cast<std::size_t>(t)) {
                parent[find(a)] = find(b);
            } else {
                all_edges.emplace_back(a, b);
            }
        }
    }
    std::map<std::size_t, std::size_t> class_of_root;
    Quotient q;
    std::vector<std::size_t> class_of(words.size());
    for (std::size_t a = 0; a < words.size(); ++a) {
        auto [it, fresh] = class_of_root.emplace(find(a), q.classes.size());
        if (fresh) {
            q.classes.emplace_back();
        }
        q.classes[it->second].insert(words[a]);
        class_of[a] = it->second;
    }
    std::vector<std::size_t> comp(q.classes.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find_comp = [&](std::size_t x) {
        while (comp[x] != x) {
            x = comp[x] = comp[comp[x]];
        }
        return x;
    };
    for (auto [a, b] : all_edges) {
        auto u = class_of[a];
        auto v = class_of[b];
        if (u != v) {
            q.edges.insert(std::minmax(u, v));
            comp[find_comp(u)] = find_comp(v);
        }
    }
    for (std::size_t c = 0; c < comp.size(); ++c) {
        q.components += find_comp(c) == c ? 1 : 0;
    }
    return q;
}

inline Word word(std::initializer_list<int> one_based) {
    Word w;
    for (int x : one_based) {
        w.push_back(static_cast<gasketlab::Letter>(x - 1));
    }
    return w;
}

} // namespace fixtures
